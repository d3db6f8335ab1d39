#pragma once

#include <map>
#include <mutex>
#include <utility>

#include "cuttree/engine.hpp"
#include "cuttree/graph.hpp"

namespace cuttree {

struct MaxFlowResult {
    Rational value;
    Cut source_side;  // reachable from u in the final residual network
    Cut sink_side;    // vertices that can still reach v in the residual network
};

/// Exact maximum u-v flow, each undirected edge acting as two opposite arcs of
/// the edge's capacity. Shortest augmenting paths, BFS in vertex-index order.
MaxFlowResult max_flow(const WeightedGraph& g, Vertex u, Vertex v);

struct CutPairResult {
    Rational lambda;
    Cut smallest;  // X_{u,v}
    Cut largest;   // Y_{u,v}
};

CutPairResult min_cut_pair(const WeightedGraph& g, Vertex u, Vertex v);
Rational lambda(const WeightedGraph& g, Vertex u, Vertex v);
Cut smallest_optimal_cut(const WeightedGraph& g, Vertex u, Vertex v);
Cut largest_optimal_cut(const WeightedGraph& g, Vertex u, Vertex v);

/// CutEngine over a graph, answering pair queries with max-flow and caching
/// them per ordered pair.
class FlowEngine final : public CutEngine {
public:
    explicit FlowEngine(WeightedGraph g) : g_(std::move(g)) {}

    const WeightedGraph& graph() const { return g_; }
    std::size_t size() const override { return g_.size(); }
    ExtRational value(const Cut& x) const override { return cut_value(g_, x); }
    ExtRational lambda(Vertex u, Vertex v) const override { return pair(u, v).lambda; }
    Cut smallest(Vertex u, Vertex v) const override { return pair(u, v).smallest; }
    Cut largest(Vertex u, Vertex v) const override { return pair(u, v).largest; }
    std::string_view name() const override { return "max-flow"; }

    CutPairResult pair(Vertex u, Vertex v) const;

private:
    WeightedGraph g_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Vertex, Vertex>, CutPairResult> cache_;
};

}  // namespace cuttree
