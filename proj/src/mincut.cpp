#include "cuttree/mincut.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

void require_pair(const WeightedGraph& g, Vertex u, Vertex v) {
    if (u >= g.size() || v >= g.size())
        throw InputError("vertex out of range 0.." + std::to_string(g.size() == 0 ? 0 : g.size() - 1));
    if (u == v) throw InputError("source and sink must differ (both " + std::to_string(u) + ")");
}

// Arc 2i runs e.u -> e.v, arc 2i+1 runs e.v -> e.u, both with capacity e.w.
// flow[2i] == -flow[2i+1] throughout.
class Network {
public:
    explicit Network(const WeightedGraph& g) : g_(g), flow_(2 * g.edges().size()) {}

    Vertex head(std::size_t arc) const {
        const auto& e = g_.edges()[arc / 2];
        return arc % 2 == 0 ? e.v : e.u;
    }
    Rational residual(std::size_t arc) const { return g_.edges()[arc / 2].w - flow_[arc]; }
    bool has_residual(std::size_t arc) const { return flow_[arc] < g_.edges()[arc / 2].w; }

    std::size_t arc_from(Vertex x, std::size_t edge) const { return 2 * edge + (g_.edges()[edge].u == x ? 0 : 1); }

    void push(std::size_t arc, const Rational& amount) {
        flow_[arc] += amount;
        flow_[arc ^ 1U] -= amount;
    }

    // BFS over residual arcs from s; parent arc per reached vertex.
    Cut reach_from(Vertex s, std::vector<std::size_t>* parent) const {
        Cut seen(g_.size());
        seen.insert(s);
        std::vector<Vertex> queue{s};
        for (std::size_t head_i = 0; head_i < queue.size(); ++head_i) {
            const Vertex x = queue[head_i];
            for (const auto& [y, edge] : g_.incident(x)) {
                const auto arc = arc_from(x, edge);
                if (seen.contains(y) || !has_residual(arc)) continue;
                seen.insert(y);
                if (parent) (*parent)[y] = arc;
                queue.push_back(y);
            }
        }
        return seen;
    }

    // Vertices with a residual path to t.
    Cut reach_to(Vertex t) const {
        Cut seen(g_.size());
        seen.insert(t);
        std::vector<Vertex> queue{t};
        for (std::size_t head_i = 0; head_i < queue.size(); ++head_i) {
            const Vertex x = queue[head_i];
            for (const auto& [y, edge] : g_.incident(x)) {
                const auto arc = arc_from(y, edge);  // y -> x
                if (seen.contains(y) || !has_residual(arc)) continue;
                seen.insert(y);
                queue.push_back(y);
            }
        }
        return seen;
    }

private:
    const WeightedGraph& g_;
    std::vector<Rational> flow_;
};

}  // namespace

MaxFlowResult max_flow(const WeightedGraph& g, Vertex u, Vertex v) {
    require_pair(g, u, v);
    Network net(g);
    Rational total;
    std::vector<std::size_t> parent(g.size());
    for (;;) {
        const Cut reached = net.reach_from(u, &parent);
        if (!reached.contains(v)) break;
        Rational bottleneck;
        bool first = true;
        for (Vertex x = v; x != u;) {
            const auto arc = parent[x];
            const Rational r = net.residual(arc);
            if (first || r < bottleneck) bottleneck = r;
            first = false;
            x = net.head(arc ^ 1U);
        }
        for (Vertex x = v; x != u;) {
            const auto arc = parent[x];
            net.push(arc, bottleneck);
            x = net.head(arc ^ 1U);
        }
        total += bottleneck;
    }
    return MaxFlowResult{total, net.reach_from(u, nullptr), net.reach_to(v)};
}

CutPairResult min_cut_pair(const WeightedGraph& g, Vertex u, Vertex v) {
    auto flow = max_flow(g, u, v);
    return CutPairResult{std::move(flow.value), std::move(flow.source_side), flow.sink_side.complement()};
}

Rational lambda(const WeightedGraph& g, Vertex u, Vertex v) { return max_flow(g, u, v).value; }

Cut smallest_optimal_cut(const WeightedGraph& g, Vertex u, Vertex v) { return max_flow(g, u, v).source_side; }

Cut largest_optimal_cut(const WeightedGraph& g, Vertex u, Vertex v) {
    return max_flow(g, u, v).sink_side.complement();
}

CutPairResult FlowEngine::pair(Vertex u, Vertex v) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find({u, v}); it != cache_.end()) return it->second;
    }
    auto result = min_cut_pair(g_, u, v);
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::pair{u, v}, std::move(result)).first->second;
}

}  // namespace cuttree
