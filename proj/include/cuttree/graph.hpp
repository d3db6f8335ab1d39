#pragma once

#include <string>
#include <utility>
#include <vector>

#include "cuttree/cut.hpp"
#include "cuttree/rational.hpp"

namespace cuttree {

struct Edge {
    Vertex u = 0;
    Vertex v = 0;
    Rational w;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple undirected graph with strictly positive exact weights.
///
/// Construction normalizes the raw edge list: loops and zero-weight edges are
/// dropped, parallel edges are merged by summing their weights, and each edge
/// is stored with u < v, sorted by (u, v). Negative weights and out-of-range
/// endpoints are rejected. Connectivity is not part of the type; callers that
/// need it check is_connected().
class WeightedGraph {
public:
    WeightedGraph() = default;
    WeightedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels = {});

    std::size_t size() const { return n_; }
    const std::vector<Edge>& edges() const { return edges_; }
    /// (neighbor, edge index) pairs sorted by neighbor.
    const std::vector<std::pair<Vertex, std::size_t>>& incident(Vertex v) const { return adj_.at(v); }

    /// Label of v, or its index when no labels were supplied.
    std::string label(Vertex v) const;
    bool has_labels() const { return !labels_.empty(); }

    bool is_connected() const;
    /// Vertex sets of the connected components, ordered by smallest member.
    std::vector<std::vector<Vertex>> components() const;
    /// Subgraph induced by `vertices`, reindexed 0..k-1 in the given order.
    WeightedGraph induced(const std::vector<Vertex>& vertices) const;

    Rational total_weight() const;

private:
    std::size_t n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj_;
    std::vector<std::string> labels_;
};

/// Sum of weights of edges with exactly one endpoint in X.
Rational cut_value(const WeightedGraph& g, const Cut& x);
/// The edges with exactly one endpoint in X, in edge-list order.
std::vector<Edge> out_edges(const WeightedGraph& g, const Cut& x);

}  // namespace cuttree
