#include "cuttree/graph.hpp"

#include <algorithm>
#include <map>

#include "cuttree/errors.hpp"

namespace cuttree {

WeightedGraph::WeightedGraph(std::size_t n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), adj_(n), labels_(std::move(labels)) {
    if (!labels_.empty() && labels_.size() != n_)
        throw InputError("label table has " + std::to_string(labels_.size()) + " entries for " +
                         std::to_string(n_) + " vertices");

    std::map<std::pair<Vertex, Vertex>, Rational> merged;
    for (auto& e : edges) {
        if (e.u >= n_ || e.v >= n_)
            throw InputError("edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                             " has an endpoint outside 0.." + std::to_string(n_ == 0 ? 0 : n_ - 1));
        if (e.w.sign() < 0)
            throw InputError("negative weight " + e.w.to_string() + " on edge " + std::to_string(e.u) +
                             "-" + std::to_string(e.v));
        if (e.u == e.v || e.w.sign() == 0) continue;
        merged[std::minmax(e.u, e.v)] += e.w;
    }

    edges_.reserve(merged.size());
    for (auto& [key, w] : merged) {
        adj_[key.first].emplace_back(key.second, edges_.size());
        adj_[key.second].emplace_back(key.first, edges_.size());
        edges_.push_back(Edge{key.first, key.second, std::move(w)});
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

std::string WeightedGraph::label(Vertex v) const {
    if (v >= n_) throw InputError("vertex " + std::to_string(v) + " out of range");
    return labels_.empty() ? std::to_string(v) : labels_[v];
}

bool WeightedGraph::is_connected() const { return components().size() <= 1; }

std::vector<std::vector<Vertex>> WeightedGraph::components() const {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(n_, false);
    for (Vertex start = 0; start < n_; ++start) {
        if (seen[start]) continue;
        std::vector<Vertex> comp{start};
        seen[start] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (const auto& [w, idx] : adj_[comp[head]])
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

WeightedGraph WeightedGraph::induced(const std::vector<Vertex>& vertices) const {
    std::vector<std::size_t> index(n_, n_);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= n_) throw InputError("induced: vertex out of range");
        index[vertices[i]] = i;
    }
    std::vector<Edge> sub;
    for (const auto& e : edges_)
        if (index[e.u] != n_ && index[e.v] != n_) sub.push_back(Edge{index[e.u], index[e.v], e.w});
    std::vector<std::string> labels;
    if (!labels_.empty())
        for (Vertex v : vertices) labels.push_back(labels_[v]);
    return WeightedGraph(vertices.size(), std::move(sub), std::move(labels));
}

Rational WeightedGraph::total_weight() const {
    Rational sum;
    for (const auto& e : edges_) sum += e.w;
    return sum;
}

Rational cut_value(const WeightedGraph& g, const Cut& x) {
    if (x.size() != g.size())
        throw InputError("cut over " + std::to_string(x.size()) + " vertices applied to a graph with " +
                         std::to_string(g.size()));
    Rational sum;
    for (const auto& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v)) sum += e.w;
    return sum;
}

std::vector<Edge> out_edges(const WeightedGraph& g, const Cut& x) {
    if (x.size() != g.size())
        throw InputError("cut over " + std::to_string(x.size()) + " vertices applied to a graph with " +
                         std::to_string(g.size()));
    std::vector<Edge> out;
    for (const auto& e : g.edges())
        if (x.contains(e.u) != x.contains(e.v)) out.push_back(e);
    return out;
}

}  // namespace cuttree
