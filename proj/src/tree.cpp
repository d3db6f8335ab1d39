#include "cuttree/tree.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"

namespace cuttree {

std::vector<std::vector<std::pair<Vertex, std::size_t>>> GomoryHuTree::adjacency() const {
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto& e = edges[i];
        if (e.u >= n || e.v >= n) throw InputError("tree edge endpoint out of range");
        adj[e.u].emplace_back(e.v, i);
        adj[e.v].emplace_back(e.u, i);
    }
    return adj;
}

bool GomoryHuTree::is_spanning_tree() const {
    if (n == 0) return edges.empty();
    if (edges.size() != n - 1 || root >= n) return false;
    for (const auto& e : edges)
        if (e.u >= n || e.v >= n || e.u == e.v) return false;
    const auto adj = adjacency();
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const auto& [y, idx] : adj[x])
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
    }
    return reached == n;
}

Cut GomoryHuTree::fundamental_cut(std::size_t edge_index) const {
    if (edge_index >= edges.size()) throw InputError("tree edge index out of range");
    const auto adj = adjacency();
    // Grow the side of e.v without crossing e, then orient away from the root.
    const auto& e = edges[edge_index];
    Cut side(n);
    side.insert(e.v);
    std::vector<Vertex> stack{e.v};
    while (!stack.empty()) {
        const Vertex x = stack.back();
        stack.pop_back();
        for (const auto& [y, idx] : adj[x])
            if (idx != edge_index && !side.contains(y)) {
                side.insert(y);
                stack.push_back(y);
            }
    }
    return side.contains(root) ? side.complement() : side;
}

std::size_t GomoryHuTree::path_minimum_edge(Vertex u, Vertex v) const {
    if (u == v) throw InputError("path_minimum_edge: u == v");
    const auto adj = adjacency();
    std::vector<std::size_t> via(n, edges.size());
    std::vector<bool> seen(n, false);
    std::vector<Vertex> queue{u};
    seen[u] = true;
    for (std::size_t head = 0; head < queue.size() && !seen[v]; ++head)
        for (const auto& [y, idx] : adj[queue[head]])
            if (!seen[y]) {
                seen[y] = true;
                via[y] = idx;
                queue.push_back(y);
            }
    if (!seen[v]) throw InputError("tree is not connected");

    std::vector<std::size_t> path;
    for (Vertex x = v; x != u;) {
        const auto idx = via[x];
        path.push_back(idx);
        x = edges[idx].u == x ? edges[idx].v : edges[idx].u;
    }
    std::reverse(path.begin(), path.end());
    std::size_t best = path.front();
    for (auto idx : path)
        if (edges[idx].lambda < edges[best].lambda) best = idx;
    return best;
}

std::vector<std::vector<Rational>> GomoryHuTree::path_minimum_matrix() const {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    const auto adj = adjacency();
    // One traversal per source carrying the running minimum.
    for (Vertex s = 0; s < n; ++s) {
        std::vector<bool> seen(n, false);
        std::vector<std::pair<Vertex, std::optional<Rational>>> stack{{s, std::nullopt}};
        seen[s] = true;
        while (!stack.empty()) {
            auto [x, low] = std::move(stack.back());
            stack.pop_back();
            if (low) m[s][x] = *low;
            for (const auto& [y, idx] : adj[x]) {
                if (seen[y]) continue;
                seen[y] = true;
                const Rational& w = edges[idx].lambda;
                stack.emplace_back(y, (!low || w < *low) ? w : *low);
            }
        }
    }
    return m;
}

std::vector<Vertex> GomoryHuTree::leaves() const {
    std::vector<std::size_t> degree(n, 0);
    for (const auto& e : edges) {
        ++degree[e.u];
        ++degree[e.v];
    }
    std::vector<Vertex> out;
    for (Vertex v = 0; v < n; ++v)
        if (degree[v] == 1) out.push_back(v);
    return out;
}

}  // namespace cuttree
