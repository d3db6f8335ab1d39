#pragma once

#include <optional>
#include <vector>

#include "cuttree/cut.hpp"
#include "cuttree/rational.hpp"

namespace cuttree {

struct TreeEdge {
    Vertex u = 0;
    Vertex v = 0;
    Rational lambda;

    friend bool operator==(const TreeEdge&, const TreeEdge&) = default;
};

/// A tree on {0..n-1} carrying a cut value per edge. The fundamental cut of an
/// edge is the vertex set of the component of T - e that avoids the root.
struct GomoryHuTree {
    std::size_t n = 0;
    std::vector<TreeEdge> edges;
    Vertex root = 0;

    bool is_spanning_tree() const;
    /// Requires is_spanning_tree().
    Cut fundamental_cut(std::size_t edge_index) const;
    /// Index of the minimum-lambda edge on the u-v tree path (first minimum
    /// walking from u). Requires u != v and a spanning tree.
    std::size_t path_minimum_edge(Vertex u, Vertex v) const;
    /// matrix[u][v] = minimum lambda on the tree path; diagonal left at 0.
    std::vector<std::vector<Rational>> path_minimum_matrix() const;
    /// Vertices of degree one, ascending.
    std::vector<Vertex> leaves() const;

private:
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adjacency() const;
};

struct LaminarMember {
    Cut cut;
    Vertex s = 0;  // cut is an optimal s-t cut
    Vertex t = 0;
    Rational value;
};

struct LaminarFamily {
    std::size_t n = 0;
    std::vector<LaminarMember> members;
};

}  // namespace cuttree
