#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "cuttree/engine.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/tree.hpp"

namespace cuttree {

// ---------------------------------------------------------------------------
// Uncrossing
// ---------------------------------------------------------------------------

struct UncrossOutcome {
    Cut cut;
    /// 1: X is a u-v cut, 2: X is a v-u cut, 3: u, v in X, 4: u, v outside X.
    int case_number = 0;
    /// Whether the membership test of the case held: t in Y for cases 1 and 3,
    /// s in Y for cases 2 and 4.
    bool second_branch = false;
};

/// Given an optimal s-t cut X and an optimal u-v cut Y, returns an optimal u-v
/// cut that does not cross X (it is disjoint from X, nested with X, or covers
/// V together with X). The result's optimality is re-checked against the
/// engine; a failure raises InternalConsistencyError.
UncrossOutcome uncross_detailed(const CutEngine& engine, const Cut& x, Vertex s, Vertex t, const Cut& y, Vertex u,
                                Vertex v);
Cut uncross(const CutEngine& engine, const Cut& x, Vertex s, Vertex t, const Cut& y, Vertex u, Vertex v);

// ---------------------------------------------------------------------------
// The order on an optimal cut and its minimal elements
// ---------------------------------------------------------------------------

/// u precedes v in X iff X_{u,v} is not contained in X. Requires u != v, both in X.
bool prec(const CutEngine& engine, const Cut& x, Vertex u, Vertex v);

/// A minimal element of X under prec. Ties go to the lowest index. For X = V
/// the order is trivial and `root` is returned. When X is an optimal s-t cut
/// and t is given, only the level set {x : lambda(x, t) = b(X)} is searched
/// and the result s' satisfies lambda(s', t) = b(X).
Vertex minimal_vertex(const CutEngine& engine, const Cut& x, std::optional<Vertex> t, Vertex root = 0);

/// { X_{u,s} : u in X \ {s} }, deduplicated and sorted. With X = V this is the
/// family C_s.
std::vector<Cut> smallest_cut_family(const CutEngine& engine, Vertex s, const Cut& x);

/// The inclusion-maximal members of smallest_cut_family(s, X). They partition
/// X \ {s}; both that and the laminarity of the family are asserted. Throws
/// PreconditionViolation if some X_{u,s} leaves X \ {s}, i.e. s was not
/// minimal in X.
std::vector<Cut> partition_family(const CutEngine& engine, Vertex s, const Cut& x);

// ---------------------------------------------------------------------------
// Tree builders
// ---------------------------------------------------------------------------

/// Recursive partition construction: at node (s, X) split X \ {s} by
/// partition_family, hang a minimal vertex of every part below s, recurse.
/// Works for any engine, i.e. for graphs and for abstract set functions.
GomoryHuTree build_tree_paper(const CutEngine& engine, Vertex root = 0);

/// The Gomory-Hu contraction algorithm: refine a tree of vertex groups with
/// one max-flow per split, contracting the rest of the tree around the group
/// being split. Requires a connected graph.
GomoryHuTree build_tree_classical(const WeightedGraph& g, Vertex root = 0);

/// Rewrites edges as (parent, child) pairs in breadth-first order from the root,
/// children ascending.
void orient_from_root(GomoryHuTree& tree);

/// Joins trees built on the connected components of g into one tree on
/// V(g). Components are given by g.components(); tree k is over the reindexed
/// component k. Components are chained through their smallest vertices with
/// lambda 0.
GomoryHuTree join_component_trees(const WeightedGraph& g, const std::vector<GomoryHuTree>& parts, Vertex root = 0);

// ---------------------------------------------------------------------------
// Laminar families
// ---------------------------------------------------------------------------

/// A cut X* separating u and v optimally such that family + X* stays laminar.
/// Starts from X_{u,v} (or X_{v,u}), absorbs the crossing members that contain
/// the oriented source, then the crossing members avoiding both ends.
LaminarMember laminar_insertion(const CutEngine& engine, const LaminarFamily& family, Vertex u, Vertex v);

/// True when some member (or its complement) is an optimal u-v cut.
bool separates_optimally(const CutEngine& engine, const LaminarFamily& family, Vertex u, Vertex v);

/// Processes the pairs (normalized to u < v, deduplicated, lexicographic) and
/// inserts a cut for each one the family does not yet separate optimally.
LaminarFamily build_laminar_family(const CutEngine& engine, std::span<const std::pair<Vertex, Vertex>> pairs);
LaminarFamily build_laminar_family(const CutEngine& engine);

}  // namespace cuttree
