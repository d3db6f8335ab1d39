#pragma once

#include <span>
#include <utility>
#include <vector>

#include "cuttree/engine.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/report.hpp"
#include "cuttree/set_function.hpp"
#include "cuttree/tree.hpp"
#include "cuttree/value_table.hpp"

namespace cuttree {

/// Exact minimum over all u-v cuts and the complete list of minimizers.
OptimalCuts brute_force_optimal_cuts(const ValueTable& table, Vertex u, Vertex v);
OptimalCuts brute_force_optimal_cuts(const WeightedGraph& g, Vertex u, Vertex v, bool allow_large = false);

/// lambda for every ordered pair (diagonal unset), computed with `threads`
/// workers. The engine must be thread-safe; results do not depend on threads.
std::vector<std::vector<ExtRational>> lambda_matrix(const CutEngine& engine, unsigned threads = 1);

enum class TreeCheck { edges_only, all_pairs };

/// Edge check: for every tree edge uv, the stored lambda, the value of its
/// fundamental cut, and lambda(u, v) from the engine all agree. All-pairs
/// additionally compares the tree-path minimum with lambda(u, v) for every
/// pair. Throws InputError when the tree does not span the engine's ground set.
Report verify_gh_tree(const CutEngine& engine, const GomoryHuTree& tree, TreeCheck mode = TreeCheck::edges_only,
                      unsigned threads = 1);

/// Pairwise disjoint-or-nested check; each crossing pair is a failure.
Report verify_laminar(const LaminarFamily& family);

/// Members are optimal for their witnesses, and every requested pair is
/// separated optimally by some member.
Report verify_separation(const CutEngine& engine, const LaminarFamily& family,
                         std::span<const std::pair<Vertex, Vertex>> pairs);
Report verify_separation(const CutEngine& engine, const LaminarFamily& family);

/// Sorted distinct lambda values over all pairs. Throws PropertyViolation if
/// there are more than n - 1 of them.
std::vector<ExtRational> lambda_spectrum(const CutEngine& engine, unsigned threads = 1);

}  // namespace cuttree
