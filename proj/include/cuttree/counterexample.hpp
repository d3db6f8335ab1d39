#pragma once

#include <iosfwd>
#include <vector>

#include "cuttree/graph.hpp"

namespace cuttree {

/// Graph families the generator knows. Only the hub-and-path graph exists so
/// far; other families plug in here.
enum class CounterexampleFamily { hub_and_path };

/// Path v_0 ... v_N plus a hub joined to every path vertex. Vertex v_k has
/// index k, the hub has index N + 1.
struct TruncationSpec {
    std::size_t N = 1;
    CounterexampleFamily family = CounterexampleFamily::hub_and_path;

    Vertex path_vertex(std::size_t k) const { return k; }
    Vertex hub() const { return N + 1; }
    std::size_t vertex_count() const { return N + 2; }
};

/// Weight of the path edge v_n v_{n+1}: 2 for n = 0, then previous + n + 1,
/// i.e. (n^2 + 3n + 4) / 2.
Rational edge_weight(long n);

/// Path edges with edge_weight, hub edges with weight 1. Requires N >= 1.
WeightedGraph generate_truncation(const TruncationSpec& spec);

/// {v_0, ..., v_k} as a cut of the truncation.
Cut prefix_cut(const TruncationSpec& spec, std::size_t k);

struct ChainPair {
    std::size_t n = 0;  // path indices, n < m
    std::size_t m = 0;
    Rational lambda;
    std::vector<Cut> minimizers;
    bool unique = false;          // exactly one optimal v_n-v_m cut
    bool prefix_is_unique = false;  // ... and it is {v_0..v_n}
};

struct ChainAnalysis {
    std::size_t N = 0;
    std::vector<ChainPair> pairs;  // lexicographic in (n, m)
    /// Longest k such that each of V_0, ..., V_{k-1} is the unique optimal cut
    /// of some pair (v_n, v_m), m > n.
    std::size_t chain_length = 0;
    /// Largest M such that every pair n < m <= M has V_n as its unique optimal
    /// cut (0 when even (v_0, v_1) fails).
    std::size_t interior_limit = 0;
    /// The finite truncation always has a tree; recorded as checked, not assumed.
    bool truncation_has_tree = false;
};

inline constexpr std::size_t kMaxAnalyzedTruncation = 16;

/// Brute-force analysis of every path pair. Requires 1 <= N <= 16.
ChainAnalysis analyze_chain(const TruncationSpec& spec);

void write_chain_report(std::ostream& out, const TruncationSpec& spec, const ChainAnalysis& analysis);

}  // namespace cuttree
