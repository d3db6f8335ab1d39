#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "cuttree/engine.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/report.hpp"
#include "cuttree/value_table.hpp"

namespace cuttree {

/// A set function b : P(V) -> R+ u {inf} on V = {0..ground_size-1}.
/// `evaluate` must be deterministic.
struct SetFunctionOracle {
    std::size_t ground_size = 0;
    std::function<ExtRational(const Cut&)> evaluate;
    std::string name;
    /// Set for graph cut functions; enables the Gray-code tabulation.
    std::shared_ptr<const WeightedGraph> graph;
};

/// b(X) = cut_value(g, X).
SetFunctionOracle graph_cut_oracle(WeightedGraph g);
/// b(X) = |X| * |V \ X|.
SetFunctionOracle pairs_oracle(std::size_t n);
/// Lookup in an explicit table of 2^n values.
SetFunctionOracle table_oracle(std::shared_ptr<const ValueTable> table, std::string name = "table");

/// Reads `subset-bitmask value` lines (value may be `inf`); every one of the
/// 2^n masks must appear exactly once. n is inferred from the line count.
ValueTable read_value_table(std::istream& in, bool allow_large = false);
ValueTable read_value_table_file(const std::string& path, bool allow_large = false);

ValueTable tabulate(const SetFunctionOracle& b, bool allow_large = false);

enum class CheckMode { exhaustive, sampled };

struct CheckOptions {
    CheckMode mode = CheckMode::exhaustive;
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    bool allow_large = false;
};

/// Checks what an abstract cut tree needs from b: zero set, symmetry,
/// submodularity, posimodularity, monotone continuity (vacuous on a finite
/// ground set) and finite separability. Failures carry a concrete witness.
Report check_properties(const SetFunctionOracle& b, const CheckOptions& options = {});
Report check_properties(const ValueTable& table);

struct OptimalCuts {
    ExtRational lambda;
    std::vector<Cut> minimizers;  // ascending by mask
};

ExtRational lambda_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large = false);
OptimalCuts optimal_cuts_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large = false);
/// Intersection of all minimizers; throws PropertyViolation if that
/// intersection is not itself a minimizer.
Cut smallest_optimal_cut_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large = false);
/// Union of all minimizers, same failure mode.
Cut largest_optimal_cut_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large = false);

/// CutEngine that answers every query by exhaustive enumeration of a value
/// table. Used for abstract oracles and as the brute-force reference for
/// graphs.
class OracleEngine final : public CutEngine {
public:
    explicit OracleEngine(std::shared_ptr<const ValueTable> table, std::string name = "exhaustive");
    explicit OracleEngine(const SetFunctionOracle& b, bool allow_large = false);
    explicit OracleEngine(const WeightedGraph& g, bool allow_large = false);

    const ValueTable& table() const { return *table_; }
    std::size_t size() const override { return table_->ground_size(); }
    ExtRational value(const Cut& x) const override { return table_->at(x); }
    ExtRational lambda(Vertex u, Vertex v) const override { return pair(u, v).lambda; }
    Cut smallest(Vertex u, Vertex v) const override { return pair(u, v).smallest; }
    Cut largest(Vertex u, Vertex v) const override { return pair(u, v).largest; }
    std::string_view name() const override { return name_; }

private:
    struct PairEntry {
        ExtRational lambda;
        Cut smallest;
        Cut largest;
    };
    const PairEntry& pair(Vertex u, Vertex v) const;

    std::shared_ptr<const ValueTable> table_;
    std::string name_;
    mutable std::mutex mutex_;
    mutable std::map<std::pair<Vertex, Vertex>, PairEntry> cache_;
};

}  // namespace cuttree
