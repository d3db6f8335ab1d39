#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cuttree/cut.hpp"
#include "cuttree/graph.hpp"
#include "cuttree/rational.hpp"

namespace cuttree {

inline constexpr std::size_t kDefaultEnumerationCap = 12;
inline constexpr std::size_t kOptInEnumerationCap = 20;
inline constexpr std::size_t kAbsoluteEnumerationCap = 26;

/// Largest ground set exhaustive enumeration accepts: 12 by default, 20 with
/// opt-in. The environment variable CUTTREE_MAX_ENUM replaces both.
std::size_t enumeration_cap(bool allow_large);
/// Throws EnumerationCapError naming `what` when n exceeds enumeration_cap().
void require_enumerable(std::size_t n, bool allow_large, const char* what);

/// Every value b(X), X subset of {0..n-1}, indexed by bitmask of X.
///
/// When all values are finite and a common denominator brings them into a
/// safe int64 range, an exact integer image is kept as well and the scans
/// below run on it through the SIMD kernels.
class ValueTable {
public:
    struct IntegerImage {
        std::vector<std::int64_t> scaled;  // value(mask) == scaled[mask] / denominator
        Rational denominator;
    };

    /// Gray-code walk with incremental cut-value updates.
    static ValueTable from_graph(const WeightedGraph& g, bool allow_large = false);
    static ValueTable from_function(std::size_t n, const std::function<ExtRational(const Cut&)>& b,
                                    bool allow_large = false);
    /// values.size() must be 2^n.
    static ValueTable from_values(std::size_t n, std::vector<ExtRational> values, bool allow_large = false);

    std::size_t ground_size() const { return n_; }
    std::uint32_t full_mask() const { return static_cast<std::uint32_t>(values_.size() - 1); }
    const ExtRational& at(std::uint32_t mask) const { return values_.at(mask); }
    const ExtRational& at(const Cut& x) const;
    std::span<const ExtRational> values() const { return values_; }
    const std::optional<IntegerImage>& image() const { return image_; }

    /// inf { b(X) : u in X, v not in X }.
    ExtRational min_between(Vertex u, Vertex v) const;
    /// Every mask attaining min_between(u, v), ascending.
    std::vector<std::uint32_t> minimizers(Vertex u, Vertex v) const;

private:
    ValueTable(std::size_t n, std::vector<ExtRational> values);
    void require_pair(Vertex u, Vertex v) const;

    std::size_t n_ = 0;
    std::vector<ExtRational> values_;
    std::optional<IntegerImage> image_;
};

}  // namespace cuttree
