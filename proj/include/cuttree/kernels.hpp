#pragma once

// Integer inner loops of exhaustive enumeration over value tables indexed by
// subset bitmask. Each kernel has a scalar reference and, on x86-64, an AVX2
// variant chosen at runtime. Variants are required to agree bit for bit,
// including which violation they report first.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

namespace cuttree::kernels {

enum class Isa { scalar, avx2 };

/// Best variant this CPU supports; CUTTREE_ISA=scalar forces the reference.
Isa detected_isa();
bool isa_available(Isa isa);
std::string_view isa_name(Isa isa);

constexpr std::int64_t kNoValue = INT64_MAX;

/// Pair of subset masks, x < y, witnessing a violated inequality.
struct Violation {
    std::uint32_t x = 0;
    std::uint32_t y = 0;
    friend bool operator==(const Violation&, const Violation&) = default;
};

/// min table[m] over masks m with (m & must_have) == must_have and
/// (m & must_lack) == 0; kNoValue if none qualifies. table.size() is 2^n.
std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have,
                        std::uint32_t must_lack, Isa isa = detected_isa());

/// First (x, y), x < y in lexicographic order, with
/// t[x] + t[y] < t[x & y] + t[x | y].
std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table,
                                                    Isa isa = detected_isa());

/// First (x, y), x < y in lexicographic order, with
/// t[x] + t[y] < t[x \ y] + t[y \ x].
std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table,
                                                     Isa isa = detected_isa());

namespace scalar {
std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have, std::uint32_t must_lack);
std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table);
std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table);
}  // namespace scalar

#if defined(CUTTREE_HAVE_AVX2)
namespace avx2 {
std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have, std::uint32_t must_lack);
std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table);
std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table);
}  // namespace avx2
#endif

}  // namespace cuttree::kernels
