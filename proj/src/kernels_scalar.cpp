#include "cuttree/kernels.hpp"

#include <algorithm>

namespace cuttree::kernels::scalar {

std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have, std::uint32_t must_lack) {
    std::int64_t best = kNoValue;
    const auto size = static_cast<std::uint32_t>(table.size());
    for (std::uint32_t m = 0; m < size; ++m)
        if ((m & must_have) == must_have && (m & must_lack) == 0) best = std::min(best, table[m]);
    return best;
}

std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table) {
    const auto size = static_cast<std::uint32_t>(table.size());
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = x + 1; y < size; ++y)
            if (table[x] + table[y] < table[x & y] + table[x | y]) return Violation{x, y};
    return std::nullopt;
}

std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table) {
    const auto size = static_cast<std::uint32_t>(table.size());
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = x + 1; y < size; ++y)
            if (table[x] + table[y] < table[x & ~y] + table[y & ~x]) return Violation{x, y};
    return std::nullopt;
}

}  // namespace cuttree::kernels::scalar
