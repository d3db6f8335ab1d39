// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include <algorithm>
#include <bit>

#include "cuttree/kernels.hpp"

namespace cuttree::kernels::avx2 {
namespace {

inline __m256i lanes_from(std::uint32_t first) {
    const auto f = static_cast<long long>(first);
    return _mm256_setr_epi64x(f, f + 1, f + 2, f + 3);
}

inline int lane_mask(__m256i cmp) { return _mm256_movemask_pd(_mm256_castsi256_pd(cmp)); }

template <class Rhs>
std::optional<Violation> first_pair_violation(std::span<const std::int64_t> table, Rhs rhs_scalar, bool posimodular) {
    const auto size = static_cast<std::uint32_t>(table.size());
    const auto* t = reinterpret_cast<const long long*>(table.data());
    for (std::uint32_t x = 0; x < size; ++x) {
        const __m256i xv = _mm256_set1_epi64x(static_cast<long long>(x));
        const __m256i tx = _mm256_set1_epi64x(t[x]);
        std::uint32_t y = x + 1;
        for (; y + 4 <= size; y += 4) {
            const __m256i yv = lanes_from(y);
            const __m256i lhs = _mm256_add_epi64(tx, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + y)));
            __m256i a, b;
            if (posimodular) {
                a = _mm256_andnot_si256(yv, xv);  // x & ~y
                b = _mm256_andnot_si256(xv, yv);  // y & ~x
            } else {
                a = _mm256_and_si256(xv, yv);
                b = _mm256_or_si256(xv, yv);
            }
            const __m256i rhs = _mm256_add_epi64(_mm256_i64gather_epi64(t, a, 8), _mm256_i64gather_epi64(t, b, 8));
            if (const int bits = lane_mask(_mm256_cmpgt_epi64(rhs, lhs)); bits != 0)
                return Violation{x, y + static_cast<std::uint32_t>(std::countr_zero(static_cast<unsigned>(bits)))};
        }
        for (; y < size; ++y)
            if (t[x] + t[y] < rhs_scalar(x, y)) return Violation{x, y};
    }
    return std::nullopt;
}

}  // namespace

std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have, std::uint32_t must_lack) {
    const auto size = static_cast<std::uint32_t>(table.size());
    const auto* t = reinterpret_cast<const long long*>(table.data());
    const __m256i have = _mm256_set1_epi64x(must_have);
    const __m256i lack = _mm256_set1_epi64x(must_lack);
    const __m256i zero = _mm256_setzero_si256();
    const __m256i none = _mm256_set1_epi64x(kNoValue);
    __m256i best = none;
    std::uint32_t m = 0;
    for (; m + 4 <= size; m += 4) {
        const __m256i idx = lanes_from(m);
        const __m256i ok = _mm256_and_si256(_mm256_cmpeq_epi64(_mm256_and_si256(idx, have), have),
                                            _mm256_cmpeq_epi64(_mm256_and_si256(idx, lack), zero));
        const __m256i v = _mm256_blendv_epi8(none, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + m)), ok);
        best = _mm256_blendv_epi8(best, v, _mm256_cmpgt_epi64(best, v));
    }
    alignas(32) long long lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), best);
    std::int64_t out = std::min({lanes[0], lanes[1], lanes[2], lanes[3]});
    for (; m < size; ++m)
        if ((m & must_have) == must_have && (m & must_lack) == 0) out = std::min<std::int64_t>(out, t[m]);
    return out;
}

std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table) {
    return first_pair_violation(
        table, [&](std::uint32_t x, std::uint32_t y) { return table[x & y] + table[x | y]; }, false);
}

std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table) {
    return first_pair_violation(
        table, [&](std::uint32_t x, std::uint32_t y) { return table[x & ~y] + table[y & ~x]; }, true);
}

}  // namespace cuttree::kernels::avx2
