#include "cuttree/kernels.hpp"

#include <cstdlib>
#include <string>

namespace cuttree::kernels {

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::scalar:
            return true;
        case Isa::avx2:
#if defined(CUTTREE_HAVE_AVX2)
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    static const Isa isa = [] {
        if (const char* forced = std::getenv("CUTTREE_ISA"); forced && std::string(forced) == "scalar")
            return Isa::scalar;
        return isa_available(Isa::avx2) ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
}

std::string_view isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

std::int64_t masked_min(std::span<const std::int64_t> table, std::uint32_t must_have, std::uint32_t must_lack,
                        Isa isa) {
#if defined(CUTTREE_HAVE_AVX2)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) return avx2::masked_min(table, must_have, must_lack);
#endif
    (void)isa;
    return scalar::masked_min(table, must_have, must_lack);
}

std::optional<Violation> first_submodular_violation(std::span<const std::int64_t> table, Isa isa) {
#if defined(CUTTREE_HAVE_AVX2)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) return avx2::first_submodular_violation(table);
#endif
    (void)isa;
    return scalar::first_submodular_violation(table);
}

std::optional<Violation> first_posimodular_violation(std::span<const std::int64_t> table, Isa isa) {
#if defined(CUTTREE_HAVE_AVX2)
    if (isa == Isa::avx2 && isa_available(Isa::avx2)) return avx2::first_posimodular_violation(table);
#endif
    (void)isa;
    return scalar::first_posimodular_violation(table);
}

}  // namespace cuttree::kernels
