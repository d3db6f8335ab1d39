#include <doctest.h>

#include <random>
#include <vector>

#include "cuttree/kernels.hpp"
#include "cuttree/value_table.hpp"
#include "support/corpus.hpp"

using namespace cuttree;
using namespace cuttree::kernels;

namespace {

std::vector<Isa> variants() {
    std::vector<Isa> out{Isa::scalar};
    if (isa_available(Isa::avx2)) out.push_back(Isa::avx2);
    return out;
}

// Plain double loops, written independently of the library kernels.
std::int64_t naive_masked_min(const std::vector<std::int64_t>& t, std::uint32_t have, std::uint32_t lack) {
    std::int64_t best = kNoValue;
    for (std::uint32_t m = 0; m < t.size(); ++m)
        if ((m & have) == have && (m & lack) == 0 && t[m] < best) best = t[m];
    return best;
}

std::optional<Violation> naive_first(const std::vector<std::int64_t>& t, bool posimodular) {
    const auto size = static_cast<std::uint32_t>(t.size());
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = x + 1; y < size; ++y) {
            const std::int64_t rhs = posimodular ? t[x & ~y] + t[y & ~x] : t[x & y] + t[x | y];
            if (t[x] + t[y] < rhs) return Violation{x, y};
        }
    return std::nullopt;
}

std::vector<std::int64_t> random_table(std::mt19937_64& rng, std::size_t n, std::int64_t hi) {
    std::vector<std::int64_t> t(std::size_t{1} << n);
    for (auto& v : t) v = std::uniform_int_distribution<std::int64_t>(0, hi)(rng);
    return t;
}

std::vector<std::int64_t> graph_table(std::uint64_t seed, std::size_t n) {
    std::mt19937_64 rng(seed);
    const auto g = testing::random_connected_graph(rng, n);
    const auto table = ValueTable::from_graph(g, true);
    REQUIRE(table.image().has_value());
    return table.image()->scaled;
}

}  // namespace

TEST_CASE("dispatch reports a usable variant") {
    const Isa isa = detected_isa();
    CHECK(isa_available(isa));
    CHECK(isa_available(Isa::scalar));
    CHECK_FALSE(isa_name(isa).empty());
    MESSAGE("dispatched variant: " << isa_name(isa));
}

TEST_CASE("masked_min agrees with the naive loop on every variant") {
    std::mt19937_64 rng(17);
    for (std::size_t n = 0; n <= 11; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            const auto t = random_table(rng, n, 1000);
            const std::uint32_t full = static_cast<std::uint32_t>(t.size() - 1);
            const std::uint32_t have = static_cast<std::uint32_t>(rng()) & full;
            const std::uint32_t lack = static_cast<std::uint32_t>(rng()) & full & ~have;
            const auto expected = naive_masked_min(t, have, lack);
            for (Isa isa : variants()) CHECK(masked_min(t, have, lack, isa) == expected);
            const std::uint32_t clash = have | lack;
            if (clash != 0) {
                for (Isa isa : variants()) CHECK(masked_min(t, clash, clash, isa) == kNoValue);
            }
        }
}

TEST_CASE("submodular and posimodular scans agree on random tables") {
    std::mt19937_64 rng(23);
    for (std::size_t n = 1; n <= 8; ++n)
        for (int rep = 0; rep < 10; ++rep) {
            const auto t = random_table(rng, n, 50);
            const auto sub = naive_first(t, false);
            const auto pos = naive_first(t, true);
            for (Isa isa : variants()) {
                CHECK(first_submodular_violation(t, isa) == sub);
                CHECK(first_posimodular_violation(t, isa) == pos);
            }
        }
}

TEST_CASE("graph cut tables have no violations on any variant") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const auto t = graph_table(seed, 3 + seed % 8);
        for (Isa isa : variants()) {
            CHECK_FALSE(first_submodular_violation(t, isa).has_value());
            CHECK_FALSE(first_posimodular_violation(t, isa).has_value());
        }
    }
}

TEST_CASE("a planted violation is found at the same pair by every variant") {
    std::mt19937_64 rng(29);
    for (int rep = 0; rep < 30; ++rep) {
        const std::size_t n = 4 + rep % 6;
        auto t = graph_table(100 + rep, n);
        const std::uint32_t full = static_cast<std::uint32_t>(t.size() - 1);
        const std::uint32_t victim = 1 + static_cast<std::uint32_t>(rng() % (full - 1));
        t[victim] = 0;  // undercut one proper subset
        const auto sub = naive_first(t, false);
        const auto pos = naive_first(t, true);
        for (Isa isa : variants()) {
            CHECK(first_submodular_violation(t, isa) == sub);
            CHECK(first_posimodular_violation(t, isa) == pos);
        }
        t[victim] = 1'000'000;  // and overshoot it
        const auto sub2 = naive_first(t, false);
        REQUIRE(sub2.has_value());
        for (Isa isa : variants()) CHECK(first_submodular_violation(t, isa) == sub2);
    }
}

TEST_CASE("values near the int64 image bound do not overflow") {
    std::vector<std::int64_t> t(1 << 4, std::int64_t{1} << 60);
    t[0] = t[15] = 0;
    for (Isa isa : variants()) {
        CHECK(masked_min(t, 1, 8, isa) == (std::int64_t{1} << 60));
        CHECK(first_submodular_violation(t, isa) == naive_first(t, false));
    }
}
