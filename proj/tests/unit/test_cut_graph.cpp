#include <doctest.h>

#include <random>

#include "cuttree/cut.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/graph.hpp"
#include "support/corpus.hpp"

using namespace cuttree;
using namespace cuttree::testing;

TEST_CASE("set operations") {
    const std::size_t n = 4;
    CHECK(Cut(n).complement() == Cut::full(n));
    const auto x = Cut::of(n, {0, 1});
    CHECK((x - x).empty());
    CHECK((Cut::of(n, {0, 1}) & Cut::of(n, {1, 2})) == Cut::of(n, {1}));
    CHECK((Cut::of(n, {0, 1}) | Cut::of(n, {1, 2})) == Cut::of(n, {0, 1, 2}));
    CHECK(x.to_string() == "{0,1}");
    CHECK(Cut(n).to_string() == "{}");
    CHECK(x.is_cut_between(0, 2));
    CHECK_FALSE(x.is_cut_between(2, 0));
    CHECK(x.separates(2, 0));
    CHECK(x.count() == 2);
}

TEST_CASE("set operations reject mismatched sizes and vertices") {
    CHECK_THROWS_AS(Cut(3) | Cut(4), InputError);
    CHECK_THROWS_AS(Cut(3) & Cut(4), InputError);
    CHECK_THROWS_AS(Cut(3) - Cut(4), InputError);
    Cut c(3);
    CHECK_THROWS_AS(c.insert(3), InputError);
}

TEST_CASE("cuts larger than one word") {
    const std::size_t n = 130;
    auto x = Cut::of(n, {0, 64, 129});
    CHECK(x.count() == 3);
    CHECK(x.complement().count() == n - 3);
    CHECK(x.complement().complement() == x);
    CHECK((x | x.complement()).is_full());
    CHECK(x.members() == std::vector<Vertex>{0, 64, 129});
}

TEST_CASE("masks agree with set semantics") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 500; ++i) {
        const std::size_t n = 1 + rng() % 20;
        const std::uint64_t full = (std::uint64_t{1} << n) - 1;
        const std::uint64_t a = rng() & full, b = rng() & full;
        const auto x = Cut::from_mask(n, a), y = Cut::from_mask(n, b);
        CHECK((x | y).to_mask() == (a | b));
        CHECK((x & y).to_mask() == (a & b));
        CHECK((x - y).to_mask() == (a & ~b));
        CHECK(x.complement().to_mask() == (full & ~a));
        CHECK(x.is_subset_of(y) == ((a & ~b) == 0));
        CHECK(((x <=> y) < 0) == (a < b));
    }
}

TEST_CASE("laminar and cross-free pairs") {
    const std::size_t n = 4;
    CHECK(laminar_pair(Cut::of(n, {0}), Cut::of(n, {0, 1})));
    CHECK(laminar_pair(Cut::of(n, {0}), Cut::of(n, {1, 2})));
    CHECK_FALSE(laminar_pair(Cut::of(n, {0, 1}), Cut::of(n, {1, 2})));
    CHECK(cross_free(Cut::of(n, {0, 1, 2}), Cut::of(n, {2, 3})));
    CHECK_FALSE(cross_free(Cut::of(n, {0, 1}), Cut::of(n, {1, 2})));
}

TEST_CASE("graph normalization") {
    const WeightedGraph g(3, {Edge{1, 0, Rational(2)}, Edge{0, 1, Rational(3)}, Edge{2, 2, Rational(9)},
                              Edge{1, 2, Rational(0)}, Edge{2, 0, Rational(1, 2)}});
    REQUIRE(g.edges().size() == 2);
    CHECK(g.edges()[0] == Edge{0, 1, Rational(5)});
    CHECK(g.edges()[1] == Edge{0, 2, Rational(1, 2)});
    CHECK(g.total_weight() == Rational(11, 2));
    CHECK(g.is_connected());
    CHECK(g.incident(0).size() == 2);
}

TEST_CASE("graph rejects bad input") {
    CHECK_THROWS_AS(WeightedGraph(2, {Edge{0, 1, Rational(-1)}}), InputError);
    CHECK_THROWS_AS(WeightedGraph(2, {Edge{0, 2, Rational(1)}}), InputError);
    CHECK_THROWS_AS(WeightedGraph(2, {}, {"a"}), InputError);
    CHECK_THROWS_AS(cut_value(single_edge(), Cut(3)), InputError);
}

TEST_CASE("components and induced subgraphs") {
    const WeightedGraph g(5, {Edge{0, 3, Rational(1)}, Edge{1, 2, Rational(2)}});
    CHECK_FALSE(g.is_connected());
    const auto comps = g.components();
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<Vertex>{0, 3});
    CHECK(comps[1] == std::vector<Vertex>{1, 2});
    CHECK(comps[2] == std::vector<Vertex>{4});
    const auto h = g.induced({3, 0});
    REQUIRE(h.edges().size() == 1);
    CHECK(h.edges()[0] == Edge{0, 1, Rational(1)});
}

TEST_CASE("cut_value examples") {
    const auto g = single_edge(5);
    CHECK(cut_value(g, Cut::of(2, {0})) == Rational(5));
    CHECK(cut_value(g, Cut(2)) == Rational(0));
    CHECK(cut_value(g, Cut::full(2)) == Rational(0));
    CHECK(cut_value(triangle(), Cut(3)) == Rational(0));
    CHECK(cut_value(triangle(), Cut::full(3)) == Rational(0));
}

TEST_CASE("cut_value matches the naive edge-list sum") {
    for (const auto& g : random_corpus(11, 50)) {
        const std::uint32_t size = std::uint32_t{1} << g.size();
        for (std::uint32_t m = 0; m < size; ++m) {
            const auto x = Cut::from_mask(g.size(), m);
            CHECK(cut_value(g, x) == naive_value(g, m));
            CHECK(cut_value(g, x) == cut_value(g, x.complement()));
        }
    }
}

TEST_CASE("out_edges examples") {
    const auto g = single_edge(5);
    CHECK(out_edges(g, Cut::of(2, {0})) == std::vector<Edge>{Edge{0, 1, Rational(5)}});
    CHECK(out_edges(g, Cut(2)).empty());
    const auto star = star3();
    CHECK(out_edges(star, Cut::of(4, {1, 2})) ==
          std::vector<Edge>{Edge{0, 1, Rational(1)}, Edge{0, 2, Rational(1)}});
}
