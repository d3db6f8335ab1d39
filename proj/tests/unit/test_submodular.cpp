#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "cuttree/counterexample.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/mincut.hpp"
#include "cuttree/set_function.hpp"
#include "support/corpus.hpp"

using namespace cuttree;
using namespace cuttree::testing;

namespace {

Status status_of(const Report& r, std::string_view check) {
    const auto* f = r.find(check);
    REQUIRE(f != nullptr);
    return f->status;
}

// Symmetric, zero exactly on {}, V, but b({0})+b({1}) = 2 < b({}) + b({0,1}) = 5.
std::shared_ptr<const ValueTable> non_submodular_table() {
    return std::make_shared<const ValueTable>(ValueTable::from_values(3, {0, 1, 1, 5, 5, 1, 1, 0}));
}

}  // namespace

TEST_CASE("graph_cut_oracle evaluates cut values") {
    const auto b = graph_cut_oracle(single_edge(5));
    CHECK(b.evaluate(Cut::of(2, {0})) == ExtRational(5));
    CHECK(b.evaluate(Cut(2)) == ExtRational(0));
    const TruncationSpec spec{3};
    const auto t = graph_cut_oracle(generate_truncation(spec));
    CHECK(t.evaluate(prefix_cut(spec, 1)) == ExtRational(6));
    CHECK(t.evaluate(prefix_cut(spec, 0)) == ExtRational(3));
}

TEST_CASE("graph cut oracles pass every property") {
    for (const auto& g : random_corpus(303, 40, 2, 8)) {
        const auto r = check_properties(graph_cut_oracle(g));
        CHECK(r.passed());
        CHECK(status_of(r, "zero-set") == Status::pass);
        CHECK(status_of(r, "symmetry") == Status::pass);
        CHECK(status_of(r, "submodularity") == Status::pass);
        CHECK(status_of(r, "posimodularity") == Status::pass);
        CHECK(status_of(r, "monotone-continuity") == Status::vacuous);
        CHECK(status_of(r, "monotone-continuity-weak") == Status::vacuous);
        CHECK(status_of(r, "finite-separability") == Status::pass);
    }
}

TEST_CASE("pairs oracle on n=4 is symmetric and submodular") {
    const auto r = check_properties(pairs_oracle(4));
    CHECK(r.passed());
    CHECK(status_of(r, "symmetry") == Status::pass);
    CHECK(status_of(r, "submodularity") == Status::pass);
    for (Vertex u = 0; u < 4; ++u)
        for (Vertex v = 0; v < 4; ++v)
            if (u != v) {
                CHECK(smallest_optimal_cut_b(pairs_oracle(4), u, v) == Cut::singleton(4, u));
                CHECK(largest_optimal_cut_b(pairs_oracle(4), u, v) == Cut::singleton(4, v).complement());
                CHECK(optimal_cuts_b(pairs_oracle(4), u, v).minimizers.size() == 2);
            }
}

TEST_CASE("parity of the first two vertices on n=3 breaks the zero set") {
    // b(X) = |X & {0,1}| mod 2 is the cut function of the edge 01, hence
    // submodular; it fails because b({0,1}) = 0.
    const auto t = std::make_shared<const ValueTable>(ValueTable::from_function(3, [](const Cut& x) {
        return ExtRational(static_cast<long>((x.contains(0) + x.contains(1)) % 2));
    }));
    const auto r = check_properties(*t);
    CHECK_FALSE(r.passed());
    CHECK(status_of(r, "zero-set") == Status::fail);
    CHECK(r.find("zero-set")->detail.find("X={0,1}") != std::string::npos);
    CHECK(status_of(r, "submodularity") == Status::pass);
}

TEST_CASE("a non-submodular table is rejected with a witness pair") {
    const auto t = non_submodular_table();
    const auto r = check_properties(*t);
    CHECK(status_of(r, "symmetry") == Status::pass);
    CHECK(status_of(r, "submodularity") == Status::fail);
    const auto& detail = r.find("submodularity")->detail;
    CHECK(detail.find("X={0}") != std::string::npos);
    CHECK(detail.find("Y={1}") != std::string::npos);
}

TEST_CASE("non-submodular oracle: extreme cuts raise PropertyViolation") {
    // Optimal 0-3 cuts {0,1} and {0,2}; their intersection {0} costs 10.
    std::vector<ExtRational> v(16, ExtRational(10));
    v[0] = v[15] = 0;
    v[0b0011] = v[0b1100] = 1;  // {0,1} and complement
    v[0b0101] = v[0b1010] = 1;  // {0,2} and complement
    const auto b = table_oracle(std::make_shared<const ValueTable>(ValueTable::from_values(4, v)), "bad");
    CHECK_THROWS_AS(smallest_optimal_cut_b(b, 0, 3), PropertyViolation);
    CHECK(lambda_b(b, 0, 3) == ExtRational(1));
}

TEST_CASE("infinite oracle fails finite separability") {
    const auto t = ValueTable::from_function(3, [](const Cut& x) {
        return (x.empty() || x.is_full()) ? ExtRational(0) : ExtRational::infinity();
    });
    CHECK_FALSE(t.image().has_value());
    const auto r = check_properties(t);
    CHECK(status_of(r, "finite-separability") == Status::fail);
    CHECK(t.min_between(0, 1).is_infinite());
    CHECK(status_of(r, "submodularity") == Status::pass);
}

TEST_CASE("lambda_b and extreme cuts agree with the max-flow engine") {
    for (const auto& g : random_corpus(404, 100, 2, 10)) {
        const auto b = graph_cut_oracle(g);
        const OracleEngine oracle(b);
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = 0; v < g.size(); ++v) {
                if (u == v) continue;
                const auto flow = min_cut_pair(g, u, v);
                CHECK(oracle.lambda(u, v) == ExtRational(flow.lambda));
                CHECK(oracle.smallest(u, v) == flow.smallest);
                CHECK(oracle.largest(u, v) == flow.largest);
            }
        CHECK(lambda_b(b, 0, g.size() - 1) == ExtRational(lambda(g, 0, g.size() - 1)));
    }
}

TEST_CASE("sampled mode") {
    CheckOptions opt;
    opt.mode = CheckMode::sampled;
    opt.samples = 500;
    const auto good = check_properties(graph_cut_oracle(random_corpus(9, 1, 16, 16)[0]), opt);
    CHECK(good.passed());
    CHECK(status_of(good, "finite-separability") == Status::skipped);
    const auto bad = check_properties(table_oracle(non_submodular_table()), opt);
    CHECK(status_of(bad, "submodularity") == Status::fail);
}

TEST_CASE("exhaustive mode honours the enumeration cap") {
    const auto b = pairs_oracle(13);
    CHECK_THROWS_AS(check_properties(b), EnumerationCapError);
    CheckOptions opt;
    opt.allow_large = true;
    CHECK(check_properties(b, opt).passed());
}

TEST_CASE("value table files") {
    std::istringstream ok("# n = 1\n0 0\n1 inf\n");
    const auto t = read_value_table(ok);
    CHECK(t.ground_size() == 1);
    CHECK(t.at(1).is_infinite());
    std::istringstream missing("0 0\n2 1\n");
    CHECK_THROWS_AS(read_value_table(missing), InputError);
    std::istringstream odd("0 0\n1 1\n2 1\n");
    CHECK_THROWS_AS(read_value_table(odd), InputError);
    std::istringstream dup("0 0\n0 1\n");
    CHECK_THROWS_AS(read_value_table(dup), InputError);
    std::istringstream negative("0 0\n1 -1\n");
    CHECK_THROWS_AS(read_value_table(negative), InputError);
}

TEST_CASE("value tables from the Gray-code walk match direct evaluation") {
    for (const auto& g : random_corpus(505, 30, 2, 10)) {
        const auto t = ValueTable::from_graph(g);
        REQUIRE(t.image().has_value());
        for (std::uint32_t m = 0; m <= t.full_mask(); ++m) CHECK(t.at(m) == ExtRational(naive_value(g, m)));
    }
}

TEST_CASE("CUTTREE_MAX_ENUM replaces the enumeration cap") {
    CHECK(enumeration_cap(false) == kDefaultEnumerationCap);
    CHECK(enumeration_cap(true) == kOptInEnumerationCap);
    ::setenv("CUTTREE_MAX_ENUM", "3", 1);
    CHECK(enumeration_cap(false) == 3);
    CHECK(enumeration_cap(true) == 3);
    CHECK_THROWS_AS(require_enumerable(4, true, "test"), EnumerationCapError);
    ::setenv("CUTTREE_MAX_ENUM", "99", 1);
    CHECK(enumeration_cap(false) == kAbsoluteEnumerationCap);
    ::unsetenv("CUTTREE_MAX_ENUM");
    CHECK(enumeration_cap(false) == kDefaultEnumerationCap);
}
