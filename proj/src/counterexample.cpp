#include "cuttree/counterexample.hpp"

#include <ostream>

#include "cuttree/construct.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/mincut.hpp"
#include "cuttree/set_function.hpp"
#include "cuttree/verifier.hpp"

namespace cuttree {

Rational edge_weight(long n) {
    if (n < 0) throw InputError("edge_weight: negative index " + std::to_string(n));
    const mpz_class k = n;
    return Rational(mpq_class(k * k + 3 * k + 4, 2));
}

WeightedGraph generate_truncation(const TruncationSpec& spec) {
    if (spec.N < 1) throw InputError("truncation needs N >= 1");
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < spec.N; ++k)
        edges.push_back(Edge{spec.path_vertex(k), spec.path_vertex(k + 1), edge_weight(static_cast<long>(k))});
    for (std::size_t k = 0; k <= spec.N; ++k) edges.push_back(Edge{spec.hub(), spec.path_vertex(k), Rational(1)});

    std::vector<std::string> labels;
    for (std::size_t k = 0; k <= spec.N; ++k) labels.push_back("v" + std::to_string(k));
    labels.push_back("vinf");
    return WeightedGraph(spec.vertex_count(), std::move(edges), std::move(labels));
}

Cut prefix_cut(const TruncationSpec& spec, std::size_t k) {
    if (k > spec.N) throw InputError("prefix beyond the truncation");
    Cut x(spec.vertex_count());
    for (std::size_t i = 0; i <= k; ++i) x.insert(spec.path_vertex(i));
    return x;
}

ChainAnalysis analyze_chain(const TruncationSpec& spec) {
    if (spec.N < 1 || spec.N > kMaxAnalyzedTruncation)
        throw InputError("chain analysis supports 1 <= N <= " + std::to_string(kMaxAnalyzedTruncation));
    const WeightedGraph g = generate_truncation(spec);
    const auto table = std::make_shared<const ValueTable>(ValueTable::from_graph(g, true));

    ChainAnalysis a;
    a.N = spec.N;
    for (std::size_t n = 0; n <= spec.N; ++n)
        for (std::size_t m = n + 1; m <= spec.N; ++m) {
            auto found = brute_force_optimal_cuts(*table, spec.path_vertex(n), spec.path_vertex(m));
            ChainPair p{n, m, found.lambda.finite(), std::move(found.minimizers), false, false};
            p.unique = p.minimizers.size() == 1;
            p.prefix_is_unique = p.unique && p.minimizers.front() == prefix_cut(spec, n);
            a.pairs.push_back(std::move(p));
        }

    auto realized = [&](std::size_t n) {
        for (const auto& p : a.pairs)
            if (p.n == n && p.prefix_is_unique) return true;
        return false;
    };
    while (a.chain_length < spec.N && realized(a.chain_length)) ++a.chain_length;

    for (std::size_t limit = 1; limit <= spec.N; ++limit) {
        bool all = true;
        for (const auto& p : a.pairs)
            if (p.m <= limit && !p.prefix_is_unique) all = false;
        if (!all) break;
        a.interior_limit = limit;
    }

    const OracleEngine exhaustive(table);
    const auto tree = build_tree_paper(FlowEngine(g), spec.hub());
    a.truncation_has_tree = verify_gh_tree(exhaustive, tree, TreeCheck::edges_only).passed();
    return a;
}

void write_chain_report(std::ostream& out, const TruncationSpec& spec, const ChainAnalysis& a) {
    const WeightedGraph g = generate_truncation(spec);
    auto names = [&](const Cut& x) {
        std::string s = "{";
        bool first = true;
        for (Vertex v : x.members()) {
            if (!first) s += ',';
            s += g.label(v);
            first = false;
        }
        return s + "}";
    };
    out << "# pairs: n m lambda unique prefix minimizers\n";
    for (const auto& p : a.pairs) {
        out << "pair v" << p.n << " v" << p.m << ' ' << p.lambda.to_string() << ' ' << (p.unique ? "yes" : "no") << ' '
            << (p.prefix_is_unique ? "yes" : "no");
        for (const auto& x : p.minimizers) out << ' ' << names(x);
        out << '\n';
    }
    out << "chain";
    for (std::size_t k = 0; k < a.chain_length; ++k) out << (k ? " < " : " ") << "V" << k;
    out << "\nchain-length " << a.chain_length << '\n';
    out << "interior-limit " << a.interior_limit << '\n';
    out << "truncation-tree " << (a.truncation_has_tree ? "valid" : "INVALID") << '\n';
    out << "# the finite truncation has a Gomory-Hu tree; the unique optimal cuts V_0 < V_1 < ... keep growing with N\n";
}

}  // namespace cuttree
