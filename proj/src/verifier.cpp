#include "cuttree/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

std::vector<std::pair<Vertex, Vertex>> all_pairs(std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

std::string pair_str(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

}  // namespace

OptimalCuts brute_force_optimal_cuts(const ValueTable& table, Vertex u, Vertex v) {
    OptimalCuts out{table.min_between(u, v), {}};
    for (auto m : table.minimizers(u, v)) out.minimizers.push_back(Cut::from_mask(table.ground_size(), m));
    return out;
}

OptimalCuts brute_force_optimal_cuts(const WeightedGraph& g, Vertex u, Vertex v, bool allow_large) {
    return brute_force_optimal_cuts(ValueTable::from_graph(g, allow_large), u, v);
}

std::vector<std::vector<ExtRational>> lambda_matrix(const CutEngine& engine, unsigned threads) {
    const std::size_t n = engine.size();
    std::vector<std::vector<ExtRational>> m(n, std::vector<ExtRational>(n));
    std::vector<std::pair<Vertex, Vertex>> work;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = 0; v < n; ++v)
            if (u != v) work.emplace_back(u, v);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < work.size();) {
            const auto [u, v] = work[i];
            m[u][v] = engine.lambda(u, v);
        }
    };
    threads = std::max(1U, threads);
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    }
    return m;
}

Report verify_gh_tree(const CutEngine& engine, const GomoryHuTree& tree, TreeCheck mode, unsigned threads) {
    if (tree.n != engine.size())
        throw InputError("tree is over " + std::to_string(tree.n) + " vertices, ground set has " +
                         std::to_string(engine.size()));
    if (!tree.is_spanning_tree()) throw InputError("not a spanning tree on " + std::to_string(tree.n) + " vertices");

    Report r;
    for (std::size_t i = 0; i < tree.edges.size(); ++i) {
        const auto& e = tree.edges[i];
        const Cut x = tree.fundamental_cut(i);
        const ExtRational value = engine.value(x);
        const ExtRational lambda = engine.lambda(e.u, e.v);
        const std::string name = "edge " + pair_str(e.u, e.v);
        if (value == ExtRational(e.lambda) && value == lambda)
            r.add(name, Status::pass, "lambda " + e.lambda.to_string());
        else
            r.add(name, Status::fail,
                  "stored " + e.lambda.to_string() + ", fundamental cut " + x.to_string() + " has value " +
                      value.to_string() + ", lambda(" + pair_str(e.u, e.v) + ")=" + lambda.to_string());
    }
    if (mode == TreeCheck::edges_only) return r;

    const auto lambdas = lambda_matrix(engine, threads);
    const auto path_min = tree.path_minimum_matrix();
    std::size_t bad = 0;
    for (auto [u, v] : all_pairs(tree.n)) {
        if (ExtRational(path_min[u][v]) == lambdas[u][v]) continue;
        ++bad;
        r.add("pair " + pair_str(u, v), Status::fail,
              "tree path minimum " + path_min[u][v].to_string() + " but lambda=" + lambdas[u][v].to_string());
    }
    if (bad == 0) r.add("all-pairs", Status::pass, std::to_string(tree.n * (tree.n - 1) / 2) + " pairs");
    return r;
}

Report verify_laminar(const LaminarFamily& family) {
    Report r;
    const auto& ms = family.members;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < ms.size(); ++i)
        for (std::size_t j = i + 1; j < ms.size(); ++j)
            if (!laminar_pair(ms[i].cut, ms[j].cut)) {
                ++bad;
                r.add("crossing", Status::fail, ms[i].cut.to_string() + " crosses " + ms[j].cut.to_string());
            }
    if (bad == 0) r.add("laminar", Status::pass, std::to_string(ms.size()) + " members");
    return r;
}

Report verify_separation(const CutEngine& engine, const LaminarFamily& family,
                         std::span<const std::pair<Vertex, Vertex>> pairs) {
    Report r;
    std::size_t bad = 0;
    for (const auto& m : family.members) {
        if (engine.is_optimal(m.cut, m.s, m.t) && engine.value(m.cut) == ExtRational(m.value)) continue;
        ++bad;
        r.add("member " + m.cut.to_string(), Status::fail,
              "not an optimal " + pair_str(m.s, m.t) + " cut of value " + m.value.to_string());
    }
    for (auto [u, v] : pairs) {
        const ExtRational lambda = engine.lambda(u, v);
        const bool ok = std::any_of(family.members.begin(), family.members.end(), [&](const LaminarMember& m) {
            return m.cut.separates(u, v) && engine.value(m.cut) == lambda;
        });
        if (ok) continue;
        ++bad;
        r.add("pair " + pair_str(u, v), Status::fail, "no member separates it with value " + lambda.to_string());
    }
    if (bad == 0) r.add("separation", Status::pass, std::to_string(pairs.size()) + " pairs");
    return r;
}

Report verify_separation(const CutEngine& engine, const LaminarFamily& family) {
    const auto pairs = all_pairs(engine.size());
    return verify_separation(engine, family, pairs);
}

std::vector<ExtRational> lambda_spectrum(const CutEngine& engine, unsigned threads) {
    const auto m = lambda_matrix(engine, threads);
    std::vector<ExtRational> values;
    for (auto [u, v] : all_pairs(engine.size())) values.push_back(m[u][v]);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (engine.size() >= 1 && values.size() > engine.size() - 1)
        throw PropertyViolation(std::to_string(values.size()) + " distinct lambda values on " +
                                std::to_string(engine.size()) + " vertices");
    return values;
}

}  // namespace cuttree
