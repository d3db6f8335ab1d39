// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.
// Reference values come from the naive enumeration oracle in support/corpus.hpp,
// which shares no code with the library's max-flow, value tables or kernels.

#include <chrono>
#include <algorithm>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cuttree/cli.hpp"
#include "cuttree/construct.hpp"
#include "cuttree/counterexample.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/mincut.hpp"
#include "cuttree/set_function.hpp"
#include "cuttree/verifier.hpp"
#include "support/corpus.hpp"

using namespace cuttree;
using namespace cuttree::testing;

namespace {

constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::size_t kCorpusSize = 200;

const std::vector<WeightedGraph>& corpus() {
    static const auto graphs = random_corpus(kCorpusSeed, kCorpusSize, 2, 10, 1, 20);
    return graphs;
}

// Collects failures; the first few are printed under the criterion line.
struct Outcome {
    std::size_t checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::function<std::string()>& what) {
        ++checks;
        if (!ok) failures.push_back(what());
    }
};

std::string pair_name(Vertex u, Vertex v) { return std::to_string(u) + "-" + std::to_string(v); }

std::vector<Cut> optimal_cuts(const WeightedGraph& g, Vertex u, Vertex v) {
    std::vector<Cut> out;
    for (auto m : naive_optimal(g, u, v).minimizers) out.push_back(Cut::from_mask(g.size(), m));
    return out;
}

// ---------------------------------------------------------------------------

Outcome hub_and_path_weights() {
    Outcome o;
    std::ostringstream out, err;
    const int code = run_cli({"cuttree", "counterexample", "4"}, out, err);
    o.expect(code == kExitOk, [&] { return "exit code " + std::to_string(code) + ": " + err.str(); });

    // Graph block: label comments, "n m", then m edge lines.
    std::istringstream in(out.str());
    std::string line;
    while (std::getline(in, line) && line.rfind('#', 0) == 0) {
    }
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    header >> n >> m;
    o.expect(n == 6 && m == 9, [&] { return "header '" + line + "'"; });
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < m && std::getline(in, line); ++i) {
        std::istringstream e(line);
        Vertex u = 0, v = 0;
        std::string w;
        e >> u >> v >> w;
        edges.push_back(Edge{u, v, Rational::parse(w)});
    }
    const Vertex hub = 5;
    const long path[] = {2, 4, 7, 11};
    for (Vertex k = 0; k < 4; ++k) {
        const bool found = std::any_of(edges.begin(), edges.end(), [&](const Edge& e) {
            return e.u == k && e.v == k + 1 && e.w == Rational(path[k]);
        });
        o.expect(found, [&] { return "path edge v" + std::to_string(k) + " v" + std::to_string(k + 1) +
                                     " weight " + std::to_string(path[k]) + " missing"; });
    }
    for (Vertex k = 0; k <= 4; ++k) {
        const bool found = std::any_of(edges.begin(), edges.end(),
                                       [&](const Edge& e) { return e.u == k && e.v == hub && e.w == Rational(1); });
        o.expect(found, [&] { return "hub edge v" + std::to_string(k) + " weight 1 missing"; });
    }
    o.expect(edges.size() == 9, [&] { return std::to_string(edges.size()) + " edges printed"; });
    return o;
}

Outcome unique_prefix_cuts() {
    Outcome o;
    const TruncationSpec spec{8};
    const auto g = generate_truncation(spec);
    for (std::size_t n = 0; n <= 5; ++n)
        for (std::size_t m = n + 1; m <= 5; ++m) {
            const auto naive = naive_optimal(g, spec.path_vertex(n), spec.path_vertex(m));
            const auto prefix = static_cast<std::uint32_t>(prefix_cut(spec, n).to_mask());
            o.expect(naive.minimizers == std::vector<std::uint32_t>{prefix}, [&] {
                std::string s = "pair (v" + std::to_string(n) + ",v" + std::to_string(m) + "): lambda " +
                                naive.lambda.to_string() + ", value of V_" + std::to_string(n) + " is " +
                                naive_value(g, prefix).to_string() + ", minimizers";
                for (auto mask : naive.minimizers) s += " " + Cut::from_mask(g.size(), mask).to_string();
                return s;
            });
        }
    return o;
}

Outcome cross_oracle() {
    Outcome o;
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const FlowEngine flow(g);
        const OracleEngine exhaustive(g);
        for (Vertex u = 0; u < g.size(); ++u)
            for (Vertex v = 0; v < g.size(); ++v) {
                if (u == v) continue;
                const auto naive = naive_optimal(g, u, v);
                const Cut meet = Cut::from_mask(g.size(), naive.meet), join = Cut::from_mask(g.size(), naive.join);
                for (const CutEngine* e : {static_cast<const CutEngine*>(&flow),
                                           static_cast<const CutEngine*>(&exhaustive)}) {
                    const auto lam = e->lambda(u, v);
                    const auto x = e->smallest(u, v), y = e->largest(u, v);
                    o.expect(lam == ExtRational(naive.lambda) && x == meet && y == join, [&] {
                        return "graph " + std::to_string(index) + " pair " + pair_name(u, v) + " (" +
                               std::string(e->name()) + "): lambda " + lam.to_string() + " vs " +
                               naive.lambda.to_string() + ", X " + x.to_string() + " vs " + meet.to_string() +
                               ", Y " + y.to_string() + " vs " + join.to_string();
                    });
                }
            }
        ++index;
    }
    return o;
}

Outcome builders_agree() {
    Outcome o;
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const OracleEngine brute(g);
        const auto paper = build_tree_paper(FlowEngine(g));
        const auto classical = build_tree_classical(g);
        for (const auto* t : {&paper, &classical}) {
            const auto r = verify_gh_tree(brute, *t, TreeCheck::all_pairs);
            o.expect(r.passed(), [&] {
                return "graph " + std::to_string(index) + ": " + (t == &paper ? "paper" : "classical") +
                       " tree fails (" + std::to_string(r.failures()) + " findings)";
            });
        }
        o.expect(paper.path_minimum_matrix() == classical.path_minimum_matrix(),
                 [&] { return "graph " + std::to_string(index) + ": path-minimum matrices differ"; });
        ++index;
    }
    return o;
}

Outcome structural_corollaries() {
    Outcome o;
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const auto n = g.size();
        const FlowEngine flow(g);
        const auto spectrum = lambda_spectrum(flow);
        o.expect(spectrum.size() <= n - 1, [&] {
            return "graph " + std::to_string(index) + ": " + std::to_string(spectrum.size()) + " distinct values";
        });
        for (const auto& t : {build_tree_paper(flow), build_tree_classical(g)}) {
            const auto leaves = t.leaves();
            o.expect(leaves.size() >= 2, [&] { return "graph " + std::to_string(index) + ": fewer than 2 leaves"; });
            for (Vertex leaf : leaves) {
                const auto it = std::find_if(t.edges.begin(), t.edges.end(),
                                             [&](const TreeEdge& e) { return e.u == leaf || e.v == leaf; });
                const Vertex other = it->u == leaf ? it->v : it->u;
                const auto single = Cut::singleton(n, leaf);
                o.expect(naive_value(g, static_cast<std::uint32_t>(single.to_mask())) ==
                             naive_optimal(g, leaf, other).lambda,
                         [&] {
                             return "graph " + std::to_string(index) + ": leaf " + std::to_string(leaf) +
                                    " is not an optimal cut";
                         });
            }
        }
        ++index;
    }
    return o;
}

// Optimal cuts to examine: every minimizer of every pair when n <= 8, otherwise
// X_{s,t}, Y_{s,t} and one seeded random minimizer per pair.
std::vector<std::tuple<Cut, Vertex, Vertex>> examined_cuts(const WeightedGraph& g, std::mt19937_64& rng) {
    std::vector<std::tuple<Cut, Vertex, Vertex>> out;
    const auto n = g.size();
    for (Vertex s = 0; s < n; ++s)
        for (Vertex t = 0; t < n; ++t) {
            if (s == t) continue;
            const auto naive = naive_optimal(g, s, t);
            if (n <= 8) {
                for (auto m : naive.minimizers) out.emplace_back(Cut::from_mask(n, m), s, t);
                continue;
            }
            out.emplace_back(Cut::from_mask(n, naive.meet), s, t);
            out.emplace_back(Cut::from_mask(n, naive.join), s, t);
            const auto pick = std::uniform_int_distribution<std::size_t>(0, naive.minimizers.size() - 1)(rng);
            out.emplace_back(Cut::from_mask(n, naive.minimizers[pick]), s, t);
        }
    return out;
}

bool partitions(const std::vector<Cut>& parts, const Cut& rest) {
    Cut covered(rest.size());
    for (const auto& p : parts) {
        if (p.empty() || p.intersects(covered)) return false;
        covered |= p;
    }
    return covered == rest;
}

bool pairwise_laminar(const std::vector<Cut>& family) {
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!laminar_pair(family[i], family[j])) return false;
    return true;
}

Outcome order_and_partition() {
    Outcome o;
    std::mt19937_64 rng(kCorpusSeed + 6);
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const auto n = g.size();
        const FlowEngine e(g);
        const std::string gname = "graph " + std::to_string(index);

        for (const auto& [x, s, t] : examined_cuts(g, rng)) {
            const auto members = x.members();
            bool rejects_self = false;
            try {
                prec(e, x, members.front(), members.front());
            } catch (const PreconditionViolation&) {
                rejects_self = true;
            }
            o.expect(rejects_self, [&] { return gname + ": prec accepted u == u"; });
            for (Vertex a : members)
                for (Vertex b : members) {
                    if (a == b || !prec(e, x, a, b)) continue;
                    for (Vertex c : members) {
                        if (c == b || !prec(e, x, b, c)) continue;
                        o.expect(c != a && prec(e, x, a, c), [&] {
                            return gname + " X=" + x.to_string() + ": " + std::to_string(a) + "<" + std::to_string(b) +
                                   "<" + std::to_string(c) + " not transitive";
                        });
                    }
                }
        }

        for (Vertex s = 0; s < n; ++s) {
            const auto cs = smallest_cut_family(e, s, Cut::full(n));
            o.expect(pairwise_laminar(cs), [&] { return gname + ": C_" + std::to_string(s) + " not laminar"; });
        }

        // Replay the recursion and check every node.
        struct Node {
            Vertex s;
            Cut x;
        };
        std::vector<Node> stack{{0, Cut::full(n)}};
        while (!stack.empty()) {
            const Node node = stack.back();
            stack.pop_back();
            Cut rest = node.x;
            rest.erase(node.s);
            o.expect(pairwise_laminar(smallest_cut_family(e, node.s, node.x)),
                     [&] { return gname + ": C_{s,X} not laminar at X=" + node.x.to_string(); });
            const auto parts = partition_family(e, node.s, node.x);
            o.expect(partitions(parts, rest),
                     [&] { return gname + ": parts do not partition " + rest.to_string(); });
            for (const auto& p : parts) stack.push_back(Node{minimal_vertex(e, p, node.s), p});
        }
        ++index;
    }
    return o;
}

Outcome uncrossing_and_closure() {
    Outcome o;
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const auto n = g.size();
        if (n > 8) {
            ++index;
            continue;
        }
        const FlowEngine e(g);
        const std::string gname = "graph " + std::to_string(index);
        std::vector<std::tuple<Cut, Vertex, Vertex>> all;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = 0; v < n; ++v) {
                if (u == v) continue;
                const auto cuts = optimal_cuts(g, u, v);
                const auto lam = naive_optimal(g, u, v).lambda;
                for (const auto& a : cuts) {
                    all.emplace_back(a, u, v);
                    for (const auto& b : cuts)
                        o.expect(cut_value(g, a & b) == lam && cut_value(g, a | b) == lam, [&] {
                            return gname + ": " + a.to_string() + " and " + b.to_string() + " not closed";
                        });
                }
            }
        for (const auto& [x, s, t] : all) {
            for (Vertex u : x.members())
                for (Vertex v : x.members()) {
                    if (u == v) continue;
                    o.expect(e.smallest(u, v).is_subset_of(x) || e.smallest(v, u).is_subset_of(x), [&] {
                        return gname + ": neither X_{u,v} nor X_{v,u} inside " + x.to_string();
                    });
                }
            for (const auto& [y, u, v] : all) {
                Cut out;
                try {
                    out = uncross(e, x, s, t, y, u, v);
                } catch (const Error& err) {
                    o.expect(false, [&] { return gname + ": " + err.what(); });
                    continue;
                }
                o.expect(out.is_cut_between(u, v) && cut_value(g, out) == naive_optimal(g, u, v).lambda &&
                             cross_free(out, x),
                         [&] { return gname + ": uncross gave " + out.to_string(); });
            }
        }
        ++index;
    }
    return o;
}

Outcome laminar_families() {
    Outcome o;
    std::size_t index = 0;
    for (const auto& g : corpus()) {
        const auto family = build_laminar_family(FlowEngine(g));
        const OracleEngine brute(g);
        const auto lam = verify_laminar(family);
        const auto sep = verify_separation(brute, family);
        o.expect(lam.passed() && sep.passed(), [&] {
            return "graph " + std::to_string(index) + ": laminar " + std::to_string(lam.failures()) +
                   " failures, separation " + std::to_string(sep.failures()) + " failures";
        });
        ++index;
    }
    return o;
}

Outcome property_suite() {
    Outcome o;
    std::size_t index = 0, examined = 0;
    for (const auto& g : corpus()) {
        if (g.size() <= 5) {
            ++examined;
            const auto r = check_properties(graph_cut_oracle(g));
            for (const char* p : {"zero-set", "symmetry", "submodularity", "posimodularity", "finite-separability"}) {
                const auto* f = r.find(p);
                o.expect(f && f->status == Status::pass,
                         [&] { return "graph " + std::to_string(index) + ": " + p + " did not pass"; });
            }
        }
        ++index;
    }
    o.expect(examined > 0, [] { return "no corpus member with n <= 5"; });

    const auto bad = ValueTable::from_values(3, {0, 1, 1, 5, 5, 1, 1, 0});
    const auto r = check_properties(bad);
    const auto* f = r.find("submodularity");
    o.expect(f && f->status == Status::fail && f->detail.find("X={0} Y={1}") != std::string::npos,
             [&] { return "non-submodular table not rejected with the pair {0},{1}: " + (f ? f->detail : ""); });
    return o;
}

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "counterexample 4 path weights 2,4,7,11 and unit hub edges", 1, hub_and_path_weights},
        {2, "N=8: V_n is the only optimal v_n-v_m cut for all n<m<=5", 10, unique_prefix_cuts},
        {3, "engine lambda, X, Y equal brute force on 200 graphs", 60, cross_oracle},
        {4, "paper and classical trees valid (all pairs) and equivalent", 60, builders_agree},
        {5, "spectrum <= n-1 values; trees have >= 2 optimal singleton leaves", 10, structural_corollaries},
        {6, "order is a strict partial order; partitions and laminar families", 120, order_and_partition},
        {7, "closure under meet/join, uncrossing, inside-separation (n<=8)", 120, uncrossing_and_closure},
        {8, "laminar families pass verify_laminar and verify_separation", 60, laminar_families},
        {9, "graph oracles pass the property suite; bad table rejected", 10, property_suite},
    };

    std::cout << "corpus: " << kCorpusSize << " connected graphs, n in [2,10], weights 1..20, seed " << kCorpusSeed
              << '\n';
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.failures.push_back(std::string("exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = seconds < c.budget_seconds;
        const bool ok = o.failures.empty() && in_time;
        if (!ok) ++failed;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << " [" << o.checks
                  << " checks, " << o.failures.size() << " failed, " << std::fixed << std::setprecision(3) << seconds
                  << " s / " << c.budget_seconds << " s]\n";
        if (!in_time) std::cout << "    over the time budget\n";
        for (std::size_t i = 0; i < o.failures.size() && i < 10; ++i) std::cout << "    " << o.failures[i] << '\n';
        if (o.failures.size() > 10) std::cout << "    ... " << o.failures.size() - 10 << " more\n";
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
