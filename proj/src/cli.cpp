#include "cuttree/cli.hpp"

#include <CLI11.hpp>

#include <ostream>

#include "cuttree/construct.hpp"
#include "cuttree/counterexample.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/graph_io.hpp"
#include "cuttree/mincut.hpp"
#include "cuttree/set_function.hpp"
#include "cuttree/verifier.hpp"

namespace cuttree {
namespace {

struct Options {
    int decimal = -1;
    unsigned threads = 1;
    bool per_component = false;
    bool json = false;
    bool allow_large = false;

    std::string graph_path;
    std::string tree_path;
    std::string oracle_spec;
    std::string method = "paper";
    Vertex root = 0;
    Vertex u = 0;
    Vertex v = 0;
    bool all_pairs = false;
    std::string mode = "exhaustive";
    std::size_t samples = 10000;
    std::uint64_t seed = 1;
    std::size_t pairs_n = 4;
    std::size_t truncation = 0;

    NumberFormat format() const { return decimal >= 0 ? NumberFormat{decimal} : NumberFormat{}; }
};

WeightedGraph load_graph(const Options& o) {
    WeightedGraph g = read_graph_file(o.graph_path);
    if (!o.per_component && !g.is_connected())
        throw InputError("graph '" + o.graph_path + "' is disconnected (use --per-component)");
    return g;
}

Vertex checked_vertex(const WeightedGraph& g, Vertex v) {
    if (v >= g.size()) throw InputError("vertex " + std::to_string(v) + " out of range for " + std::to_string(g.size()) + " vertices");
    return v;
}

GomoryHuTree build_tree(const WeightedGraph& g, const Options& o) {
    auto build = [&](const WeightedGraph& part, Vertex root) {
        if (o.method == "classical") return build_tree_classical(part, root);
        return build_tree_paper(FlowEngine(part), root);
    };
    if (g.size() == 0) return GomoryHuTree{};
    checked_vertex(g, o.root);
    if (g.is_connected()) return build(g, o.root);

    std::vector<GomoryHuTree> parts;
    for (const auto& comp : g.components()) {
        const auto it = std::find(comp.begin(), comp.end(), o.root);
        const Vertex local = it == comp.end() ? 0 : static_cast<Vertex>(it - comp.begin());
        parts.push_back(build(g.induced(comp), local));
    }
    return join_component_trees(g, parts, o.root);
}

void print_report(std::ostream& out, const Report& r, bool json) {
    if (json) out << r.to_json() << '\n';
    else r.print(out);
}

SetFunctionOracle load_oracle(const Options& o) {
    const std::string& spec = o.oracle_spec;
    if (spec.rfind("graph:", 0) == 0) {
        WeightedGraph g = read_graph_file(spec.substr(6));
        return graph_cut_oracle(std::move(g));
    }
    if (spec == "pairs") return pairs_oracle(o.pairs_n);
    if (spec.rfind("pairs:", 0) == 0) {
        const auto n = spec.substr(6);
        if (n.empty() || n.find_first_not_of("0123456789") != std::string::npos)
            throw InputError("bad oracle size in '" + spec + "'");
        return pairs_oracle(std::stoul(n));
    }
    if (spec.rfind("table:", 0) == 0) {
        auto table = std::make_shared<const ValueTable>(read_value_table_file(spec.substr(6), o.allow_large));
        return table_oracle(std::move(table), spec);
    }
    throw InputError("unknown oracle '" + spec + "' (expected graph:<file>, pairs[:n] or table:<file>)");
}

int cmd_tree(const Options& o, std::ostream& out) {
    const auto g = load_graph(o);
    write_tree(out, build_tree(g, o), o.format());
    return kExitOk;
}

int cmd_mincut(const Options& o, std::ostream& out) {
    const auto g = load_graph(o);
    const auto r = min_cut_pair(g, checked_vertex(g, o.u), checked_vertex(g, o.v));
    out << "lambda " << o.format()(r.lambda) << '\n';
    out << "smallest " << r.smallest.to_string() << '\n';
    out << "largest " << r.largest.to_string() << '\n';
    return kExitOk;
}

int cmd_laminar(const Options& o, std::ostream& out) {
    const FlowEngine engine(load_graph(o));
    write_laminar(out, build_laminar_family(engine), o.format());
    return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
    const auto g = load_graph(o);
    const auto tree = read_tree_file(o.tree_path, g.size());
    const FlowEngine engine(g);
    const auto r = verify_gh_tree(engine, tree, o.all_pairs ? TreeCheck::all_pairs : TreeCheck::edges_only, o.threads);
    print_report(out, r, o.json);
    return r.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_check(const Options& o, std::ostream& out) {
    const auto oracle = load_oracle(o);
    CheckOptions opts;
    if (o.mode == "sampled") opts.mode = CheckMode::sampled;
    else if (o.mode != "exhaustive") throw InputError("--mode must be exhaustive or sampled");
    opts.samples = o.samples;
    opts.seed = o.seed;
    opts.allow_large = o.allow_large;
    const auto r = check_properties(oracle, opts);
    print_report(out, r, o.json);
    return r.passed() ? kExitOk : kExitVerificationFailed;
}

int cmd_counterexample(const Options& o, std::ostream& out) {
    const TruncationSpec spec{o.truncation};
    write_graph(out, generate_truncation(spec), o.format());
    if (spec.N > kMaxAnalyzedTruncation) {
        out << "# chain analysis skipped: N > " << kMaxAnalyzedTruncation << '\n';
        return kExitOk;
    }
    const auto analysis = analyze_chain(spec);
    write_chain_report(out, spec, analysis);
    return analysis.truncation_has_tree ? kExitOk : kExitVerificationFailed;
}

int cmd_spectrum(const Options& o, std::ostream& out) {
    const FlowEngine engine(load_graph(o));
    for (const auto& value : lambda_spectrum(engine, o.threads)) out << o.format()(value.finite()) << '\n';
    return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Gomory-Hu trees and laminar families of optimal cuts, with brute-force verification", "cuttree"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--decimal", o.decimal, "Render numbers with this many decimal places instead of exactly")
        ->check(CLI::NonNegativeNumber);
    app.add_option("--threads", o.threads, "Worker threads for brute-force verification")->check(CLI::PositiveNumber);
    app.add_flag("--per-component", o.per_component, "Accept disconnected graphs and work per component");

    auto* tree = app.add_subcommand("tree", "Print a Gomory-Hu tree as 'u v lambda' lines");
    tree->add_option("graph", o.graph_path)->required();
    tree->add_option("--root", o.root, "Root vertex");
    tree->add_option("--method", o.method, "paper or classical")->check(CLI::IsMember({"paper", "classical"}));

    auto* mincut = app.add_subcommand("mincut", "Print lambda and the smallest and largest optimal u-v cuts");
    mincut->add_option("graph", o.graph_path)->required();
    mincut->add_option("u", o.u)->required();
    mincut->add_option("v", o.v)->required();

    auto* laminar = app.add_subcommand("laminar", "Print a laminar family separating every pair optimally");
    laminar->add_option("graph", o.graph_path)->required();

    auto* verify = app.add_subcommand("verify", "Check a tree file against a graph");
    verify->add_option("graph", o.graph_path)->required();
    verify->add_option("tree", o.tree_path)->required();
    verify->add_flag("--all-pairs", o.all_pairs, "Also compare every pair's tree-path minimum with lambda");
    verify->add_flag("--json", o.json, "Emit the report as JSON");

    auto* check = app.add_subcommand("check-properties", "Check the tree-theorem hypotheses of a set function");
    check->add_option("oracle", o.oracle_spec, "graph:<file>, pairs[:n] or table:<file>")->required();
    check->add_option("--mode", o.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
    check->add_option("--samples", o.samples, "Pairs to sample in sampled mode");
    check->add_option("--seed", o.seed, "Sampling seed");
    check->add_option("--n", o.pairs_n, "Ground set size for the pairs oracle");
    check->add_flag("--allow-large", o.allow_large, "Allow exhaustive enumeration up to 20 elements");
    check->add_flag("--json", o.json, "Emit the report as JSON");

    auto* counter = app.add_subcommand("counterexample", "Print truncation N of the hub-and-path graph and its chain analysis");
    counter->add_option("N", o.truncation)->required()->check(CLI::PositiveNumber);

    auto* spectrum = app.add_subcommand("spectrum", "Print the distinct lambda values");
    spectrum->add_option("graph", o.graph_path)->required();

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitInputError;
    }

    try {
        if (tree->parsed()) return cmd_tree(o, out);
        if (mincut->parsed()) return cmd_mincut(o, out);
        if (laminar->parsed()) return cmd_laminar(o, out);
        if (verify->parsed()) return cmd_verify(o, out);
        if (check->parsed()) return cmd_check(o, out);
        if (counter->parsed()) return cmd_counterexample(o, out);
        if (spectrum->parsed()) return cmd_spectrum(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const Error& e) {
        err << "failed: " << e.what() << '\n';
        return kExitVerificationFailed;
    }
    err << app.help();
    return kExitInputError;
}

}  // namespace cuttree
