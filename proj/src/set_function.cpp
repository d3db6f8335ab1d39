#include "cuttree/set_function.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "cuttree/errors.hpp"
#include "cuttree/kernels.hpp"

namespace cuttree {
namespace {

// Pairwise scans are quadratic in 2^n; above this we switch to the local
// (single-element exchange) characterisation of submodularity.
constexpr std::size_t kPairwiseLimit = 14;

std::string set_str(std::size_t n, std::uint32_t mask) { return Cut::from_mask(n, mask).to_string(); }

std::string inequality_detail(const ValueTable& t, std::uint32_t x, std::uint32_t y, std::uint32_t a,
                              std::uint32_t b, const char* rhs_name) {
    const auto n = t.ground_size();
    std::ostringstream os;
    os << "X=" << set_str(n, x) << " Y=" << set_str(n, y) << ": b(X)+b(Y)=" << (t.at(x) + t.at(y)).to_string()
       << " < " << rhs_name << "=" << (t.at(a) + t.at(b)).to_string();
    return os.str();
}

bool violates(const ValueTable& t, std::uint32_t x, std::uint32_t y, std::uint32_t a, std::uint32_t b) {
    return t.at(x) + t.at(y) < t.at(a) + t.at(b);
}

std::optional<kernels::Violation> pairwise_submodular(const ValueTable& t) {
    if (t.image()) return kernels::first_submodular_violation(t.image()->scaled);
    const auto size = t.full_mask() + 1;
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = x + 1; y < size; ++y)
            if (violates(t, x, y, x & y, x | y)) return kernels::Violation{x, y};
    return std::nullopt;
}

std::optional<kernels::Violation> pairwise_posimodular(const ValueTable& t) {
    if (t.image()) return kernels::first_posimodular_violation(t.image()->scaled);
    const auto size = t.full_mask() + 1;
    for (std::uint32_t x = 0; x < size; ++x)
        for (std::uint32_t y = x + 1; y < size; ++y)
            if (violates(t, x, y, x & ~y, y & ~x)) return kernels::Violation{x, y};
    return std::nullopt;
}

// b is submodular iff b(S+a) + b(S+c) >= b(S) + b(S+a+c) for all S and a, c
// outside S; a violation yields the pair (S+a, S+c).
std::optional<kernels::Violation> local_submodular(const ValueTable& t) {
    const auto n = t.ground_size();
    const auto size = t.full_mask() + 1;
    for (std::uint32_t s = 0; s < size; ++s)
        for (std::size_t a = 0; a < n; ++a) {
            const std::uint32_t sa = s | (1U << a);
            if (sa == s) continue;
            for (std::size_t c = a + 1; c < n; ++c) {
                const std::uint32_t sc = s | (1U << c);
                if (sc == s) continue;
                if (violates(t, sa, sc, s, sa | sc)) return kernels::Violation{sa, sc};
            }
        }
    return std::nullopt;
}

}  // namespace

SetFunctionOracle graph_cut_oracle(WeightedGraph g) {
    auto shared = std::make_shared<const WeightedGraph>(std::move(g));
    SetFunctionOracle b;
    b.ground_size = shared->size();
    b.evaluate = [shared](const Cut& x) { return ExtRational(cut_value(*shared, x)); };
    b.name = "graph";
    b.graph = shared;
    return b;
}

SetFunctionOracle pairs_oracle(std::size_t n) {
    SetFunctionOracle b;
    b.ground_size = n;
    b.evaluate = [n](const Cut& x) {
        if (x.size() != n) throw InputError("cut size does not match oracle");
        const auto k = static_cast<long>(x.count());
        return ExtRational(Rational(k * (static_cast<long>(n) - k)));
    };
    b.name = "pairs";
    return b;
}

SetFunctionOracle table_oracle(std::shared_ptr<const ValueTable> table, std::string name) {
    SetFunctionOracle b;
    b.ground_size = table->ground_size();
    b.evaluate = [table](const Cut& x) { return table->at(x); };
    b.name = std::move(name);
    return b;
}

ValueTable read_value_table(std::istream& in, bool allow_large) {
    std::map<std::uint64_t, ExtRational> entries;
    std::size_t line_no = 0;
    for (std::string line; std::getline(in, line);) {
        ++line_no;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ss(line);
        std::string mask_tok, value_tok, extra;
        if (!(ss >> mask_tok >> value_tok) || (ss >> extra))
            throw InputError("line " + std::to_string(line_no) + ": expected 'subset-bitmask value'");
        if (mask_tok.find_first_not_of("0123456789") != std::string::npos || mask_tok.size() > 18)
            throw InputError("line " + std::to_string(line_no) + ": bad subset mask '" + mask_tok + "'");
        const auto mask = std::stoull(mask_tok);
        ExtRational value;
        try {
            value = ExtRational::parse(value_tok);
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(line_no) + ": " + e.what());
        }
        if (value < ExtRational(0)) throw InputError("line " + std::to_string(line_no) + ": negative value");
        if (!entries.emplace(mask, value).second)
            throw InputError("line " + std::to_string(line_no) + ": mask " + mask_tok + " listed twice");
    }
    const auto count = entries.size();
    if (count == 0 || !std::has_single_bit(count))
        throw InputError("value table must list exactly 2^n masks, got " + std::to_string(count));
    const auto n = static_cast<std::size_t>(std::countr_zero(count));
    std::vector<ExtRational> values;
    values.reserve(count);
    std::uint64_t expected = 0;
    for (auto& [mask, value] : entries) {
        if (mask != expected) throw InputError("value table is missing mask " + std::to_string(expected));
        values.push_back(std::move(value));
        ++expected;
    }
    return ValueTable::from_values(n, std::move(values), allow_large);
}

ValueTable read_value_table_file(const std::string& path, bool allow_large) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    return read_value_table(in, allow_large);
}

ValueTable tabulate(const SetFunctionOracle& b, bool allow_large) {
    if (b.graph) return ValueTable::from_graph(*b.graph, allow_large);
    return ValueTable::from_function(b.ground_size, b.evaluate, allow_large);
}

Report check_properties(const ValueTable& t) {
    Report r;
    const auto n = t.ground_size();
    const auto full = t.full_mask();
    const auto size = full + 1;

    {
        std::optional<std::uint32_t> bad;
        for (std::uint32_t m = 0; m < size && !bad; ++m) {
            const bool trivial = m == 0 || m == full;
            if ((t.at(m) == ExtRational(0)) != trivial) bad = m;
        }
        if (bad)
            r.add("zero-set", Status::fail,
                  "X=" + set_str(n, *bad) + " has b(X)=" + t.at(*bad).to_string());
        else
            r.add("zero-set", Status::pass, "b(X)=0 exactly for X in {empty, V}");
    }

    bool symmetric = true;
    {
        std::optional<std::uint32_t> bad;
        for (std::uint32_t m = 0; m < size && !bad; ++m)
            if (t.at(m) != t.at(full ^ m)) bad = m;
        symmetric = !bad;
        if (bad)
            r.add("symmetry", Status::fail,
                  "X=" + set_str(n, *bad) + ": b(X)=" + t.at(*bad).to_string() +
                      " but b(V\\X)=" + t.at(full ^ *bad).to_string());
        else
            r.add("symmetry", Status::pass);
    }

    const bool pairwise = n <= kPairwiseLimit;
    const auto sub = pairwise ? pairwise_submodular(t) : local_submodular(t);
    if (sub)
        r.add("submodularity", Status::fail,
              inequality_detail(t, sub->x, sub->y, sub->x & sub->y, sub->x | sub->y, "b(X&Y)+b(X|Y)"));
    else
        r.add("submodularity", Status::pass, pairwise ? "all pairs" : "all single-element exchanges");

    if (pairwise) {
        if (const auto pos = pairwise_posimodular(t))
            r.add("posimodularity", Status::fail,
                  inequality_detail(t, pos->x, pos->y, pos->x & ~pos->y, pos->y & ~pos->x, "b(X\\Y)+b(Y\\X)"));
        else
            r.add("posimodularity", Status::pass, "all pairs");
    } else if (symmetric) {
        // Under symmetry, posimodularity of (X, Y) is submodularity of (X, V\Y).
        if (sub) {
            const std::uint32_t x = sub->x, y = full ^ sub->y;
            r.add("posimodularity", Status::fail, inequality_detail(t, x, y, x & ~y, y & ~x, "b(X\\Y)+b(Y\\X)"));
        } else {
            r.add("posimodularity", Status::pass, "implied by symmetry and submodularity");
        }
    } else {
        r.add("posimodularity", Status::skipped, "ground set too large for a pairwise scan and b is not symmetric");
    }

    const char* finite_note = "finite ground set: every nested sequence of subsets is eventually constant";
    r.add("monotone-continuity", Status::vacuous, finite_note);
    r.add("monotone-continuity-weak", Status::vacuous, finite_note);

    {
        std::optional<std::pair<Vertex, Vertex>> bad;
        for (Vertex u = 0; u < n && !bad; ++u)
            for (Vertex v = 0; v < n && !bad; ++v)
                if (u != v && t.min_between(u, v).is_infinite()) bad = std::pair{u, v};
        if (bad)
            r.add("finite-separability", Status::fail,
                  "every " + std::to_string(bad->first) + "-" + std::to_string(bad->second) + " cut has infinite value");
        else
            r.add("finite-separability", Status::pass);
    }
    return r;
}

Report check_properties(const SetFunctionOracle& b, const CheckOptions& options) {
    if (options.mode == CheckMode::exhaustive) return check_properties(tabulate(b, options.allow_large));

    Report r;
    const auto n = b.ground_size;
    std::mt19937_64 rng(options.seed);
    std::bernoulli_distribution coin(0.5);
    auto random_cut = [&] {
        Cut x(n);
        for (Vertex v = 0; v < n; ++v)
            if (coin(rng)) x.insert(v);
        return x;
    };
    const std::string note = std::to_string(options.samples) + " sampled pairs, seed " + std::to_string(options.seed);

    std::optional<std::string> zero_bad, sym_bad, sub_bad, pos_bad;
    const Cut none(n), all = Cut::full(n);
    if (b.evaluate(none) != ExtRational(0)) zero_bad = "X={} has b(X)=" + b.evaluate(none).to_string();
    if (!zero_bad && b.evaluate(all) != ExtRational(0)) zero_bad = "X=V has b(X)=" + b.evaluate(all).to_string();

    for (std::size_t i = 0; i < options.samples; ++i) {
        const Cut x = random_cut(), y = random_cut();
        const auto bx = b.evaluate(x), by = b.evaluate(y);
        if (!zero_bad && !x.empty() && !x.is_full() && bx == ExtRational(0))
            zero_bad = "X=" + x.to_string() + " has b(X)=0";
        if (!sym_bad && bx != b.evaluate(x.complement()))
            sym_bad = "X=" + x.to_string() + ": b(X)=" + bx.to_string() +
                      " but b(V\\X)=" + b.evaluate(x.complement()).to_string();
        if (!sub_bad && bx + by < b.evaluate(x & y) + b.evaluate(x | y))
            sub_bad = "X=" + x.to_string() + " Y=" + y.to_string() + ": b(X)+b(Y) < b(X&Y)+b(X|Y)";
        if (!pos_bad && bx + by < b.evaluate(x - y) + b.evaluate(y - x))
            pos_bad = "X=" + x.to_string() + " Y=" + y.to_string() + ": b(X)+b(Y) < b(X\\Y)+b(Y\\X)";
    }
    auto add = [&](const char* name, const std::optional<std::string>& bad) {
        if (bad) r.add(name, Status::fail, *bad);
        else r.add(name, Status::pass, note);
    };
    add("zero-set", zero_bad);
    add("symmetry", sym_bad);
    add("submodularity", sub_bad);
    add("posimodularity", pos_bad);
    const char* finite_note = "finite ground set: every nested sequence of subsets is eventually constant";
    r.add("monotone-continuity", Status::vacuous, finite_note);
    r.add("monotone-continuity-weak", Status::vacuous, finite_note);
    r.add("finite-separability", Status::skipped, "needs exhaustive enumeration");
    return r;
}

ExtRational lambda_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large) {
    return tabulate(b, allow_large).min_between(u, v);
}

OptimalCuts optimal_cuts_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large) {
    const auto t = tabulate(b, allow_large);
    OptimalCuts out{t.min_between(u, v), {}};
    for (auto m : t.minimizers(u, v)) out.minimizers.push_back(Cut::from_mask(t.ground_size(), m));
    return out;
}

namespace {

struct Extremes {
    std::uint32_t meet;
    std::uint32_t join;
};

Extremes extreme_minimizers(const ValueTable& t, Vertex u, Vertex v, std::string_view name) {
    const auto masks = t.minimizers(u, v);
    Extremes e{t.full_mask(), 0};
    for (auto m : masks) {
        e.meet &= m;
        e.join |= m;
    }
    auto is_min = [&](std::uint32_t m) { return std::binary_search(masks.begin(), masks.end(), m); };
    if (!is_min(e.meet) || !is_min(e.join))
        throw PropertyViolation("set function '" + std::string(name) + "' is not submodular: the " +
                                (is_min(e.meet) ? "union" : "intersection") + " of the optimal " +
                                std::to_string(u) + "-" + std::to_string(v) + " cuts is not optimal");
    return e;
}

}  // namespace

Cut smallest_optimal_cut_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large) {
    const auto t = tabulate(b, allow_large);
    return Cut::from_mask(t.ground_size(), extreme_minimizers(t, u, v, b.name).meet);
}

Cut largest_optimal_cut_b(const SetFunctionOracle& b, Vertex u, Vertex v, bool allow_large) {
    const auto t = tabulate(b, allow_large);
    return Cut::from_mask(t.ground_size(), extreme_minimizers(t, u, v, b.name).join);
}

OracleEngine::OracleEngine(std::shared_ptr<const ValueTable> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {}

OracleEngine::OracleEngine(const SetFunctionOracle& b, bool allow_large)
    : table_(std::make_shared<const ValueTable>(tabulate(b, allow_large))), name_(b.name) {}

OracleEngine::OracleEngine(const WeightedGraph& g, bool allow_large)
    : table_(std::make_shared<const ValueTable>(ValueTable::from_graph(g, allow_large))), name_("exhaustive") {}

const OracleEngine::PairEntry& OracleEngine::pair(Vertex u, Vertex v) const {
    {
        std::lock_guard lock(mutex_);
        if (auto it = cache_.find({u, v}); it != cache_.end()) return it->second;
    }
    const auto e = extreme_minimizers(*table_, u, v, name_);
    const auto n = table_->ground_size();
    PairEntry entry{table_->at(e.meet), Cut::from_mask(n, e.meet), Cut::from_mask(n, e.join)};
    std::lock_guard lock(mutex_);
    return cache_.emplace(std::pair{u, v}, std::move(entry)).first->second;
}

}  // namespace cuttree
