#include <algorithm>

#include "cuttree/construct.hpp"
#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

std::string pair_str(Vertex a, Vertex b) { return std::to_string(a) + "-" + std::to_string(b); }

// Orientation (a, b) such that X_{a,b} fits below every member containing both
// ends and is disjoint from every member containing b only.
std::pair<Vertex, Vertex> orientation(const CutEngine& engine, const LaminarFamily& family, Vertex u, Vertex v) {
    const Cut x_uv = engine.smallest(u, v);
    const Cut x_vu = engine.smallest(v, u);
    for (const auto& m : family.members)
        if (m.cut.is_cut_between(u, v) && x_uv.is_subset_of(m.cut)) return {u, v};
    for (const auto& m : family.members)
        if (m.cut.is_cut_between(v, u) && x_vu.is_subset_of(m.cut)) return {v, u};

    // Members containing both ends form a chain; its bottom contains X_{u,v}
    // or X_{v,u}.
    const LaminarMember* bottom = nullptr;
    for (const auto& m : family.members)
        if (m.cut.contains(u) && m.cut.contains(v) && (!bottom || m.cut.is_subset_of(bottom->cut))) bottom = &m;
    if (!bottom || x_uv.is_subset_of(bottom->cut)) return {u, v};
    if (x_vu.is_subset_of(bottom->cut)) return {v, u};
    throw InternalConsistencyError("neither X_{" + pair_str(u, v) + "} nor its reverse fits inside " +
                                   bottom->cut.to_string());
}

void require_optimal(const CutEngine& engine, const Cut& x, Vertex a, Vertex b, const char* stage) {
    if (!engine.is_optimal(x, a, b))
        throw InternalConsistencyError(std::string(stage) + ": " + x.to_string() + " is not an optimal " +
                                       pair_str(a, b) + " cut");
}

}  // namespace

LaminarMember laminar_insertion(const CutEngine& engine, const LaminarFamily& family, Vertex u, Vertex v) {
    if (u == v) throw InputError("laminar_insertion: u == v");
    if (u >= engine.size() || v >= engine.size()) throw InputError("laminar_insertion: vertex out of range");

    const auto [a, b] = orientation(engine, family, u, v);
    const Cut base = engine.smallest(a, b);
    const ExtRational lambda = engine.lambda(a, b);

    // Members holding a but not b that cross X_{a,b}: union them in.
    Cut grown = base;
    for (const auto& m : family.members)
        if (m.cut.is_cut_between(a, b) && !laminar_pair(base, m.cut)) {
            grown |= m.cut;
            require_optimal(engine, grown, a, b, "absorbing a crossing member on the source side");
        }

    // Members avoiding both ends that cross the grown cut: their witness source
    // lies in X_{a,b}, so each union stays optimal.
    const Cut first_stage = grown;
    for (const auto& m : family.members) {
        if (m.cut.contains(a) || m.cut.contains(b) || laminar_pair(first_stage, m.cut)) continue;
        if (!base.contains(m.s))
            throw InternalConsistencyError("crossing member " + m.cut.to_string() + " has witness source " +
                                           std::to_string(m.s) + " outside X_{" + pair_str(a, b) + "}");
        grown |= m.cut;
        require_optimal(engine, grown, a, b, "absorbing a crossing member away from both ends");
    }

    for (const auto& m : family.members)
        if (!laminar_pair(grown, m.cut))
            throw InternalConsistencyError("inserted cut " + grown.to_string() + " crosses member " +
                                           m.cut.to_string());
    return LaminarMember{std::move(grown), a, b, lambda.finite()};
}

bool separates_optimally(const CutEngine& engine, const LaminarFamily& family, Vertex u, Vertex v) {
    const ExtRational lambda = engine.lambda(u, v);
    return std::any_of(family.members.begin(), family.members.end(), [&](const LaminarMember& m) {
        return m.cut.separates(u, v) && engine.value(m.cut) == lambda;
    });
}

LaminarFamily build_laminar_family(const CutEngine& engine, std::span<const std::pair<Vertex, Vertex>> pairs) {
    std::vector<std::pair<Vertex, Vertex>> ordered;
    for (auto [u, v] : pairs) {
        if (u == v) throw InputError("pair with u == v");
        if (u >= engine.size() || v >= engine.size()) throw InputError("pair vertex out of range");
        ordered.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(ordered.begin(), ordered.end());
    ordered.erase(std::unique(ordered.begin(), ordered.end()), ordered.end());

    LaminarFamily family;
    family.n = engine.size();
    for (auto [u, v] : ordered)
        if (!separates_optimally(engine, family, u, v)) family.members.push_back(laminar_insertion(engine, family, u, v));
    return family;
}

LaminarFamily build_laminar_family(const CutEngine& engine) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex u = 0; u < engine.size(); ++u)
        for (Vertex v = u + 1; v < engine.size(); ++v) pairs.emplace_back(u, v);
    return build_laminar_family(engine, pairs);
}

}  // namespace cuttree
