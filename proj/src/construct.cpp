#include "cuttree/construct.hpp"

#include <algorithm>

#include "cuttree/errors.hpp"

namespace cuttree {
namespace {

void require_vertex(const CutEngine& engine, Vertex v) {
    if (v >= engine.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
}

std::string where(Vertex s, const Cut& x, Vertex u) {
    return "(s=" + std::to_string(s) + ", X=" + x.to_string() + ", u=" + std::to_string(u) + ")";
}

}  // namespace

UncrossOutcome uncross_detailed(const CutEngine& engine, const Cut& x, Vertex s, Vertex t, const Cut& y, Vertex u,
                                Vertex v) {
    if (!engine.is_optimal(x, s, t))
        throw PreconditionViolation("uncross: X=" + x.to_string() + " is not an optimal " + std::to_string(s) + "-" +
                                    std::to_string(t) + " cut");
    if (!engine.is_optimal(y, u, v))
        throw PreconditionViolation("uncross: Y=" + y.to_string() + " is not an optimal " + std::to_string(u) + "-" +
                                    std::to_string(v) + " cut");

    const Cut outside = x.complement();
    UncrossOutcome out;
    const bool u_in = x.contains(u), v_in = x.contains(v);
    if (u_in && !v_in) {
        out.case_number = 1;
        out.second_branch = y.contains(t);
        out.cut = out.second_branch ? (y | x) : (y & x);
    } else if (!u_in && v_in) {
        out.case_number = 2;
        out.second_branch = y.contains(s);
        out.cut = out.second_branch ? (y | outside) : (y - x);
    } else if (u_in && v_in) {
        out.case_number = 3;
        out.second_branch = y.contains(t);
        out.cut = out.second_branch ? (y | outside) : (y & x);
    } else {
        out.case_number = 4;
        out.second_branch = y.contains(s);
        out.cut = out.second_branch ? (y | x) : (y - x);
    }

    if (!engine.is_optimal(out.cut, u, v) || !cross_free(out.cut, x))
        throw InternalConsistencyError("uncross case " + std::to_string(out.case_number) + " produced " +
                                       out.cut.to_string() + ", which is not an optimal non-crossing " +
                                       std::to_string(u) + "-" + std::to_string(v) + " cut");
    return out;
}

Cut uncross(const CutEngine& engine, const Cut& x, Vertex s, Vertex t, const Cut& y, Vertex u, Vertex v) {
    return uncross_detailed(engine, x, s, t, y, u, v).cut;
}

bool prec(const CutEngine& engine, const Cut& x, Vertex u, Vertex v) {
    if (u == v) throw PreconditionViolation("prec: u == v");
    if (!x.contains(u) || !x.contains(v))
        throw PreconditionViolation("prec: " + std::to_string(u) + " and " + std::to_string(v) + " must lie in " +
                                    x.to_string());
    return !engine.smallest(u, v).is_subset_of(x);
}

Vertex minimal_vertex(const CutEngine& engine, const Cut& x, std::optional<Vertex> t, Vertex root) {
    if (x.size() != engine.size()) throw InputError("cut size does not match the ground set");
    if (x.empty()) throw InputError("minimal_vertex: empty cut");
    if (x.is_full()) {
        require_vertex(engine, root);
        return root;
    }
    const auto members = x.members();
    if (members.size() == 1) return members.front();

    std::vector<Vertex> candidates = members;
    ExtRational level;
    if (t) {
        if (x.contains(*t)) throw PreconditionViolation("minimal_vertex: t=" + std::to_string(*t) + " lies in X");
        level = engine.value(x);
        std::erase_if(candidates, [&](Vertex c) { return engine.lambda(c, *t) != level; });
        if (candidates.empty())
            throw PreconditionViolation("minimal_vertex: " + x.to_string() + " is not an optimal cut towards " +
                                        std::to_string(*t));
    }
    for (Vertex c : candidates) {
        const bool minimal =
            std::none_of(members.begin(), members.end(), [&](Vertex y) { return y != c && prec(engine, x, y, c); });
        if (!minimal) continue;
        if (t && engine.lambda(c, *t) != level)
            throw InternalConsistencyError("minimal vertex " + std::to_string(c) + " does not realize " +
                                           x.to_string());
        return c;
    }
    throw InternalConsistencyError("no minimal element in " + x.to_string() + ": the order has a cycle");
}

std::vector<Cut> smallest_cut_family(const CutEngine& engine, Vertex s, const Cut& x) {
    require_vertex(engine, s);
    std::vector<Cut> family;
    for (Vertex u : x.members())
        if (u != s) family.push_back(engine.smallest(u, s));
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());
    return family;
}

std::vector<Cut> partition_family(const CutEngine& engine, Vertex s, const Cut& x) {
    require_vertex(engine, s);
    if (x.size() != engine.size()) throw InputError("cut size does not match the ground set");
    if (!x.contains(s)) throw PreconditionViolation("partition_family: s=" + std::to_string(s) + " not in X");

    Cut rest = x;
    rest.erase(s);
    std::vector<Cut> family;
    for (Vertex u : rest.members()) {
        Cut c = engine.smallest(u, s);
        if (!c.is_subset_of(rest))
            throw PreconditionViolation("X_{u,s}=" + c.to_string() + " leaves X\\{s}; s is not minimal " +
                                        where(s, x, u));
        family.push_back(std::move(c));
    }
    std::sort(family.begin(), family.end());
    family.erase(std::unique(family.begin(), family.end()), family.end());

    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (!laminar_pair(family[i], family[j]))
                throw InternalConsistencyError("smallest-cut family is not laminar: " + family[i].to_string() +
                                               " crosses " + family[j].to_string());

    std::vector<Cut> maximal;
    for (std::size_t i = 0; i < family.size(); ++i) {
        const bool dominated = std::any_of(family.begin(), family.end(), [&](const Cut& other) {
            return other != family[i] && family[i].is_subset_of(other);
        });
        if (!dominated) maximal.push_back(family[i]);
    }
    std::sort(maximal.begin(), maximal.end(),
              [](const Cut& a, const Cut& b) { return a.members().front() < b.members().front(); });

    Cut covered(x.size());
    for (const auto& part : maximal) {
        if (part.intersects(covered))
            throw InternalConsistencyError("maximal smallest cuts overlap at " + where(s, x, part.members().front()));
        covered |= part;
    }
    if (covered != rest)
        throw InternalConsistencyError("maximal smallest cuts cover " + covered.to_string() + ", not X\\{s} " +
                                       where(s, x, s));
    return maximal;
}

GomoryHuTree build_tree_paper(const CutEngine& engine, Vertex root) {
    const std::size_t n = engine.size();
    GomoryHuTree tree;
    tree.n = n;
    tree.root = root;
    if (n == 0) return tree;
    require_vertex(engine, root);

    std::vector<bool> placed(n, false);
    placed[root] = true;
    struct Node {
        Vertex s;
        Cut x;
    };
    std::vector<Node> stack{{root, Cut::full(n)}};
    while (!stack.empty()) {
        Node node = std::move(stack.back());
        stack.pop_back();
        auto parts = partition_family(engine, node.s, node.x);
        std::vector<Node> children;
        for (auto& part : parts) {
            const Vertex child = minimal_vertex(engine, part, node.s, root);
            const ExtRational value = engine.value(part);
            if (value != engine.lambda(child, node.s))
                throw InternalConsistencyError("fundamental cut " + part.to_string() + " is not optimal for " +
                                               std::to_string(node.s) + "-" + std::to_string(child));
            if (placed[child])
                throw InternalConsistencyError("vertex " + std::to_string(child) + " placed twice " +
                                               where(node.s, part, child));
            placed[child] = true;
            tree.edges.push_back(TreeEdge{node.s, child, value.finite()});
            children.push_back(Node{child, std::move(part)});
        }
        for (auto it = children.rbegin(); it != children.rend(); ++it) stack.push_back(std::move(*it));
    }
    for (Vertex v = 0; v < n; ++v)
        if (!placed[v]) throw InternalConsistencyError("vertex " + std::to_string(v) + " never placed in the tree");
    return tree;
}

void orient_from_root(GomoryHuTree& tree) {
    if (tree.n == 0) return;
    std::vector<std::vector<std::pair<Vertex, std::size_t>>> adj(tree.n);
    for (std::size_t i = 0; i < tree.edges.size(); ++i) {
        adj[tree.edges[i].u].emplace_back(tree.edges[i].v, i);
        adj[tree.edges[i].v].emplace_back(tree.edges[i].u, i);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
    std::vector<TreeEdge> oriented;
    std::vector<bool> seen(tree.n, false);
    std::vector<Vertex> queue{tree.root};
    seen[tree.root] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& [y, idx] : adj[queue[head]])
            if (!seen[y]) {
                seen[y] = true;
                oriented.push_back(TreeEdge{queue[head], y, tree.edges[idx].lambda});
                queue.push_back(y);
            }
    if (oriented.size() != tree.edges.size()) throw InputError("orient_from_root: not a spanning tree");
    tree.edges = std::move(oriented);
}

GomoryHuTree join_component_trees(const WeightedGraph& g, const std::vector<GomoryHuTree>& parts, Vertex root) {
    const auto comps = g.components();
    if (comps.size() != parts.size()) throw InputError("one tree per component expected");
    GomoryHuTree tree;
    tree.n = g.size();
    tree.root = root;
    for (std::size_t k = 0; k < comps.size(); ++k) {
        for (const auto& e : parts[k].edges) tree.edges.push_back(TreeEdge{comps[k][e.u], comps[k][e.v], e.lambda});
        if (k > 0) tree.edges.push_back(TreeEdge{comps[0].front(), comps[k].front(), Rational(0)});
    }
    if (tree.n > 0) orient_from_root(tree);
    return tree;
}

}  // namespace cuttree
