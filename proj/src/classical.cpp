#include <algorithm>

#include "cuttree/construct.hpp"
#include "cuttree/errors.hpp"
#include "cuttree/mincut.hpp"

namespace cuttree {
namespace {

struct GroupEdge {
    std::size_t a;
    std::size_t b;
    Rational w;
};

}  // namespace

GomoryHuTree build_tree_classical(const WeightedGraph& g, Vertex root) {
    const std::size_t n = g.size();
    GomoryHuTree tree;
    tree.n = n;
    tree.root = root;
    if (n == 0) return tree;
    if (root >= n) throw InputError("root out of range");
    if (!g.is_connected()) throw InputError("build_tree_classical needs a connected graph");

    std::vector<std::vector<Vertex>> groups(1);
    for (Vertex v = 0; v < n; ++v) groups[0].push_back(v);
    std::vector<GroupEdge> edges;

    for (;;) {
        const auto split = std::find_if(groups.begin(), groups.end(), [](const auto& grp) { return grp.size() >= 2; });
        if (split == groups.end()) break;
        const std::size_t gid = static_cast<std::size_t>(split - groups.begin());
        const std::vector<Vertex> members = groups[gid];
        const Vertex s = members[0], t = members[1];

        // Components of the group tree once gid is removed; each becomes one
        // contracted vertex.
        std::vector<std::vector<std::size_t>> adj(groups.size());
        for (std::size_t i = 0; i < edges.size(); ++i) {
            adj[edges[i].a].push_back(i);
            adj[edges[i].b].push_back(i);
        }
        constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
        std::vector<std::size_t> component(groups.size(), kUnset);
        std::size_t components = 0;
        for (std::size_t start = 0; start < groups.size(); ++start) {
            if (start == gid || component[start] != kUnset) continue;
            component[start] = components;
            std::vector<std::size_t> stack{start};
            while (!stack.empty()) {
                const auto x = stack.back();
                stack.pop_back();
                for (auto idx : adj[x]) {
                    const auto y = edges[idx].a == x ? edges[idx].b : edges[idx].a;
                    if (y != gid && component[y] == kUnset) {
                        component[y] = components;
                        stack.push_back(y);
                    }
                }
            }
            ++components;
        }

        std::vector<Vertex> image(n);
        for (std::size_t i = 0; i < members.size(); ++i) image[members[i]] = i;
        for (std::size_t grp = 0; grp < groups.size(); ++grp)
            if (grp != gid)
                for (Vertex v : groups[grp]) image[v] = members.size() + component[grp];

        std::vector<Edge> contracted;
        contracted.reserve(g.edges().size());
        for (const auto& e : g.edges()) contracted.push_back(Edge{image[e.u], image[e.v], e.w});
        const WeightedGraph h(members.size() + components, std::move(contracted));
        const auto flow = max_flow(h, image[s], image[t]);

        std::vector<Vertex> keep, moved;
        for (Vertex v : members) (flow.source_side.contains(image[v]) ? keep : moved).push_back(v);
        const std::size_t new_id = groups.size();
        groups[gid] = std::move(keep);
        groups.push_back(std::move(moved));

        for (auto& e : edges) {
            if (e.a != gid && e.b != gid) continue;
            const std::size_t other = e.a == gid ? e.b : e.a;
            if (flow.source_side.contains(members.size() + component[other])) continue;
            (e.a == gid ? e.a : e.b) = new_id;
        }
        edges.push_back(GroupEdge{gid, new_id, flow.value});
    }

    for (const auto& e : edges) tree.edges.push_back(TreeEdge{groups[e.a].front(), groups[e.b].front(), e.w});
    orient_from_root(tree);
    return tree;
}

}  // namespace cuttree
