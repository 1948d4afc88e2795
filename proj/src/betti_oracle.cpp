#include "betti_oracle.hpp"

#include <algorithm>

#include "homology.hpp"

namespace propcalc {

SSetPtr graph_realization(const ColoredGraph& g) {
    auto s = std::make_shared<SSet>();
    std::vector<int> vnode(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        vnode[v] = s->add_simplex(0, {}, "v" + std::to_string(v));
    // one extra node per dangling end
    std::vector<int> src_node(g.edge_count(), -1), tgt_node(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        src_node[e] = g.edges[e].source.attached()
                          ? vnode[g.edges[e].source.vertex]
                          : s->add_simplex(0, {}, "e" + std::to_string(e) + ".src");
        tgt_node[e] = g.edges[e].target.attached()
                          ? vnode[g.edges[e].target.vertex]
                          : s->add_simplex(0, {}, "e" + std::to_string(e) + ".tgt");
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        std::vector<SimplexRef> faces = {s->ref(0, tgt_node[e]), s->ref(0, src_node[e])};
        s->add_simplex(1, std::move(faces), "e" + std::to_string(e));
    }
    s->seal();
    return s;
}

Betti betti_via_homology(const ColoredGraph& g) {
    SSetPtr r = graph_realization(g);
    auto h = homology(*r, 1);
    Betti b;
    b.b0 = static_cast<unsigned>(std::max<long long>(h[0].rank - 1, 0));
    b.b1 = static_cast<unsigned>(h[1].rank);
    return b;
}

} // namespace propcalc
