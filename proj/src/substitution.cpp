#include "substitution.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace propcalc {

namespace {

struct Fuse {
    std::vector<int> parent;
    explicit Fuse(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

} // namespace

ValidationReport validate(const SubstitutionData& d) {
    ValidationReport rep;
    if (static_cast<int>(d.assignment.size()) != d.target.vertex_count()) {
        rep.issues.push_back({"assignment", "one replacement graph per vertex required"});
        return rep;
    }
    for (int v = 0; v < d.target.vertex_count(); ++v) {
        Biprofile want = d.target.vertex_profile(v);
        Biprofile got = d.assignment[v].biprofile();
        if (!(want == got))
            rep.issues.push_back({"profile", "vertex " + std::to_string(v) + " expects (" +
                                                 want.key() + "), replacement has (" +
                                                 got.key() + ")"});
    }
    return rep;
}

ColoredGraph substitute(const SubstitutionData& d) {
    {
        ValidationReport rep = validate(d);
        if (!rep.ok()) throw ProfileError("substitute: " + rep.summary());
    }
    const ColoredGraph& G = d.target;
    const int gnv = G.vertex_count();

    // Vertex layout of the result: H_0's vertices, then H_1's, ...
    std::vector<int> vbase(gnv + 1, 0);
    for (int v = 0; v < gnv; ++v)
        vbase[v + 1] = vbase[v] + d.assignment[v].vertex_count();

    // Edge tokens: G's edges first, then each H_v's.
    std::vector<int> ebase(gnv + 1, G.edge_count());
    for (int v = 0; v < gnv; ++v)
        ebase[v + 1] = ebase[v] + d.assignment[v].edge_count();
    const int ntokens = ebase[gnv];

    Fuse fuse(ntokens);
    for (int v = 0; v < gnv; ++v) {
        const ColoredGraph& H = d.assignment[v];
        for (int k = 0; k < G.vertices[v].in_arity(); ++k)
            fuse.unite(G.vertices[v].inputs[k], ebase[v] + H.graph_inputs[k]);
        for (int k = 0; k < G.vertices[v].out_arity(); ++k)
            fuse.unite(G.vertices[v].outputs[k], ebase[v] + H.graph_outputs[k]);
    }

    // Deterministic class order: by smallest member token.
    std::vector<int> class_of(ntokens, -1);
    std::vector<int> class_order;
    for (int t = 0; t < ntokens; ++t) {
        int r = fuse.find(t);
        if (class_of[r] < 0) {
            class_of[r] = static_cast<int>(class_order.size());
            class_order.push_back(r);
        }
        class_of[t] = class_of[r];
    }
    const int nclasses = static_cast<int>(class_order.size());

    ColoredGraph K;
    K.colors = G.colors;
    for (int v = 0; v < gnv; ++v)
        for (const auto& c : d.assignment[v].colors)
            if (std::find(K.colors.begin(), K.colors.end(), c) == K.colors.end())
                K.colors.push_back(c);

    K.vertices.resize(vbase[gnv]);
    for (int v = 0; v < gnv; ++v) {
        const ColoredGraph& H = d.assignment[v];
        for (int u = 0; u < H.vertex_count(); ++u) {
            GraphVertex& nu = K.vertices[vbase[v] + u];
            for (int e : H.vertices[u].inputs) nu.inputs.push_back(class_of[ebase[v] + e]);
            for (int e : H.vertices[u].outputs) nu.outputs.push_back(class_of[ebase[v] + e]);
        }
    }

    // Resolve each fused class to one result edge. The source terminal is an
    // H-edge attached inside its H_v, or a G-edge whose source dangles;
    // symmetrically for targets. Wheel-freeness of G makes both unique.
    K.edges.assign(nclasses, GraphEdge{});
    std::vector<int> src_found(nclasses, 0), tgt_found(nclasses, 0), color_set(nclasses, 0);
    auto put_color = [&](int cls, const Color& c) {
        if (!color_set[cls]) {
            K.edges[cls].color = c;
            color_set[cls] = 1;
        }
    };
    for (int e = 0; e < G.edge_count(); ++e) {
        int cls = class_of[e];
        put_color(cls, G.edges[e].color);
        if (!G.edges[e].source.attached()) {
            K.edges[cls].source = PortRef{};
            ++src_found[cls];
        }
        if (!G.edges[e].target.attached()) {
            K.edges[cls].target = PortRef{};
            ++tgt_found[cls];
        }
    }
    for (int v = 0; v < gnv; ++v) {
        const ColoredGraph& H = d.assignment[v];
        for (int e = 0; e < H.edge_count(); ++e) {
            int cls = class_of[ebase[v] + e];
            put_color(cls, H.edges[e].color);
            if (H.edges[e].source.attached()) {
                K.edges[cls].source =
                    PortRef{vbase[v] + H.edges[e].source.vertex, H.edges[e].source.port};
                ++src_found[cls];
            }
            if (H.edges[e].target.attached()) {
                K.edges[cls].target =
                    PortRef{vbase[v] + H.edges[e].target.vertex, H.edges[e].target.port};
                ++tgt_found[cls];
            }
        }
    }
    for (int c = 0; c < nclasses; ++c) {
        if (src_found[c] != 1 || tgt_found[c] != 1)
            throw ValidationError("substitute: ill-formed splice (class with " +
                                  std::to_string(src_found[c]) + " sources, " +
                                  std::to_string(tgt_found[c]) + " targets)");
    }

    for (int e : G.graph_inputs) K.graph_inputs.push_back(class_of[e]);
    for (int e : G.graph_outputs) K.graph_outputs.push_back(class_of[e]);

    require_valid(K, "substitute result");
    return K;
}

SubstitutionData identity_substitution(const ColoredGraph& g) {
    SubstitutionData d;
    d.target = g;
    d.assignment.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        d.assignment.push_back(make_corolla(g.colors, g.vertex_profile(v)));
    return d;
}

ColoredGraph graft(const ColoredGraph& g, const ColoredGraph& g2) {
    Biprofile a = g.biprofile();
    Biprofile b = g2.biprofile();
    if (a.out_arity() != 1 || b.in_arity() != 1)
        throw ProfileError("graft: need exactly one output on the first graph and one "
                           "input on the second");
    if (a.outputs[0] != b.inputs[0])
        throw ProfileError("graft: output color " + a.outputs[0] +
                           " does not match input color " + b.inputs[0]);

    // Two-vertex grafting template: u with g's profile, w with g2's, joined
    // by one internal edge.
    ColoredGraph T;
    T.colors = g.colors;
    for (const auto& c : g2.colors)
        if (std::find(T.colors.begin(), T.colors.end(), c) == T.colors.end())
            T.colors.push_back(c);
    T.vertices.resize(2);
    const int n = a.in_arity();
    const int m = b.out_arity();
    for (int i = 0; i < n; ++i) {
        T.edges.push_back({a.inputs[i], PortRef{}, PortRef{0, i}});
        T.vertices[0].inputs.push_back(i);
        T.graph_inputs.push_back(i);
    }
    T.edges.push_back({a.outputs[0], PortRef{0, 0}, PortRef{1, 0}});
    T.vertices[0].outputs.push_back(n);
    T.vertices[1].inputs.push_back(n);
    for (int j = 0; j < m; ++j) {
        T.edges.push_back({b.outputs[j], PortRef{1, j}, PortRef{}});
        T.vertices[1].outputs.push_back(n + 1 + j);
        T.graph_outputs.push_back(n + 1 + j);
    }

    SubstitutionData d;
    d.target = std::move(T);
    d.assignment = {g, g2};
    return substitute(d);
}

SubstitutionData compose_substitution_data(const SubstitutionData& inner,
                                           const SubstitutionData& outer,
                                           std::optional<GraphIso> iso) {
    ColoredGraph Kp = substitute(outer); // vertices laid out per-outer-vertex
    if (!iso) {
        int bound = std::max({kDefaultIsoVertexBound, Kp.vertex_count(),
                              inner.target.vertex_count()});
        iso = find_iso(Kp, inner.target, IsoFlavor::Strict, bound);
        if (!iso)
            throw ValidationError("compose_substitution_data: substitute(outer) is not "
                                  "strictly isomorphic to inner.target");
    }
    if (!check_iso(Kp, inner.target, *iso) || iso->flavor != IsoFlavor::Strict)
        throw ValidationError("compose_substitution_data: supplied witness is not a "
                              "strict isomorphism");

    const ColoredGraph& G = outer.target;
    std::vector<int> vbase(G.vertex_count() + 1, 0);
    for (int v = 0; v < G.vertex_count(); ++v)
        vbase[v + 1] = vbase[v] + outer.assignment[v].vertex_count();

    SubstitutionData out;
    out.target = G;
    out.assignment.reserve(G.vertex_count());
    for (int v = 0; v < G.vertex_count(); ++v) {
        SubstitutionData per;
        per.target = outer.assignment[v];
        per.assignment.reserve(per.target.vertex_count());
        for (int u = 0; u < per.target.vertex_count(); ++u) {
            int w = iso->vertex_map[vbase[v] + u]; // vertex of inner.target
            per.assignment.push_back(inner.assignment[w]);
        }
        out.assignment.push_back(substitute(per));
    }
    return out;
}

bool scheme_member(Scheme scheme, const ColoredGraph& g) {
    switch (scheme) {
    case Scheme::Prop: return validate(g).ok();
    case Scheme::Properad: return validate(g).ok() && is_connected(g);
    case Scheme::Dioperad: return validate(g).ok() && is_simply_connected(g);
    }
    return false;
}

ClosureReport check_closure(Scheme scheme, const ClosureOptions& opts) {
    ClosureReport rep;

    // Pools of scheme members per biprofile for the substitution side.
    std::map<std::string, std::vector<ColoredGraph>> pools;
    auto pool_for = [&](const Biprofile& bp) -> const std::vector<ColoredGraph>& {
        auto it = pools.find(bp.key());
        if (it != pools.end()) return it->second;
        EnumerationParams p;
        p.scheme = scheme;
        p.colors = opts.colors;
        p.biprofile = bp;
        p.max_vertices = opts.max_sub_vertices;
        p.max_vertex_in = opts.max_vertex_in;
        p.max_vertex_out = opts.max_vertex_out;
        return pools.emplace(bp.key(), enumerate_graphs(p)).first->second;
    };

    // Targets: scheme members over all biprofiles within the leg cap.
    std::vector<ColoredGraph> targets;
    for (int n = 0; n <= opts.max_legs; ++n) {
        for (int m = 0; m <= opts.max_legs; ++m) {
            std::vector<std::vector<Color>> ins, outs;
            std::function<void(std::vector<Color>&, int, std::vector<std::vector<Color>>&)>
                fill = [&](std::vector<Color>& cur, int len,
                           std::vector<std::vector<Color>>& sink) {
                    if (static_cast<int>(cur.size()) == len) {
                        sink.push_back(cur);
                        return;
                    }
                    for (const auto& c : opts.colors) {
                        cur.push_back(c);
                        fill(cur, len, sink);
                        cur.pop_back();
                    }
                };
            std::vector<Color> cur;
            fill(cur, n, ins);
            cur.clear();
            fill(cur, m, outs);
            for (const auto& in : ins) {
                for (const auto& out : outs) {
                    EnumerationParams p;
                    p.scheme = scheme;
                    p.colors = opts.colors;
                    p.biprofile = {in, out};
                    p.max_vertices = opts.max_target_vertices;
                    p.max_vertex_in = opts.max_vertex_in;
                    p.max_vertex_out = opts.max_vertex_out;
                    auto gs = enumerate_graphs(p);
                    targets.insert(targets.end(), gs.begin(), gs.end());
                }
            }
        }
    }

    auto run_case = [&](SubstitutionData&& d) {
        ColoredGraph K = substitute(d);
        ++rep.cases_checked;
        if (!scheme_member(scheme, K))
            rep.counterexamples.push_back(
                {std::move(d), "substitution left the scheme"});
    };

    for (const auto& G : targets) {
        // Exhaust all assignments drawn from the pools.
        std::vector<const std::vector<ColoredGraph>*> per(G.vertex_count());
        bool empty = false;
        for (int v = 0; v < G.vertex_count(); ++v) {
            per[v] = &pool_for(G.vertex_profile(v));
            if (per[v]->empty()) empty = true;
        }
        if (empty) continue;
        std::vector<size_t> idx(G.vertex_count(), 0);
        while (true) {
            SubstitutionData d;
            d.target = G;
            for (int v = 0; v < G.vertex_count(); ++v)
                d.assignment.push_back((*per[v])[idx[v]]);
            run_case(std::move(d));
            int v = 0;
            for (; v < G.vertex_count(); ++v) {
                if (++idx[v] < per[v]->size()) break;
                idx[v] = 0;
            }
            if (v == G.vertex_count()) break;
            if (G.vertex_count() == 0) break;
        }
    }

    if (opts.random_samples > 0 && !targets.empty()) {
        std::mt19937 rng(opts.seed);
        for (int s = 0; s < opts.random_samples; ++s) {
            const auto& G = targets[rng() % targets.size()];
            SubstitutionData d;
            d.target = G;
            bool ok = true;
            for (int v = 0; v < G.vertex_count() && ok; ++v) {
                const auto& pool = pool_for(G.vertex_profile(v));
                if (pool.empty())
                    ok = false;
                else
                    d.assignment.push_back(pool[rng() % pool.size()]);
            }
            if (ok && G.vertex_count() > 0) run_case(std::move(d));
        }
    }

    return rep;
}

} // namespace propcalc
