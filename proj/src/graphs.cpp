#include "graphs.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

namespace propcalc {

namespace {

void append_int(std::string& s, long long x) {
    char buf[24];
    std::snprintf(buf, sizeof buf, "%lld", x);
    s += buf;
}

// Length-prefixed emission keeps arbitrary color/label names unambiguous.
void append_atom(std::string& s, const std::string& t) {
    append_int(s, static_cast<long long>(t.size()));
    s += ':';
    s += t;
}

struct DisjointSets {
    std::vector<int> parent;
    explicit DisjointSets(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

// Directed cycle detection on the vertex graph induced by internal edges.
bool has_directed_cycle(const ColoredGraph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> succ(n);
    for (const auto& e : g.edges)
        if (e.source.attached() && e.target.attached())
            succ[e.source.vertex].push_back(e.target.vertex);
    std::vector<int> state(n, 0); // 0 unvisited, 1 on stack, 2 done
    std::vector<std::pair<int, size_t>> stack;
    for (int s = 0; s < n; ++s) {
        if (state[s] != 0) continue;
        stack.push_back({s, 0});
        state[s] = 1;
        while (!stack.empty()) {
            auto& [v, idx] = stack.back();
            if (idx < succ[v].size()) {
                int w = succ[v][idx++];
                if (state[w] == 1) return true;
                if (state[w] == 0) {
                    state[w] = 1;
                    stack.push_back({w, 0});
                }
            } else {
                state[v] = 2;
                stack.pop_back();
            }
        }
    }
    return false;
}

// Components of the incidence structure: nodes are vertices and edges,
// an edge node is glued to the vertices it attaches to.
int component_count(const ColoredGraph& g) {
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    DisjointSets ds(nv + ne);
    for (int e = 0; e < ne; ++e) {
        if (g.edges[e].source.attached()) ds.unite(nv + e, g.edges[e].source.vertex);
        if (g.edges[e].target.attached()) ds.unite(nv + e, g.edges[e].target.vertex);
    }
    std::set<int> roots;
    for (int i = 0; i < nv + ne; ++i) roots.insert(ds.find(i));
    return static_cast<int>(roots.size());
}

int dangling_end_count(const ColoredGraph& g) {
    int k = 0;
    for (const auto& e : g.edges) {
        if (!e.source.attached()) ++k;
        if (!e.target.attached()) ++k;
    }
    return k;
}

} // namespace

std::string Biprofile::key() const {
    std::string s;
    for (size_t i = 0; i < inputs.size(); ++i) {
        if (i) s += ',';
        s += inputs[i];
    }
    s += '|';
    for (size_t i = 0; i < outputs.size(); ++i) {
        if (i) s += ',';
        s += outputs[i];
    }
    return s;
}

const char* scheme_name(Scheme s) {
    switch (s) {
    case Scheme::Prop: return "prop";
    case Scheme::Properad: return "properad";
    case Scheme::Dioperad: return "dioperad";
    }
    return "?";
}

std::optional<Scheme> scheme_from_name(const std::string& name) {
    if (name == "prop") return Scheme::Prop;
    if (name == "properad") return Scheme::Properad;
    if (name == "dioperad") return Scheme::Dioperad;
    return std::nullopt;
}

Biprofile ColoredGraph::biprofile() const {
    Biprofile bp;
    bp.inputs.reserve(graph_inputs.size());
    bp.outputs.reserve(graph_outputs.size());
    for (int e : graph_inputs) bp.inputs.push_back(edges[e].color);
    for (int e : graph_outputs) bp.outputs.push_back(edges[e].color);
    return bp;
}

Biprofile ColoredGraph::vertex_profile(int v) const {
    Biprofile bp;
    for (int e : vertices[v].inputs) bp.inputs.push_back(edges[e].color);
    for (int e : vertices[v].outputs) bp.outputs.push_back(edges[e].color);
    return bp;
}

int ColoredGraph::internal_edge_count() const {
    int k = 0;
    for (const auto& e : edges)
        if (e.source.attached() && e.target.attached()) ++k;
    return k;
}

std::string ValidationReport::summary() const {
    std::string s;
    for (const auto& i : issues) {
        s += i.code;
        s += ": ";
        s += i.detail;
        s += '\n';
    }
    return s;
}

ValidationReport validate(const ColoredGraph& g) {
    ValidationReport rep;
    auto issue = [&](const std::string& code, const std::string& detail) {
        rep.issues.push_back({code, detail});
    };
    const int nv = g.vertex_count();
    const int ne = g.edge_count();

    std::set<Color> ambient(g.colors.begin(), g.colors.end());
    if (ambient.size() != g.colors.size()) issue("colors", "ambient color set has duplicates");

    for (int e = 0; e < ne; ++e) {
        if (!ambient.count(g.edges[e].color))
            issue("colors", "edge " + std::to_string(e) + " colored outside the ambient set");
    }

    auto port_ok = [&](const PortRef& p, bool out_side) {
        if (!p.attached()) return true;
        if (p.vertex < 0 || p.vertex >= nv) return false;
        const auto& v = g.vertices[p.vertex];
        int arity = out_side ? v.out_arity() : v.in_arity();
        return p.port >= 0 && p.port < arity;
    };

    // Cross-consistency of the port/edge incidence.
    for (int e = 0; e < ne; ++e) {
        const auto& ed = g.edges[e];
        if (!port_ok(ed.source, true)) {
            issue("incidence", "edge " + std::to_string(e) + " has source port out of range");
            continue;
        }
        if (!port_ok(ed.target, false)) {
            issue("incidence", "edge " + std::to_string(e) + " has target port out of range");
            continue;
        }
        if (ed.source.attached() &&
            g.vertices[ed.source.vertex].outputs[ed.source.port] != e)
            issue("incidence", "edge " + std::to_string(e) + " source port does not point back");
        if (ed.target.attached() &&
            g.vertices[ed.target.vertex].inputs[ed.target.port] != e)
            issue("incidence", "edge " + std::to_string(e) + " target port does not point back");
    }
    for (int v = 0; v < nv; ++v) {
        for (int k = 0; k < g.vertices[v].in_arity(); ++k) {
            int e = g.vertices[v].inputs[k];
            if (e < 0 || e >= ne) {
                issue("incidence", "vertex " + std::to_string(v) + " input port holds no edge");
                continue;
            }
            if (!(g.edges[e].target == PortRef{v, k}))
                issue("incidence", "vertex " + std::to_string(v) + " input port " +
                                       std::to_string(k) + " disagrees with its edge");
        }
        for (int k = 0; k < g.vertices[v].out_arity(); ++k) {
            int e = g.vertices[v].outputs[k];
            if (e < 0 || e >= ne) {
                issue("incidence", "vertex " + std::to_string(v) + " output port holds no edge");
                continue;
            }
            if (!(g.edges[e].source == PortRef{v, k}))
                issue("incidence", "vertex " + std::to_string(v) + " output port " +
                                       std::to_string(k) + " disagrees with its edge");
        }
    }

    // ord_i must enumerate exactly the source-dangling edges, once each;
    // ord_o the target-dangling ones.
    {
        std::vector<int> seen(ne, 0);
        for (int e : g.graph_inputs) {
            if (e < 0 || e >= ne) {
                issue("ordering", "graph_inputs references a missing edge");
                continue;
            }
            seen[e]++;
            if (g.edges[e].source.attached())
                issue("ordering", "graph_inputs lists edge " + std::to_string(e) +
                                      " whose source is attached");
        }
        for (int e = 0; e < ne; ++e) {
            if (!g.edges[e].source.attached() && seen[e] != 1)
                issue("ordering", "source-dangling edge " + std::to_string(e) +
                                      " appears " + std::to_string(seen[e]) +
                                      " times in graph_inputs");
        }
    }
    {
        std::vector<int> seen(ne, 0);
        for (int e : g.graph_outputs) {
            if (e < 0 || e >= ne) {
                issue("ordering", "graph_outputs references a missing edge");
                continue;
            }
            seen[e]++;
            if (g.edges[e].target.attached())
                issue("ordering", "graph_outputs lists edge " + std::to_string(e) +
                                      " whose target is attached");
        }
        for (int e = 0; e < ne; ++e) {
            if (!g.edges[e].target.attached() && seen[e] != 1)
                issue("ordering", "target-dangling edge " + std::to_string(e) +
                                      " appears " + std::to_string(seen[e]) +
                                      " times in graph_outputs");
        }
    }

    if (has_directed_cycle(g)) issue("wheel", "graph has a directed cycle through vertices");

    return rep;
}

void require_valid(const ColoredGraph& g, const std::string& context) {
    ValidationReport rep = validate(g);
    if (!rep.ok())
        throw ValidationError(context + ": invalid graph\n" + rep.summary());
}

ColoredGraph make_corolla(const Biprofile& bp) {
    std::vector<Color> ambient;
    for (const auto& c : bp.inputs)
        if (std::find(ambient.begin(), ambient.end(), c) == ambient.end()) ambient.push_back(c);
    for (const auto& c : bp.outputs)
        if (std::find(ambient.begin(), ambient.end(), c) == ambient.end()) ambient.push_back(c);
    return make_corolla(ambient, bp);
}

ColoredGraph make_corolla(const std::vector<Color>& ambient, const Biprofile& bp) {
    ColoredGraph g;
    g.colors = ambient;
    const int n = bp.in_arity();
    const int m = bp.out_arity();
    GraphVertex v;
    for (int i = 0; i < n; ++i) {
        g.edges.push_back({bp.inputs[i], PortRef{}, PortRef{0, i}});
        v.inputs.push_back(i);
        g.graph_inputs.push_back(i);
    }
    for (int j = 0; j < m; ++j) {
        g.edges.push_back({bp.outputs[j], PortRef{0, j}, PortRef{}});
        v.outputs.push_back(n + j);
        g.graph_outputs.push_back(n + j);
    }
    g.vertices.push_back(std::move(v));
    return g;
}

ColoredGraph make_edge(const Color& c) { return make_edge({c}, c); }

ColoredGraph make_edge(const std::vector<Color>& ambient, const Color& c) {
    ColoredGraph g;
    g.colors = ambient;
    g.edges.push_back({c, PortRef{}, PortRef{}});
    g.graph_inputs.push_back(0);
    g.graph_outputs.push_back(0);
    return g;
}

ColoredGraph make_empty(const std::vector<Color>& ambient) {
    ColoredGraph g;
    g.colors = ambient;
    return g;
}

bool is_connected(const ColoredGraph& g) { return component_count(g) == 1; }

bool is_simply_connected(const ColoredGraph& g) {
    return is_connected(g) && betti(g).b1 == 0;
}

Betti betti(const ColoredGraph& g) {
    if (g.vertex_count() == 0 && g.edge_count() == 0) return {0, 0};
    const int c = component_count(g);
    const int cells0 = g.vertex_count() + dangling_end_count(g);
    const int cells1 = g.edge_count();
    Betti b;
    b.b0 = static_cast<unsigned>(std::max(c - 1, 0));
    b.b1 = static_cast<unsigned>(cells1 - cells0 + c);
    return b;
}

// ---------------------------------------------------------------------------
// Canonical codes
// ---------------------------------------------------------------------------

namespace {

struct EncodeScratch {
    std::vector<int> ord_i_pos; // edge -> position in graph_inputs, or -1
    std::vector<int> ord_o_pos;
    std::vector<int> pos;       // old vertex -> new index
};

void fill_positions(const ColoredGraph& g, EncodeScratch& sc) {
    sc.ord_i_pos.assign(g.edge_count(), -1);
    sc.ord_o_pos.assign(g.edge_count(), -1);
    for (size_t s = 0; s < g.graph_inputs.size(); ++s)
        sc.ord_i_pos[g.graph_inputs[s]] = static_cast<int>(s);
    for (size_t t = 0; t < g.graph_outputs.size(); ++t)
        sc.ord_o_pos[g.graph_outputs[t]] = static_cast<int>(t);
}

// Deterministic encoding of g under a vertex numbering. Edges are ordered by
// their source descriptor (graph-input position, or renumbered port), which a
// strict isomorphism preserves; the encoding therefore determines the graph
// up to strict isomorphism.
std::string encode_with_order(const ColoredGraph& g,
                              const std::vector<std::string>* labels,
                              const std::vector<int>& order, EncodeScratch& sc,
                              std::vector<int>* edge_order_out) {
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    sc.pos.assign(nv, -1);
    for (int j = 0; j < nv; ++j) sc.pos[order[j]] = j;

    struct EdgeKey {
        int a, b, c, edge;
        bool operator<(const EdgeKey& o) const {
            return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
        }
    };
    std::vector<EdgeKey> keys;
    keys.reserve(ne);
    for (int e = 0; e < ne; ++e) {
        const auto& ed = g.edges[e];
        if (ed.source.attached())
            keys.push_back({1, sc.pos[ed.source.vertex], ed.source.port, e});
        else
            keys.push_back({0, sc.ord_i_pos[e], 0, e});
    }
    std::sort(keys.begin(), keys.end());

    std::string s;
    s.reserve(16 + nv * 8 + ne * 12);
    s += 'V';
    append_int(s, nv);
    s += ';';
    for (int j = 0; j < nv; ++j) {
        const auto& v = g.vertices[order[j]];
        append_int(s, v.in_arity());
        s += ',';
        append_int(s, v.out_arity());
        if (labels) {
            s += '~';
            append_atom(s, (*labels)[order[j]]);
        }
        s += ';';
    }
    s += 'E';
    append_int(s, ne);
    s += ';';
    for (const auto& k : keys) {
        const auto& ed = g.edges[k.edge];
        append_atom(s, ed.color);
        if (ed.source.attached()) {
            s += 'p';
            append_int(s, sc.pos[ed.source.vertex]);
            s += '.';
            append_int(s, ed.source.port);
        } else {
            s += 'i';
            append_int(s, sc.ord_i_pos[k.edge]);
        }
        s += '>';
        if (ed.target.attached()) {
            s += 'p';
            append_int(s, sc.pos[ed.target.vertex]);
            s += '.';
            append_int(s, ed.target.port);
        } else {
            s += 'o';
            append_int(s, sc.ord_o_pos[k.edge]);
        }
        s += ';';
    }
    if (edge_order_out) {
        edge_order_out->resize(ne);
        for (int i = 0; i < ne; ++i) (*edge_order_out)[i] = keys[i].edge;
    }
    return s;
}

struct CanonResult {
    std::string code;
    std::vector<int> vertex_order; // new index -> old vertex
    std::vector<int> edge_order;   // new index -> old edge
};

CanonResult canonicalize(const ColoredGraph& g, const std::vector<std::string>* labels,
                         int max_vertices) {
    const int nv = g.vertex_count();
    if (nv > max_vertices)
        throw BoundError("canonical form: graph has " + std::to_string(nv) +
                         " vertices, bound is " + std::to_string(max_vertices));
    EncodeScratch sc;
    fill_positions(g, sc);
    std::vector<int> order(nv);
    std::iota(order.begin(), order.end(), 0);
    CanonResult best;
    std::vector<int> edge_order;
    do {
        std::string code = encode_with_order(g, labels, order, sc, &edge_order);
        if (best.code.empty() || code < best.code) {
            best.code = std::move(code);
            best.vertex_order = order;
            best.edge_order = edge_order;
        }
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

} // namespace

CanonicalCode canonical_code(const ColoredGraph& g, int max_vertices) {
    return canonicalize(g, nullptr, max_vertices).code;
}

CanonicalCode canonical_code_decorated(const ColoredGraph& g,
                                       const std::vector<std::string>& vertex_labels,
                                       int max_vertices) {
    if (static_cast<int>(vertex_labels.size()) != g.vertex_count())
        throw ValidationError("decorated code: one label per vertex required");
    return canonicalize(g, &vertex_labels, max_vertices).code;
}

bool strictly_isomorphic(const ColoredGraph& g1, const ColoredGraph& g2) {
    int bound = std::max({kDefaultIsoVertexBound, g1.vertex_count(), g2.vertex_count()});
    return canonical_code(g1, bound) == canonical_code(g2, bound);
}

// ---------------------------------------------------------------------------
// Isomorphism search
// ---------------------------------------------------------------------------

namespace {

std::optional<GraphIso> find_strict_iso(const ColoredGraph& g1, const ColoredGraph& g2,
                                        int max_vertices) {
    CanonResult c1 = canonicalize(g1, nullptr, max_vertices);
    CanonResult c2 = canonicalize(g2, nullptr, max_vertices);
    if (c1.code != c2.code) return std::nullopt;
    GraphIso iso;
    iso.flavor = IsoFlavor::Strict;
    iso.vertex_map.assign(g1.vertex_count(), -1);
    iso.edge_map.assign(g1.edge_count(), -1);
    for (int j = 0; j < g1.vertex_count(); ++j)
        iso.vertex_map[c1.vertex_order[j]] = c2.vertex_order[j];
    for (size_t j = 0; j < c1.edge_order.size(); ++j)
        iso.edge_map[c1.edge_order[j]] = c2.edge_order[j];
    return iso;
}

struct WeakSignature {
    int in_arity, out_arity;
    std::multiset<Color> in_colors, out_colors;
    std::multiset<Color> in_leg_colors, out_leg_colors;
    bool operator==(const WeakSignature&) const = default;
};

WeakSignature weak_signature(const ColoredGraph& g, int v) {
    WeakSignature s;
    s.in_arity = g.vertices[v].in_arity();
    s.out_arity = g.vertices[v].out_arity();
    for (int e : g.vertices[v].inputs) {
        s.in_colors.insert(g.edges[e].color);
        if (!g.edges[e].source.attached()) s.in_leg_colors.insert(g.edges[e].color);
    }
    for (int e : g.vertices[v].outputs) {
        s.out_colors.insert(g.edges[e].color);
        if (!g.edges[e].target.attached()) s.out_leg_colors.insert(g.edges[e].color);
    }
    return s;
}

// Multiset of colors of internal edges u -> v.
std::multiset<Color> parallel_colors(const ColoredGraph& g, int u, int v) {
    std::multiset<Color> m;
    for (const auto& e : g.edges)
        if (e.source.attached() && e.target.attached() && e.source.vertex == u &&
            e.target.vertex == v)
            m.insert(e.color);
    return m;
}

std::optional<GraphIso> find_weak_iso(const ColoredGraph& g1, const ColoredGraph& g2,
                                      int max_vertices) {
    const int nv = g1.vertex_count();
    if (nv > max_vertices || g2.vertex_count() > max_vertices)
        throw BoundError("iso search: vertex bound exceeded");
    if (nv != g2.vertex_count() || g1.edge_count() != g2.edge_count()) return std::nullopt;

    // Isolated edges must match per color, globally.
    std::multiset<Color> iso1, iso2;
    for (const auto& e : g1.edges)
        if (!e.source.attached() && !e.target.attached()) iso1.insert(e.color);
    for (const auto& e : g2.edges)
        if (!e.source.attached() && !e.target.attached()) iso2.insert(e.color);
    if (iso1 != iso2) return std::nullopt;

    std::vector<WeakSignature> sig1(nv), sig2(nv);
    for (int v = 0; v < nv; ++v) {
        sig1[v] = weak_signature(g1, v);
        sig2[v] = weak_signature(g2, v);
    }

    std::vector<int> vmap(nv, -1), used(nv, 0);
    auto compatible = [&](int v, int w) {
        if (!(sig1[v] == sig2[w])) return false;
        for (int u = 0; u < v; ++u) {
            if (vmap[u] < 0) continue;
            if (parallel_colors(g1, u, v) != parallel_colors(g2, vmap[u], w)) return false;
            if (parallel_colors(g1, v, u) != parallel_colors(g2, w, vmap[u])) return false;
        }
        return true;
    };

    // Backtracking over the vertex bijection.
    std::function<bool(int)> place = [&](int v) -> bool {
        if (v == nv) return true;
        for (int w = 0; w < nv; ++w) {
            if (used[w]) continue;
            if (compatible(v, w)) {
                vmap[v] = w;
                used[w] = 1;
                if (place(v + 1)) return true;
                used[w] = 0;
                vmap[v] = -1;
            }
        }
        return false;
    };
    if (!place(0)) return std::nullopt;

    // Build the edge bijection along parallel classes.
    GraphIso iso;
    iso.flavor = IsoFlavor::Weak;
    iso.vertex_map = vmap;
    iso.edge_map.assign(g1.edge_count(), -1);
    std::map<std::tuple<int, int, int, Color>, std::vector<int>> classes2;
    auto edge_class = [&](const ColoredGraph& g, int e, bool image) {
        const auto& ed = g.edges[e];
        int su = ed.source.attached()
                     ? (image ? ed.source.vertex : vmap[ed.source.vertex])
                     : -1;
        int tv = ed.target.attached()
                     ? (image ? ed.target.vertex : vmap[ed.target.vertex])
                     : -1;
        int kind = (su >= 0 ? 2 : 0) + (tv >= 0 ? 1 : 0);
        return std::make_tuple(kind, su, tv, ed.color);
    };
    for (int e = 0; e < g2.edge_count(); ++e)
        classes2[edge_class(g2, e, true)].push_back(e);
    std::map<std::tuple<int, int, int, Color>, size_t> cursor;
    for (int e = 0; e < g1.edge_count(); ++e) {
        auto key = edge_class(g1, e, false);
        auto it = classes2.find(key);
        if (it == classes2.end() || cursor[key] >= it->second.size()) return std::nullopt;
        iso.edge_map[e] = it->second[cursor[key]++];
    }
    return iso;
}

} // namespace

std::optional<GraphIso> find_iso(const ColoredGraph& g1, const ColoredGraph& g2,
                                 IsoFlavor flavor, int max_vertices) {
    if (flavor == IsoFlavor::Strict) {
        if (g1.vertex_count() > max_vertices || g2.vertex_count() > max_vertices)
            throw BoundError("iso search: vertex bound exceeded");
        return find_strict_iso(g1, g2, max_vertices);
    }
    return find_weak_iso(g1, g2, max_vertices);
}

bool check_iso(const ColoredGraph& g1, const ColoredGraph& g2, const GraphIso& iso) {
    const int nv = g1.vertex_count();
    const int ne = g1.edge_count();
    if (nv != g2.vertex_count() || ne != g2.edge_count()) return false;
    if (static_cast<int>(iso.vertex_map.size()) != nv ||
        static_cast<int>(iso.edge_map.size()) != ne)
        return false;
    std::vector<int> vseen(nv, 0), eseen(ne, 0);
    for (int v : iso.vertex_map) {
        if (v < 0 || v >= nv || vseen[v]++) return false;
    }
    for (int e : iso.edge_map) {
        if (e < 0 || e >= ne || eseen[e]++) return false;
    }
    auto map_port = [&](const PortRef& p) {
        return p.attached() ? PortRef{iso.vertex_map[p.vertex], p.port} : PortRef{};
    };
    for (int e = 0; e < ne; ++e) {
        const auto& a = g1.edges[e];
        const auto& b = g2.edges[iso.edge_map[e]];
        if (a.color != b.color) return false;
        if (a.source.attached() != b.source.attached()) return false;
        if (a.target.attached() != b.target.attached()) return false;
        if (iso.flavor == IsoFlavor::Strict) {
            if (a.source.attached() && !(map_port(a.source) == b.source)) return false;
            if (a.target.attached() && !(map_port(a.target) == b.target)) return false;
        } else {
            if (a.source.attached() && iso.vertex_map[a.source.vertex] != b.source.vertex)
                return false;
            if (a.target.attached() && iso.vertex_map[a.target.vertex] != b.target.vertex)
                return false;
        }
    }
    if (iso.flavor == IsoFlavor::Strict) {
        if (g1.graph_inputs.size() != g2.graph_inputs.size()) return false;
        if (g1.graph_outputs.size() != g2.graph_outputs.size()) return false;
        for (size_t s = 0; s < g1.graph_inputs.size(); ++s)
            if (iso.edge_map[g1.graph_inputs[s]] != g2.graph_inputs[s]) return false;
        for (size_t t = 0; t < g1.graph_outputs.size(); ++t)
            if (iso.edge_map[g1.graph_outputs[t]] != g2.graph_outputs[t]) return false;
        for (int v = 0; v < nv; ++v) {
            const auto& a = g1.vertices[v];
            const auto& b = g2.vertices[iso.vertex_map[v]];
            if (a.in_arity() != b.in_arity() || a.out_arity() != b.out_arity()) return false;
            for (int k = 0; k < a.in_arity(); ++k)
                if (iso.edge_map[a.inputs[k]] != b.inputs[k]) return false;
            for (int k = 0; k < a.out_arity(); ++k)
                if (iso.edge_map[a.outputs[k]] != b.outputs[k]) return false;
        }
    }
    return true;
}

ColoredGraph relabel(const ColoredGraph& g, const std::vector<int>& vertex_order,
                     const std::vector<int>& edge_order) {
    // vertex_order[new] = old; edge_order[new] = old
    ColoredGraph r;
    r.colors = g.colors;
    const int nv = g.vertex_count();
    const int ne = g.edge_count();
    std::vector<int> vpos(nv), epos(ne);
    for (int j = 0; j < nv; ++j) vpos[vertex_order[j]] = j;
    for (int j = 0; j < ne; ++j) epos[edge_order[j]] = j;
    r.vertices.resize(nv);
    for (int j = 0; j < nv; ++j) {
        const auto& v = g.vertices[vertex_order[j]];
        for (int e : v.inputs) r.vertices[j].inputs.push_back(epos[e]);
        for (int e : v.outputs) r.vertices[j].outputs.push_back(epos[e]);
    }
    r.edges.resize(ne);
    for (int j = 0; j < ne; ++j) {
        const auto& e = g.edges[edge_order[j]];
        GraphEdge ne2;
        ne2.color = e.color;
        ne2.source = e.source.attached() ? PortRef{vpos[e.source.vertex], e.source.port}
                                         : PortRef{};
        ne2.target = e.target.attached() ? PortRef{vpos[e.target.vertex], e.target.port}
                                         : PortRef{};
        r.edges[j] = ne2;
    }
    for (int e : g.graph_inputs) r.graph_inputs.push_back(epos[e]);
    for (int e : g.graph_outputs) r.graph_outputs.push_back(epos[e]);
    return r;
}

// ---------------------------------------------------------------------------
// Enumeration
// ---------------------------------------------------------------------------

namespace {

bool in_scheme(Scheme s, const ColoredGraph& g) {
    switch (s) {
    case Scheme::Prop: return true;
    case Scheme::Properad: return is_connected(g);
    case Scheme::Dioperad: return is_simply_connected(g);
    }
    return false;
}

// All non-increasing sequences of length v of arity pairs (n_i, m_i).
void arity_sequences(int v, int max_in, int max_out,
                     std::vector<std::vector<std::pair<int, int>>>& out) {
    std::vector<std::pair<int, int>> cur;
    std::vector<std::pair<int, int>> menu;
    for (int n = 0; n <= max_in; ++n)
        for (int m = 0; m <= max_out; ++m) menu.push_back({n, m});
    std::sort(menu.begin(), menu.end());
    // choose multiset of size v from menu, emitted non-increasing
    std::function<void(int, int)> rec = [&](int idx, int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        if (idx < 0) return;
        rec(idx - 1, left);
        cur.push_back(menu[idx]);
        rec(idx, left - 1);
        cur.pop_back();
    };
    rec(static_cast<int>(menu.size()) - 1, v);
}

void subsets_of_size(int n, int k, std::vector<std::vector<int>>& out) {
    out.clear();
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == k) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            if (n - i < k - static_cast<int>(cur.size())) break;
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

} // namespace

std::vector<ColoredGraph> enumerate_graphs(const EnumerationParams& params) {
    const Biprofile& bp = params.biprofile;
    const int n = bp.in_arity();
    const int m = bp.out_arity();
    const int ncolors = static_cast<int>(params.colors.size());
    if (ncolors == 0 && (n > 0 || m > 0))
        return {};

    std::map<CanonicalCode, ColoredGraph> found;
    const int code_bound = std::max(kDefaultIsoVertexBound, params.max_vertices);

    for (int nv = 0; nv <= params.max_vertices; ++nv) {
        std::vector<std::vector<std::pair<int, int>>> arities;
        arity_sequences(nv, params.max_vertex_in, params.max_vertex_out, arities);
        for (const auto& ar : arities) {
            // flatten ports
            struct Port {
                int vertex, port;
            };
            std::vector<Port> in_ports, out_ports;
            for (int v = 0; v < nv; ++v) {
                for (int k = 0; k < ar[v].first; ++k) in_ports.push_back({v, k});
                for (int k = 0; k < ar[v].second; ++k) out_ports.push_back({v, k});
            }
            const int ni = static_cast<int>(in_ports.size());
            const int no = static_cast<int>(out_ports.size());
            for (int kiso = 0; kiso <= std::min(n, m); ++kiso) {
                const int u_in = n - kiso;   // in-ports left dangling
                const int u_out = m - kiso;  // out-ports left dangling
                if (u_in > ni || u_out > no) continue;
                const int internal = ni - u_in;
                if (internal != no - u_out || internal < 0) continue;

                std::vector<std::vector<int>> in_subsets, out_subsets;
                subsets_of_size(ni, u_in, in_subsets);
                subsets_of_size(no, u_out, out_subsets);
                for (const auto& sin : in_subsets) {
                    std::vector<char> in_dangles(ni, 0);
                    for (int i : sin) in_dangles[i] = 1;
                    std::vector<int> matched_in;
                    for (int i = 0; i < ni; ++i)
                        if (!in_dangles[i]) matched_in.push_back(i);
                    for (const auto& sout : out_subsets) {
                        std::vector<char> out_dangles(no, 0);
                        for (int i : sout) out_dangles[i] = 1;
                        std::vector<int> matched_out;
                        for (int i = 0; i < no; ++i)
                            if (!out_dangles[i]) matched_out.push_back(i);

                        // bijections matched_out -> matched_in
                        std::vector<int> perm(internal);
                        std::iota(perm.begin(), perm.end(), 0);
                        do {
                            // build skeleton: vertex succ for cycle check
                            bool cyc;
                            {
                                ColoredGraph probe;
                                probe.vertices.resize(nv);
                                for (int v = 0; v < nv; ++v) {
                                    probe.vertices[v].inputs.assign(ar[v].first, -1);
                                    probe.vertices[v].outputs.assign(ar[v].second, -1);
                                }
                                probe.edges.clear();
                                for (int t = 0; t < internal; ++t) {
                                    auto sp = out_ports[matched_out[t]];
                                    auto tp = in_ports[matched_in[perm[t]]];
                                    GraphEdge e;
                                    e.color = ncolors ? params.colors[0] : Color{};
                                    e.source = {sp.vertex, sp.port};
                                    e.target = {tp.vertex, tp.port};
                                    probe.edges.push_back(e);
                                }
                                cyc = has_directed_cycle(probe);
                            }
                            if (cyc) continue;

                            // assign ord positions: bijections of input positions
                            // {0..n-1} onto [u_in in-legs, kiso isolated] and output
                            // positions onto [u_out out-legs, kiso isolated].
                            // Slot layout for inputs: 0..u_in-1 legs, u_in..n-1 isolated.
                            std::vector<int> iperm(n);
                            std::iota(iperm.begin(), iperm.end(), 0);
                            do {
                                // iperm[pos] = input slot at ord_i position pos
                                std::vector<int> operm(m);
                                std::iota(operm.begin(), operm.end(), 0);
                                do {
                                    // isolated edge consistency: isolated slot j
                                    // (0..kiso-1) gets input color at its ord_i
                                    // position and output color at its ord_o
                                    // position; they must agree.
                                    std::vector<int> iso_in_pos(kiso, -1), iso_out_pos(kiso, -1);
                                    for (int pos = 0; pos < n; ++pos)
                                        if (iperm[pos] >= u_in) iso_in_pos[iperm[pos] - u_in] = pos;
                                    for (int pos = 0; pos < m; ++pos)
                                        if (operm[pos] >= u_out) iso_out_pos[operm[pos] - u_out] = pos;
                                    bool ok = true;
                                    for (int j = 0; j < kiso && ok; ++j)
                                        if (bp.inputs[iso_in_pos[j]] != bp.outputs[iso_out_pos[j]])
                                            ok = false;
                                    if (!ok) continue;

                                    // internal colorings
                                    std::vector<int> coloring(internal, 0);
                                    while (true) {
                                        ColoredGraph g;
                                        g.colors = params.colors;
                                        g.vertices.resize(nv);
                                        for (int v = 0; v < nv; ++v) {
                                            g.vertices[v].inputs.assign(ar[v].first, -1);
                                            g.vertices[v].outputs.assign(ar[v].second, -1);
                                        }
                                        // internal edges
                                        for (int t = 0; t < internal; ++t) {
                                            auto sp = out_ports[matched_out[t]];
                                            auto tp = in_ports[matched_in[perm[t]]];
                                            GraphEdge e;
                                            e.color = params.colors[coloring[t]];
                                            e.source = {sp.vertex, sp.port};
                                            e.target = {tp.vertex, tp.port};
                                            int id = static_cast<int>(g.edges.size());
                                            g.edges.push_back(e);
                                            g.vertices[sp.vertex].outputs[sp.port] = id;
                                            g.vertices[tp.vertex].inputs[tp.port] = id;
                                        }
                                        // in-leg edges (slot order)
                                        std::vector<int> in_slot_edge(u_in + kiso, -1);
                                        std::vector<int> out_slot_edge(u_out + kiso, -1);
                                        std::vector<int> slot_pos_in(n), slot_pos_out(m);
                                        for (int pos = 0; pos < n; ++pos) slot_pos_in[iperm[pos]] = pos;
                                        for (int pos = 0; pos < m; ++pos) slot_pos_out[operm[pos]] = pos;
                                        for (int sl = 0; sl < u_in; ++sl) {
                                            auto tp = in_ports[sin[sl]];
                                            GraphEdge e;
                                            e.color = bp.inputs[slot_pos_in[sl]];
                                            e.target = {tp.vertex, tp.port};
                                            int id = static_cast<int>(g.edges.size());
                                            g.edges.push_back(e);
                                            g.vertices[tp.vertex].inputs[tp.port] = id;
                                            in_slot_edge[sl] = id;
                                        }
                                        for (int sl = 0; sl < u_out; ++sl) {
                                            auto sp = out_ports[sout[sl]];
                                            GraphEdge e;
                                            e.color = bp.outputs[slot_pos_out[sl]];
                                            e.source = {sp.vertex, sp.port};
                                            int id = static_cast<int>(g.edges.size());
                                            g.edges.push_back(e);
                                            g.vertices[sp.vertex].outputs[sp.port] = id;
                                            out_slot_edge[sl] = id;
                                        }
                                        for (int j = 0; j < kiso; ++j) {
                                            GraphEdge e;
                                            e.color = bp.inputs[iso_in_pos[j]];
                                            int id = static_cast<int>(g.edges.size());
                                            g.edges.push_back(e);
                                            in_slot_edge[u_in + j] = id;
                                            out_slot_edge[u_out + j] = id;
                                        }
                                        g.graph_inputs.resize(n);
                                        for (int pos = 0; pos < n; ++pos)
                                            g.graph_inputs[pos] = in_slot_edge[iperm[pos]];
                                        g.graph_outputs.resize(m);
                                        for (int pos = 0; pos < m; ++pos)
                                            g.graph_outputs[pos] = out_slot_edge[operm[pos]];

                                        if (in_scheme(params.scheme, g)) {
                                            CanonicalCode code = canonical_code(g, code_bound);
                                            found.emplace(std::move(code), std::move(g));
                                        }

                                        // next coloring
                                        int t = 0;
                                        for (; t < internal; ++t) {
                                            if (++coloring[t] < ncolors) break;
                                            coloring[t] = 0;
                                        }
                                        if (t == internal) break;
                                        if (internal == 0) break;
                                    }
                                } while (std::next_permutation(operm.begin(), operm.end()));
                            } while (std::next_permutation(iperm.begin(), iperm.end()));
                        } while (std::next_permutation(perm.begin(), perm.end()));
                    }
                }
            }
        }
    }

    std::vector<ColoredGraph> out;
    out.reserve(found.size());
    for (auto& [code, g] : found) out.push_back(std::move(g));
    return out;
}

} // namespace propcalc
