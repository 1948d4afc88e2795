#include "properad.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace propcalc {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    for (long long i = 0; i < e; ++i) {
        r *= b;
        if (r > (1LL << 40)) throw BoundError("endomorphism entry too large");
    }
    return r;
}

SimplexRef degenerate_vertex(int vertex_id, int level) {
    return SimplexRef{vertex_id, Monotone(level + 1, 0)};
}

} // namespace

// ---------------------------------------------------------------------------
// GrProp
// ---------------------------------------------------------------------------

GrProp::GrProp(Scheme scheme, std::vector<Color> colors, int arity_bound, int dim_bound,
               std::shared_ptr<const PropBackend> backend)
    : scheme_(scheme), colors_(std::move(colors)), arity_bound_(arity_bound),
      dim_bound_(dim_bound), backend_(std::move(backend)) {}

bool GrProp::within_bounds(const Biprofile& bp) const {
    return bp.total_arity() <= arity_bound_;
}

void GrProp::require_bounds(const Biprofile& bp) const {
    if (!within_bounds(bp))
        throw BoundError("biprofile (" + bp.key() + ") exceeds arity bound " +
                         std::to_string(arity_bound_));
}

SSetPtr GrProp::entry(const Biprofile& bp) const {
    require_bounds(bp);
    for (const auto& c : bp.inputs)
        if (std::find(colors_.begin(), colors_.end(), c) == colors_.end())
            throw ProfileError("entry: color " + c + " not in the color set");
    for (const auto& c : bp.outputs)
        if (std::find(colors_.begin(), colors_.end(), c) == colors_.end())
            throw ProfileError("entry: color " + c + " not in the color set");
    std::lock_guard<std::mutex> lk(mu_);
    auto it = entry_cache_.find(bp.key());
    if (it != entry_cache_.end()) return it->second;
    SSetPtr e = backend_->build_entry(bp);
    entry_cache_[bp.key()] = e;
    return e;
}

SimplexRef GrProp::unit(const Color& c) const {
    Biprofile bp{{c}, {c}};
    SSetPtr e = entry(bp);
    int v = backend_->unit_vertex(c);
    if (v < 0 || v >= e->count(0))
        throw ValidationError("unit vertex missing in entry (" + bp.key() + ")");
    return e->ref(0, v);
}

void GrProp::check_decoration(const Decoration& d) const {
    if (!scheme_member(scheme_, d.graph))
        throw SchemeError("gamma: graph is not a member of scheme " +
                          std::string(scheme_name(scheme_)));
    require_bounds(d.graph.biprofile());
    if (d.level < 0 || d.level > dim_bound_)
        throw BoundError("gamma: level " + std::to_string(d.level) +
                         " outside dimension bound");
    if (static_cast<int>(d.labels.size()) != d.graph.vertex_count())
        throw ProfileError("gamma: one label per vertex required");
    for (int v = 0; v < d.graph.vertex_count(); ++v) {
        Biprofile vp = d.graph.vertex_profile(v);
        SSetPtr e = entry(vp);
        const SimplexRef& r = d.labels[v];
        if (r.dim() != d.level)
            throw ProfileError("gamma: label level mismatch at vertex " +
                               std::to_string(v));
        if (r.nd_id < 0 || r.nd_dim() > e->dim() || r.nd_id >= e->count(r.nd_dim()))
            throw ProfileError("gamma: label is not a simplex of entry (" + vp.key() +
                               ")");
    }
}

SimplexRef GrProp::gamma(const Decoration& d) const {
    check_decoration(d);
    std::vector<std::string> keys;
    keys.reserve(d.labels.size());
    for (const auto& r : d.labels) keys.push_back(r.key());
    std::string memo_key =
        canonical_code_decorated(d.graph, keys) + "@" + std::to_string(d.level);
    {
        std::lock_guard<std::mutex> lk(mu_);
        auto it = gamma_memo_.find(memo_key);
        if (it != gamma_memo_.end()) return it->second;
    }
    SimplexRef out = backend_->compose(d);
    if (out.dim() != d.level)
        throw ValidationError("gamma: composer returned a simplex of the wrong level");
    std::lock_guard<std::mutex> lk(mu_);
    gamma_memo_[memo_key] = out;
    return out;
}

SimplexRef GrProp::gamma_direct(const Decoration& d) const {
    check_decoration(d);
    return backend_->compose(d);
}

std::vector<Biprofile> GrProp::all_biprofiles() const {
    std::vector<Biprofile> out;
    for (int n = 0; n + 0 <= arity_bound_; ++n)
        for (int m = 0; n + m <= arity_bound_; ++m) {
            auto more = biprofiles_with_arity(n, m);
            out.insert(out.end(), more.begin(), more.end());
        }
    return out;
}

std::vector<Biprofile> GrProp::biprofiles_with_arity(int n, int m) const {
    std::vector<Biprofile> out;
    std::vector<Color> in(n), outc(m);
    std::function<void(int)> fill_out = [&](int j) {
        if (j == m) {
            out.push_back(Biprofile{in, outc});
            return;
        }
        for (const auto& c : colors_) {
            outc[j] = c;
            fill_out(j + 1);
        }
    };
    std::function<void(int)> fill_in = [&](int i) {
        if (i == n) {
            fill_out(0);
            return;
        }
        for (const auto& c : colors_) {
            in[i] = c;
            fill_in(i + 1);
        }
    };
    fill_in(0);
    return out;
}

// ---------------------------------------------------------------------------
// Backends
// ---------------------------------------------------------------------------

namespace {

class TerminalBackend : public PropBackend {
public:
    SSetPtr build_entry(const Biprofile&) const override { return sset_point(); }
    int unit_vertex(const Color&) const override { return 0; }
    SimplexRef compose(const Decoration& d) const override {
        return degenerate_vertex(0, d.level);
    }
    std::string kind() const override { return "terminal"; }
};

class EndomorphismBackend : public PropBackend {
public:
    EndomorphismBackend(int set_size, Color color) : s_(set_size), c_(std::move(color)) {}

    long long entry_size(int n, int m) const {
        return pow_ll(pow_ll(s_, m), pow_ll(s_, n));
    }

    SSetPtr build_entry(const Biprofile& bp) const override {
        long long sz = entry_size(bp.in_arity(), bp.out_arity());
        if (sz > 200000) throw BoundError("endomorphism entry too large");
        return sset_discrete(static_cast<int>(sz));
    }

    int unit_vertex(const Color&) const override {
        // the identity function S -> S
        long long idx = 0;
        for (int t = 0; t < s_; ++t) idx += t * pow_ll(s_, t);
        return static_cast<int>(idx);
    }

    SimplexRef compose(const Decoration& d) const override {
        const ColoredGraph& g = d.graph;
        Biprofile bp = g.biprofile();
        const int n = bp.in_arity();
        const int m = bp.out_arity();
        // topological order of vertices
        std::vector<int> indeg(g.vertex_count(), 0);
        for (const auto& e : g.edges)
            if (e.source.attached() && e.target.attached()) ++indeg[e.target.vertex];
        std::vector<int> order, queue;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (indeg[v] == 0) queue.push_back(v);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            order.push_back(v);
            for (int e : g.vertices[v].outputs) {
                const auto& ed = g.edges[e];
                if (ed.target.attached() && --indeg[ed.target.vertex] == 0)
                    queue.push_back(ed.target.vertex);
            }
        }

        const long long cases = pow_ll(s_, n);
        const long long b_out = pow_ll(s_, m);
        long long result = 0;
        std::vector<int> val(g.edge_count(), -1);
        for (long long t = 0; t < cases; ++t) {
            std::fill(val.begin(), val.end(), -1);
            long long tt = t;
            for (int i = 0; i < n; ++i) {
                val[g.graph_inputs[i]] = static_cast<int>(tt % s_);
                tt /= s_;
            }
            for (int v : order) {
                long long in_rank = 0;
                for (int k = g.vertices[v].in_arity() - 1; k >= 0; --k)
                    in_rank = in_rank * s_ + val[g.vertices[v].inputs[k]];
                const int mv = g.vertices[v].out_arity();
                long long bv = pow_ll(s_, mv);
                long long f_index = d.labels[v].nd_id;
                long long out_rank = (bv == 1) ? 0 : (f_index / pow_ll(bv, in_rank)) % bv;
                for (int k = 0; k < mv; ++k) {
                    val[g.vertices[v].outputs[k]] = static_cast<int>(out_rank % s_);
                    out_rank /= s_;
                }
            }
            long long out_total = 0;
            for (int j = m - 1; j >= 0; --j)
                out_total = out_total * s_ + val[g.graph_outputs[j]];
            result += out_total * pow_ll(b_out, t);
        }
        return degenerate_vertex(static_cast<int>(result), d.level);
    }

    std::string kind() const override { return "endomorphism"; }

private:
    int s_;
    Color c_;
};

class MonoidLikeBackend : public PropBackend {
public:
    MonoidLikeBackend(Color color, SSetPtr x) : c_(std::move(color)), x_(std::move(x)) {
        DisjointUnion u = sset_disjoint_union(x_, sset_point());
        xhat_ = u.sset;
        unit_id_ = u.inj2.images[0][0].nd_id;
    }

    SSetPtr build_entry(const Biprofile& bp) const override {
        if (bp.in_arity() == 1 && bp.out_arity() == 1) return xhat_;
        return sset_empty();
    }

    int unit_vertex(const Color&) const override { return unit_id_; }

    bool is_unit_label(const SimplexRef& r) const {
        return r.nd_dim() == 0 && r.nd_id == unit_id_;
    }

    SimplexRef compose(const Decoration& d) const override {
        // vertices form a single chain from the graph input to the output
        const ColoredGraph& g = d.graph;
        if (g.vertex_count() == 0) return degenerate_vertex(unit_id_, d.level);
        std::vector<int> chain;
        int e = g.graph_inputs.at(0);
        while (g.edges[e].target.attached()) {
            int v = g.edges[e].target.vertex;
            chain.push_back(v);
            e = g.vertices[v].outputs.at(0);
        }
        for (int i = static_cast<int>(chain.size()) - 1; i >= 0; --i)
            if (!is_unit_label(d.labels[chain[i]])) return d.labels[chain[i]];
        return degenerate_vertex(unit_id_, d.level);
    }

    std::string kind() const override { return "monoid-like"; }

    SSetPtr part_x() const { return x_; }

private:
    Color c_;
    SSetPtr x_;
    SSetPtr xhat_;
    int unit_id_;
};

class ChaoticGroupoidBackend : public PropBackend {
public:
    SSetPtr build_entry(const Biprofile& bp) const override {
        if (bp.in_arity() == 1 && bp.out_arity() == 1) return sset_point();
        return sset_empty();
    }
    int unit_vertex(const Color&) const override { return 0; }
    SimplexRef compose(const Decoration& d) const override {
        return degenerate_vertex(0, d.level);
    }
    std::string kind() const override { return "chaotic-groupoid"; }
};

class TableBackend : public PropBackend {
public:
    explicit TableBackend(PropTable t) : t_(std::move(t)) {}

    SSetPtr build_entry(const Biprofile& bp) const override {
        auto it = t_.entries.find(bp.key());
        if (it == t_.entries.end()) return sset_empty();
        return it->second;
    }

    int unit_vertex(const Color& c) const override {
        auto it = t_.units.find(c);
        if (it == t_.units.end())
            throw ValidationError("table prop: no unit for color " + c);
        return it->second;
    }

    SimplexRef compose(const Decoration& d) const override {
        std::string key = gamma_table_key(d);
        auto it = t_.gamma.find(key);
        if (it != t_.gamma.end()) return it->second;
        if (d.graph.vertex_count() == 1 && d.graph.internal_edge_count() == 0)
            return d.labels[0]; // corolla
        if (d.graph.vertex_count() == 0 && d.graph.edge_count() == 1)
            return degenerate_vertex(unit_vertex(d.graph.edges[0].color), d.level);
        throw BoundError("table prop: gamma table has no value for " + key);
    }

    std::string kind() const override { return "table"; }

private:
    PropTable t_;
};

} // namespace

GrPropPtr terminal_prop(Scheme scheme, std::vector<Color> colors, int arity_bound,
                        int dim_bound) {
    return std::make_shared<GrProp>(scheme, std::move(colors), arity_bound, dim_bound,
                                    std::make_shared<TerminalBackend>());
}

GrPropPtr endomorphism_prop(int set_size, Scheme scheme, int arity_bound,
                            const Color& color) {
    return std::make_shared<GrProp>(scheme, std::vector<Color>{color}, arity_bound, 3,
                                    std::make_shared<EndomorphismBackend>(set_size, color));
}

GrPropPtr monoid_like_prop(const SSetPtr& x, Scheme scheme, const Color& color,
                           int dim_bound) {
    if (scheme == Scheme::Prop)
        throw SchemeError("monoid-like fixtures require a connected scheme");
    return std::make_shared<GrProp>(scheme, std::vector<Color>{color}, 2, dim_bound,
                                    std::make_shared<MonoidLikeBackend>(color, x));
}

SSetMap monoid_like_entry_inclusion(const GrProp& p, const SSetPtr& x) {
    Color c = p.colors().at(0);
    SSetPtr e = p.entry({{c}, {c}});
    SSetMap f;
    f.dom = x;
    f.cod = e;
    f.images.resize(x->dim() + 1);
    for (int d = 0; d <= x->dim(); ++d)
        for (int i = 0; i < x->count(d); ++i)
            f.images[d].push_back(e->ref(d, i)); // X part occupies the leading ids
    return f;
}

GrPropPtr chaotic_groupoid_prop(std::vector<Color> objects, Scheme scheme) {
    if (scheme == Scheme::Prop)
        throw SchemeError("groupoid fixtures require a connected scheme");
    return std::make_shared<GrProp>(scheme, std::move(objects), 2, 1,
                                    std::make_shared<ChaoticGroupoidBackend>());
}

GrPropPtr table_prop(PropTable table) {
    Scheme scheme = table.scheme;
    std::vector<Color> colors = table.colors;
    int ab = table.arity_bound;
    int db = table.dim_bound;
    return std::make_shared<GrProp>(scheme, std::move(colors), ab, db,
                                    std::make_shared<TableBackend>(std::move(table)));
}

std::string gamma_table_key(const Decoration& d) {
    std::vector<std::string> keys;
    keys.reserve(d.labels.size());
    for (const auto& r : d.labels) keys.push_back(r.key());
    return canonical_code_decorated(d.graph, keys) + "@" + std::to_string(d.level);
}

// ---------------------------------------------------------------------------
// Morphisms
// ---------------------------------------------------------------------------

PropMorphism::PropMorphism(GrPropPtr src, GrPropPtr dst, std::map<Color, Color> color_map,
                           std::function<SSetMap(const Biprofile&)> entry_builder)
    : src_(std::move(src)), dst_(std::move(dst)), color_map_(std::move(color_map)),
      builder_(std::move(entry_builder)) {
    for (const auto& c : src_->colors()) {
        auto it = color_map_.find(c);
        if (it == color_map_.end())
            throw ValidationError("morphism: color " + c + " has no image");
        if (std::find(dst_->colors().begin(), dst_->colors().end(), it->second) ==
            dst_->colors().end())
            throw ValidationError("morphism: image color " + it->second +
                                  " missing in target");
    }
}

Color PropMorphism::map_color(const Color& c) const { return color_map_.at(c); }

Biprofile PropMorphism::map_biprofile(const Biprofile& bp) const {
    Biprofile out;
    for (const auto& c : bp.inputs) out.inputs.push_back(map_color(c));
    for (const auto& c : bp.outputs) out.outputs.push_back(map_color(c));
    return out;
}

const SSetMap& PropMorphism::entry_map(const Biprofile& bp) const {
    std::lock_guard<std::mutex> lk(cache_->mu);
    auto it = cache_->entries.find(bp.key());
    if (it != cache_->entries.end()) return it->second;
    SSetMap m = builder_(bp);
    return cache_->entries.emplace(bp.key(), std::move(m)).first->second;
}

PropMorphism identity_morphism(const GrPropPtr& p) {
    std::map<Color, Color> cmap;
    for (const auto& c : p->colors()) cmap[c] = c;
    GrPropPtr q = p;
    return PropMorphism(p, p, std::move(cmap),
                        [q](const Biprofile& bp) { return identity_map(q->entry(bp)); });
}

PropMorphism compose(const PropMorphism& f, const PropMorphism& g) {
    std::map<Color, Color> cmap;
    for (const auto& [c, gc] : g.color_map()) cmap[c] = f.map_color(gc);
    return PropMorphism(g.src(), f.dst(), std::move(cmap),
                        [f, g](const Biprofile& bp) {
                            const SSetMap& first = g.entry_map(bp);
                            const SSetMap& second = f.entry_map(g.map_biprofile(bp));
                            return compose(second, first);
                        });
}

ColoredGraph recolor(const ColoredGraph& g, const std::map<Color, Color>& cmap,
                     const std::vector<Color>& new_ambient) {
    ColoredGraph out = g;
    out.colors = new_ambient;
    for (auto& e : out.edges) e.color = cmap.at(e.color);
    return out;
}

// ---------------------------------------------------------------------------
// Axiom checking
// ---------------------------------------------------------------------------

namespace {

std::vector<Biprofile> bounded_biprofiles(const GrProp& p, int max_legs) {
    std::vector<Biprofile> out;
    for (int n = 0; n <= max_legs; ++n)
        for (int m = 0; m <= max_legs && n + m <= p.arity_bound(); ++m) {
            auto more = p.biprofiles_with_arity(n, m);
            out.insert(out.end(), more.begin(), more.end());
        }
    return out;
}

std::vector<ColoredGraph> scheme_graphs(const GrProp& p, const Biprofile& bp,
                                        int max_vertices) {
    EnumerationParams ep;
    ep.scheme = p.scheme();
    ep.colors = p.colors();
    ep.biprofile = bp;
    ep.max_vertices = max_vertices;
    ep.max_vertex_in = std::min(p.arity_bound(), 2);
    ep.max_vertex_out = std::min(p.arity_bound(), 2);
    std::vector<ColoredGraph> out = enumerate_graphs(ep);
    // entries exist only within the arity bound, so vertices must fit too
    std::erase_if(out, [&](const ColoredGraph& g) {
        for (int v = 0; v < g.vertex_count(); ++v)
            if (g.vertex_profile(v).total_arity() > p.arity_bound()) return true;
        return false;
    });
    return out;
}

// All decorations of g at the given level, entry-by-entry product.
bool for_each_decoration(const GrProp& p, const ColoredGraph& g, int level,
                         long long& budget,
                         const std::function<void(const std::vector<SimplexRef>&)>& fn) {
    std::vector<std::vector<SimplexRef>> menu(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        menu[v] = p.entry(g.vertex_profile(v))->simplices(level);
        if (menu[v].empty()) return true; // no decorations at all
    }
    std::vector<size_t> idx(g.vertex_count(), 0);
    std::vector<SimplexRef> labels(g.vertex_count());
    while (true) {
        if (--budget < 0) return false;
        for (int v = 0; v < g.vertex_count(); ++v) labels[v] = menu[v][idx[v]];
        fn(labels);
        int v = 0;
        for (; v < g.vertex_count(); ++v) {
            if (++idx[v] < menu[v].size()) break;
            idx[v] = 0;
        }
        if (v == g.vertex_count()) break;
    }
    return true;
}

} // namespace

AxiomReport check_axioms(const GrProp& p, const AxiomCheckOptions& opts) {
    AxiomReport rep;
    long long budget = opts.max_cases;
    auto violation = [&](const std::string& s) {
        if (rep.violations.size() < 25) rep.violations.push_back(s);
    };

    // unit axiom: gamma over a corolla is the identity
    for (const auto& bp : bounded_biprofiles(p, opts.max_legs)) {
        ColoredGraph corolla = make_corolla(p.colors(), bp);
        if (!scheme_member(p.scheme(), corolla)) continue;
        for (int level = 0; level <= std::min(opts.max_level, p.dim_bound()); ++level) {
            for_each_decoration(p, corolla, level, budget,
                                [&](const std::vector<SimplexRef>& labels) {
                                    ++rep.cases;
                                    SimplexRef out = p.gamma({corolla, labels, level});
                                    if (!(out == labels[0]))
                                        violation("unit axiom fails on corolla (" +
                                                  bp.key() + ")");
                                });
        }
    }

    // gamma over the edge graph picks out the unit
    for (const auto& c : p.colors()) {
        if (!scheme_member(p.scheme(), make_edge(p.colors(), c))) continue;
        for (int level = 0; level <= std::min(opts.max_level, p.dim_bound()); ++level) {
            ++rep.cases;
            SimplexRef r = p.gamma({make_edge(p.colors(), c), {}, level});
            SimplexRef want =
                p.entry({{c}, {c}})->apply(p.unit(c), Monotone(level + 1, 0));
            if (!(r == want)) violation("gamma over the edge graph is not the unit");
        }
    }

    // unit-decorated grafts act as the identity
    for (const auto& a : p.colors()) {
        for (const auto& b : p.colors()) {
            Biprofile hom{{a}, {b}};
            if (!p.within_bounds(hom)) continue;
            SSetPtr e = p.entry(hom);
            for (int level = 0; level <= std::min(opts.max_level, p.dim_bound());
                 ++level) {
                for (const auto& x : e->simplices(level)) {
                    SimplexRef ua = p.entry({{a}, {a}})
                                        ->apply(p.unit(a), Monotone(level + 1, 0));
                    SimplexRef ub = p.entry({{b}, {b}})
                                        ->apply(p.unit(b), Monotone(level + 1, 0));
                    ColoredGraph left = hom_chain(p.colors(), a, a, b);
                    ColoredGraph right = hom_chain(p.colors(), a, b, b);
                    ++rep.cases;
                    if (!(p.gamma({left, {ua, x}, level}) == x))
                        violation("left unit law fails at (" + hom.key() + ")");
                    ++rep.cases;
                    if (!(p.gamma({right, {x, ub}, level}) == x))
                        violation("right unit law fails at (" + hom.key() + ")");
                }
            }
        }
    }

    // associativity: gamma of a substitution equals composed gammas
    for (const auto& bp : bounded_biprofiles(p, opts.max_legs)) {
        for (const auto& g : scheme_graphs(p, bp, opts.max_graph_vertices)) {
            // pools per vertex
            std::vector<std::vector<ColoredGraph>> pools(g.vertex_count());
            bool skip = false;
            for (int v = 0; v < g.vertex_count(); ++v) {
                pools[v] = scheme_graphs(p, g.vertex_profile(v), opts.max_sub_vertices);
                if (pools[v].empty()) skip = true;
            }
            if (skip || g.vertex_count() == 0) continue;
            std::vector<size_t> idx(g.vertex_count(), 0);
            while (true) {
                SubstitutionData data;
                data.target = g;
                for (int v = 0; v < g.vertex_count(); ++v)
                    data.assignment.push_back(pools[v][idx[v]]);
                ColoredGraph k = substitute(data);
                std::vector<int> vbase(g.vertex_count() + 1, 0);
                for (int v = 0; v < g.vertex_count(); ++v)
                    vbase[v + 1] = vbase[v] + data.assignment[v].vertex_count();
                for (int level = 0; level <= std::min(opts.max_level, p.dim_bound());
                     ++level) {
                    for_each_decoration(
                        p, k, level, budget, [&](const std::vector<SimplexRef>& e) {
                            ++rep.cases;
                            SimplexRef lhs = p.gamma({k, e, level});
                            std::vector<SimplexRef> composed(g.vertex_count());
                            for (int v = 0; v < g.vertex_count(); ++v) {
                                std::vector<SimplexRef> part(
                                    e.begin() + vbase[v], e.begin() + vbase[v + 1]);
                                composed[v] = p.gamma(
                                    {data.assignment[v], part, level});
                            }
                            SimplexRef rhs = p.gamma({g, composed, level});
                            if (!(lhs == rhs))
                                violation("substitution associativity fails over (" +
                                          bp.key() + ")");
                        });
                }
                int v = 0;
                for (; v < g.vertex_count(); ++v) {
                    if (++idx[v] < pools[v].size()) break;
                    idx[v] = 0;
                }
                if (v == g.vertex_count()) break;
                if (budget < 0) break;
            }
            if (budget < 0) break;
        }
        if (budget < 0) break;
    }

    // equivariance under strict isomorphism: gamma depends only on the
    // strict class of the decorated graph
    for (const auto& bp : bounded_biprofiles(p, opts.max_legs)) {
        for (const auto& g : scheme_graphs(p, bp, opts.max_graph_vertices)) {
            if (g.vertex_count() < 2) continue;
            std::vector<int> vperm(g.vertex_count());
            std::iota(vperm.begin(), vperm.end(), 0);
            std::rotate(vperm.begin(), vperm.begin() + 1, vperm.end());
            std::vector<int> eperm(g.edge_count());
            std::iota(eperm.begin(), eperm.end(), 0);
            if (g.edge_count() > 1)
                std::rotate(eperm.begin(), eperm.begin() + 1, eperm.end());
            ColoredGraph r = relabel(g, vperm, eperm);
            if (!validate(r).ok()) continue;
            for_each_decoration(
                p, g, 0, budget, [&](const std::vector<SimplexRef>& labels) {
                    ++rep.cases;
                    std::vector<SimplexRef> transported(labels.size());
                    for (size_t j = 0; j < vperm.size(); ++j)
                        transported[j] = labels[vperm[j]];
                    SimplexRef lhs = p.gamma_direct({g, labels, 0});
                    SimplexRef rhs = p.gamma_direct({r, transported, 0});
                    if (!(lhs == rhs))
                        violation("gamma is not invariant under strict isomorphism (" +
                                  bp.key() + ")");
                });
            if (budget < 0) break;
        }
        if (budget < 0) break;
    }

    return rep;
}

AxiomReport check_morphism(const PropMorphism& f, const AxiomCheckOptions& opts) {
    AxiomReport rep;
    long long budget = opts.max_cases;
    auto violation = [&](const std::string& s) {
        if (rep.violations.size() < 25) rep.violations.push_back(s);
    };
    const GrProp& P = *f.src();
    const GrProp& Q = *f.dst();
    if (P.scheme() != Q.scheme())
        violation("morphism connects props over different schemes");

    for (const auto& c : P.colors()) {
        ++rep.cases;
        SimplexRef img = f.entry_map({{c}, {c}}).apply(P.unit(c));
        if (!(img == Q.unit(f.map_color(c))))
            violation("unit of color " + c + " is not preserved");
    }

    for (const auto& bp : bounded_biprofiles(P, opts.max_legs)) {
        for (const auto& g : scheme_graphs(P, bp, opts.max_graph_vertices)) {
            ColoredGraph gq = recolor(g, f.color_map(), Q.colors());
            for (int level = 0; level <= std::min({opts.max_level, P.dim_bound(),
                                                   Q.dim_bound()});
                 ++level) {
                for_each_decoration(
                    P, g, level, budget, [&](const std::vector<SimplexRef>& labels) {
                        ++rep.cases;
                        SimplexRef lhs =
                            f.entry_map(bp).apply(P.gamma({g, labels, level}));
                        std::vector<SimplexRef> mapped(labels.size());
                        for (int v = 0; v < g.vertex_count(); ++v)
                            mapped[v] =
                                f.entry_map(g.vertex_profile(v)).apply(labels[v]);
                        SimplexRef rhs = Q.gamma({gq, mapped, level});
                        if (!(lhs == rhs))
                            violation("gamma compatibility fails over (" + bp.key() +
                                      ")");
                    });
            }
            if (budget < 0) break;
        }
        if (budget < 0) break;
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Underlying category and pi0
// ---------------------------------------------------------------------------

ColoredGraph hom_chain(const std::vector<Color>& ambient, const Color& a, const Color& b,
                       const Color& c) {
    ColoredGraph g;
    g.colors = ambient;
    g.vertices.resize(2);
    g.edges.push_back({a, PortRef{}, PortRef{0, 0}});
    g.vertices[0].inputs.push_back(0);
    g.graph_inputs.push_back(0);
    g.edges.push_back({b, PortRef{0, 0}, PortRef{1, 0}});
    g.vertices[0].outputs.push_back(1);
    g.vertices[1].inputs.push_back(1);
    g.edges.push_back({c, PortRef{1, 0}, PortRef{}});
    g.vertices[1].outputs.push_back(2);
    g.graph_outputs.push_back(2);
    return g;
}

SSetPtr hom_entry(const GrProp& p, const Color& a, const Color& b) {
    return p.entry({{a}, {b}});
}

SimplexRef compose_hom(const GrProp& p, const Color& a, const Color& b, const Color& c,
                       const SimplexRef& f, const SimplexRef& g, int level) {
    ColoredGraph chain = hom_chain(p.colors(), a, b, c);
    return p.gamma({chain, {f, g}, level});
}

namespace {

std::string hom_key(const Color& a, const Color& b) { return a + "|" + b; }

} // namespace

Pi0Category pi0_category(const GrProp& p) {
    Pi0Category out;
    for (const auto& c : p.colors()) out.object_of[c] = out.cat.add_object(c);

    std::map<std::string, Pi0> comps;
    for (const auto& a : p.colors()) {
        for (const auto& b : p.colors()) {
            SSetPtr e = hom_entry(p, a, b);
            Pi0 pc = pi0(*e);
            comps[hom_key(a, b)] = pc;
            std::vector<int>& ids = out.mor_of_component[hom_key(a, b)];
            ids.assign(pc.components, -1);
            std::vector<int> rep(pc.components, -1);
            for (int v = 0; v < e->count(0); ++v)
                if (rep[pc.component_of[v]] < 0) rep[pc.component_of[v]] = v;
            for (int comp = 0; comp < pc.components; ++comp) {
                int id = out.cat.add_mor(out.object_of[a], out.object_of[b],
                                         a + "->" + b + "#" + std::to_string(comp));
                ids[comp] = id;
                out.rep_vertex.resize(id + 1);
                out.rep_vertex[id] = {Biprofile{{a}, {b}}, rep[comp]};
            }
        }
    }

    for (const auto& c : p.colors()) {
        int comp = comps[hom_key(c, c)].component_of[p.unit(c).nd_id];
        out.cat.set_identity(out.object_of[c], out.mor_of_component[hom_key(c, c)][comp]);
    }

    for (const auto& a : p.colors()) {
        for (const auto& b : p.colors()) {
            for (const auto& c : p.colors()) {
                const auto& fs = out.mor_of_component[hom_key(a, b)];
                const auto& gs = out.mor_of_component[hom_key(b, c)];
                for (int fc = 0; fc < static_cast<int>(fs.size()); ++fc) {
                    for (int gc = 0; gc < static_cast<int>(gs.size()); ++gc) {
                        int fv = out.rep_vertex[fs[fc]].second;
                        int gv = out.rep_vertex[gs[gc]].second;
                        SimplexRef r = compose_hom(p, a, b, c,
                                                   hom_entry(p, a, b)->ref(0, fv),
                                                   hom_entry(p, b, c)->ref(0, gv));
                        int comp = comps[hom_key(a, c)].component_of[r.nd_id];
                        out.cat.set_comp(gs[gc], fs[fc],
                                         out.mor_of_component[hom_key(a, c)][comp]);
                    }
                }
            }
        }
    }
    out.cat.seal();
    return out;
}

CatFunctor pi0_functor(const PropMorphism& f, const Pi0Category& src,
                       const Pi0Category& dst) {
    CatFunctor F;
    F.dom = &src.cat;
    F.cod = &dst.cat;
    F.obj_map.assign(src.cat.object_count(), -1);
    for (const auto& [c, i] : src.object_of)
        F.obj_map[i] = dst.object_of.at(f.map_color(c));
    F.mor_map.assign(src.cat.mor_count(), -1);
    for (int m = 0; m < src.cat.mor_count(); ++m) {
        const auto& [bp, v] = src.rep_vertex[m];
        SSetPtr e = f.src()->entry(bp);
        SimplexRef img = f.entry_map(bp).apply(e->ref(0, v));
        Biprofile tbp = f.map_biprofile(bp);
        Pi0 pc = pi0(*f.dst()->entry(tbp));
        int comp = pc.component_of[img.nd_id];
        F.mor_map[m] =
            dst.mor_of_component.at(hom_key(tbp.inputs[0], tbp.outputs[0]))[comp];
    }
    if (!F.valid())
        throw ValidationError("pi0 functor is not functorial (composition in pi0 "
                              "may be ill-defined for this morphism)");
    return F;
}

AxiomReport check_pi0_well_defined(const GrProp& p) {
    AxiomReport rep;
    std::map<std::string, Pi0> comps;
    for (const auto& a : p.colors())
        for (const auto& b : p.colors())
            comps[hom_key(a, b)] = pi0(*hom_entry(p, a, b));

    for (const auto& a : p.colors()) {
        for (const auto& b : p.colors()) {
            for (const auto& c : p.colors()) {
                SSetPtr eab = hom_entry(p, a, b);
                SSetPtr ebc = hom_entry(p, b, c);
                const Pi0& pab = comps[hom_key(a, b)];
                const Pi0& pbc = comps[hom_key(b, c)];
                const Pi0& pac = comps[hom_key(a, c)];
                // composite component as a function of source components only
                std::map<std::pair<int, int>, int> table;
                for (int u = 0; u < eab->count(0); ++u) {
                    for (int v = 0; v < ebc->count(0); ++v) {
                        SimplexRef r = compose_hom(p, a, b, c, eab->ref(0, u),
                                                   ebc->ref(0, v));
                        int rc = pac.component_of[r.nd_id];
                        auto key = std::make_pair(pab.component_of[u],
                                                  pbc.component_of[v]);
                        ++rep.cases;
                        auto it = table.find(key);
                        if (it == table.end())
                            table[key] = rc;
                        else if (it->second != rc)
                            rep.violations.push_back(
                                "pi0 composition depends on representatives at (" + a +
                                "," + b + "," + c + ")");
                    }
                }
            }
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Pre/post composition maps
// ---------------------------------------------------------------------------

namespace {

SSetMap entry_map_from_gamma(const GrPropPtr& p, const Biprofile& src_bp,
                             const Biprofile& dst_bp,
                             const std::function<Decoration(const SimplexRef&, int)>& deco) {
    SSetMap out;
    out.dom = p->entry(src_bp);
    out.cod = p->entry(dst_bp);
    out.images.resize(out.dom->dim() + 1);
    for (int d = 0; d <= out.dom->dim(); ++d) {
        if (d > p->dim_bound()) break;
        for (int i = 0; i < out.dom->count(d); ++i) {
            Decoration dec = deco(out.dom->ref(d, i), d);
            out.images[d].push_back(p->gamma(dec));
        }
    }
    if (!out.valid())
        throw ValidationError("entrywise composition map is not simplicial");
    return out;
}

} // namespace

SSetMap precompose_map(const GrPropPtr& p, const Biprofile& bp, int i,
                       const SimplexRef& a, const Color& b, const Color& b_prime) {
    if (i < 0 || i >= bp.in_arity() || bp.inputs[i] != b_prime)
        throw ProfileError("precompose: position " + std::to_string(i) +
                           " does not carry color " + b_prime);
    if (!a.nondegenerate() || a.dim() != 0)
        throw ProfileError("precompose: the plugged element must be a vertex");
    Biprofile target = bp;
    target.inputs[i] = b;

    const int n = bp.in_arity();
    const int m = bp.out_arity();
    ColoredGraph w;
    w.colors = p->colors();
    w.vertices.resize(2); // 0 = main, 1 = plugged vertex
    for (int k = 0; k < n; ++k) {
        if (k == i) {
            int id = static_cast<int>(w.edges.size());
            w.edges.push_back({b_prime, PortRef{1, 0}, PortRef{0, k}});
            w.vertices[1].outputs.push_back(id);
            w.vertices[0].inputs.push_back(id);
        } else {
            int id = static_cast<int>(w.edges.size());
            w.edges.push_back({bp.inputs[k], PortRef{}, PortRef{0, k}});
            w.vertices[0].inputs.push_back(id);
        }
    }
    {
        int id = static_cast<int>(w.edges.size());
        w.edges.push_back({b, PortRef{}, PortRef{1, 0}});
        w.vertices[1].inputs.push_back(id);
    }
    for (int j = 0; j < m; ++j) {
        int id = static_cast<int>(w.edges.size());
        w.edges.push_back({bp.outputs[j], PortRef{0, j}, PortRef{}});
        w.vertices[0].outputs.push_back(id);
        w.graph_outputs.push_back(id);
    }
    // graph inputs in target order
    for (int k = 0; k < n; ++k) {
        if (k == i)
            w.graph_inputs.push_back(w.vertices[1].inputs[0]);
        else
            w.graph_inputs.push_back(w.vertices[0].inputs[k]);
    }
    require_valid(w, "precompose template");

    return entry_map_from_gamma(p, bp, target, [&, a](const SimplexRef& x, int level) {
        Decoration d;
        d.graph = w;
        d.labels = {x, p->entry({{b}, {b_prime}})->apply(a, Monotone(level + 1, 0))};
        d.level = level;
        return d;
    });
}

SSetMap postcompose_map(const GrPropPtr& p, const Biprofile& bp, int j,
                        const SimplexRef& a, const Color& b, const Color& b_prime) {
    if (j < 0 || j >= bp.out_arity() || bp.outputs[j] != b)
        throw ProfileError("postcompose: position " + std::to_string(j) +
                           " does not carry color " + b);
    if (!a.nondegenerate() || a.dim() != 0)
        throw ProfileError("postcompose: the plugged element must be a vertex");
    Biprofile target = bp;
    target.outputs[j] = b_prime;

    const int n = bp.in_arity();
    const int m = bp.out_arity();
    ColoredGraph w;
    w.colors = p->colors();
    w.vertices.resize(2); // 0 = main, 1 = plugged vertex
    for (int k = 0; k < n; ++k) {
        int id = static_cast<int>(w.edges.size());
        w.edges.push_back({bp.inputs[k], PortRef{}, PortRef{0, k}});
        w.vertices[0].inputs.push_back(id);
        w.graph_inputs.push_back(id);
    }
    std::vector<int> out_edges(m, -1);
    for (int k = 0; k < m; ++k) {
        if (k == j) {
            int mid = static_cast<int>(w.edges.size());
            w.edges.push_back({b, PortRef{0, k}, PortRef{1, 0}});
            w.vertices[0].outputs.push_back(mid);
            w.vertices[1].inputs.push_back(mid);
            int id = static_cast<int>(w.edges.size());
            w.edges.push_back({b_prime, PortRef{1, 0}, PortRef{}});
            w.vertices[1].outputs.push_back(id);
            out_edges[k] = id;
        } else {
            int id = static_cast<int>(w.edges.size());
            w.edges.push_back({bp.outputs[k], PortRef{0, k}, PortRef{}});
            w.vertices[0].outputs.push_back(id);
            out_edges[k] = id;
        }
    }
    for (int k = 0; k < m; ++k) w.graph_outputs.push_back(out_edges[k]);
    require_valid(w, "postcompose template");

    return entry_map_from_gamma(p, bp, target, [&, a](const SimplexRef& x, int level) {
        Decoration d;
        d.graph = w;
        d.labels = {x, p->entry({{b}, {b_prime}})->apply(a, Monotone(level + 1, 0))};
        d.level = level;
        return d;
    });
}

} // namespace propcalc
