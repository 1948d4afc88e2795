#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "category.hpp"
#include "graphs.hpp"
#include "sset.hpp"
#include "substitution.hpp"

namespace propcalc {

// Graph in the scheme with one simplex of the matching entry per vertex, all
// in a single simplicial degree.
struct Decoration {
    ColoredGraph graph;
    std::vector<SimplexRef> labels;
    int level = 0;
};

// Supplies entries and the composition evaluator of a Gr-prop.
class PropBackend {
public:
    virtual ~PropBackend() = default;
    virtual SSetPtr build_entry(const Biprofile& bp) const = 0;
    virtual int unit_vertex(const Color& c) const = 0;
    virtual SimplexRef compose(const Decoration& d) const = 0;
    virtual std::string kind() const = 0;
};

// Set- or simplicially-enriched Gr-prop, entries truncated to an arity bound
// and simplicial dimension bound. Entries and gamma values are memoized.
class GrProp {
public:
    GrProp(Scheme scheme, std::vector<Color> colors, int arity_bound, int dim_bound,
           std::shared_ptr<const PropBackend> backend);

    Scheme scheme() const { return scheme_; }
    const std::vector<Color>& colors() const { return colors_; }
    int arity_bound() const { return arity_bound_; }
    int dim_bound() const { return dim_bound_; }
    const PropBackend& backend() const { return *backend_; }

    bool within_bounds(const Biprofile& bp) const;
    void require_bounds(const Biprofile& bp) const;

    // Entry P(d;c); BoundError outside the arity bound.
    SSetPtr entry(const Biprofile& bp) const;
    // Unit vertex id_c in entry (c;c).
    SimplexRef unit(const Color& c) const;

    // gamma_G evaluated on a decoration; memoized on the canonical form of
    // the decorated graph. SchemeError / BoundError / ProfileError on bad
    // input.
    SimplexRef gamma(const Decoration& d) const;
    // Same, bypassing the memo table (for invariance checks).
    SimplexRef gamma_direct(const Decoration& d) const;

    // All biprofiles over these colors within the arity bound.
    std::vector<Biprofile> all_biprofiles() const;
    std::vector<Biprofile> biprofiles_with_arity(int n, int m) const;

private:
    void check_decoration(const Decoration& d) const;

    Scheme scheme_;
    std::vector<Color> colors_;
    int arity_bound_;
    int dim_bound_;
    std::shared_ptr<const PropBackend> backend_;
    mutable std::mutex mu_;
    mutable std::map<std::string, SSetPtr> entry_cache_;
    mutable std::map<std::string, SimplexRef> gamma_memo_;
};

using GrPropPtr = std::shared_ptr<const GrProp>;

// --- fixture backends ---------------------------------------------------

// Every entry a point.
GrPropPtr terminal_prop(Scheme scheme, std::vector<Color> colors, int arity_bound = 4,
                        int dim_bound = 3);

// Entries (c..c;c..c) = all functions S^n -> S^m for a finite set S of the
// given size; gamma wires functions along the graph.
GrPropPtr endomorphism_prop(int set_size, Scheme scheme = Scheme::Prop,
                            int arity_bound = 4, const Color& color = "c");

// One color; entry (c;c) = X with an adjoined unit point and left-projection
// composition; every other entry empty. Connected schemes only.
GrPropPtr monoid_like_prop(const SSetPtr& x, Scheme scheme = Scheme::Properad,
                           const Color& color = "c", int dim_bound = 3);
// The inclusion of x into the (c;c) entry of monoid_like_prop(x).
SSetMap monoid_like_entry_inclusion(const GrProp& p, const SSetPtr& x);

// Chaotic groupoid on the given objects: every (a;b) entry a point, all
// other entries empty. Connected schemes only.
GrPropPtr chaotic_groupoid_prop(std::vector<Color> objects,
                                Scheme scheme = Scheme::Properad);

// Explicit table-backed prop: entries, units, and a gamma table keyed by
// canonical decorated code plus level.
struct PropTable {
    Scheme scheme = Scheme::Properad;
    std::vector<Color> colors;
    int arity_bound = 2;
    int dim_bound = 1;
    std::map<std::string, SSetPtr> entries;      // by Biprofile::key()
    std::map<Color, int> units;                  // vertex id in entry (c;c)
    std::map<std::string, SimplexRef> gamma;     // by decorated code "@" level
    bool identity_chains = true;                 // fall back to unit laws
};
GrPropPtr table_prop(PropTable table);
std::string gamma_table_key(const Decoration& d);

// --- morphisms ------------------------------------------------------------

class PropMorphism {
public:
    PropMorphism(GrPropPtr src, GrPropPtr dst, std::map<Color, Color> color_map,
                 std::function<SSetMap(const Biprofile&)> entry_builder);

    const GrPropPtr& src() const { return src_; }
    const GrPropPtr& dst() const { return dst_; }
    const std::map<Color, Color>& color_map() const { return color_map_; }

    Color map_color(const Color& c) const;
    Biprofile map_biprofile(const Biprofile& bp) const;
    const SSetMap& entry_map(const Biprofile& bp) const; // cached

private:
    struct Cache {
        std::mutex mu;
        std::map<std::string, SSetMap> entries;
    };

    GrPropPtr src_, dst_;
    std::map<Color, Color> color_map_;
    std::function<SSetMap(const Biprofile&)> builder_;
    std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

PropMorphism identity_morphism(const GrPropPtr& p);
PropMorphism compose(const PropMorphism& f, const PropMorphism& g); // f after g

// Recolor a graph along a color map.
ColoredGraph recolor(const ColoredGraph& g, const std::map<Color, Color>& cmap,
                     const std::vector<Color>& new_ambient);

// --- checking -------------------------------------------------------------

struct AxiomCheckOptions {
    int max_graph_vertices = 2;  // graphs gamma is evaluated over
    int max_sub_vertices = 2;    // per-vertex replacement size
    int max_legs = 2;            // biprofile legs per side for tested graphs
    int max_level = 1;           // simplicial degrees exercised
    long long max_cases = 200000;
};

struct AxiomReport {
    long long cases = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Unit, substitution-associativity, and strict-isomorphism equivariance of
// gamma, exhaustively within the given bounds.
AxiomReport check_axioms(const GrProp& p, const AxiomCheckOptions& opts = {});

// Unit preservation and gamma-compatibility of a morphism within bounds.
AxiomReport check_morphism(const PropMorphism& f, const AxiomCheckOptions& opts = {});

// --- underlying category and pi0 -------------------------------------------

// Two-vertex chain a ->(v1) b ->(v2) c used for hom composition.
ColoredGraph hom_chain(const std::vector<Color>& ambient, const Color& a,
                       const Color& b, const Color& c);

// hom(a,b) of the underlying simplicial category = entry ((a);(b)).
SSetPtr hom_entry(const GrProp& p, const Color& a, const Color& b);
// Composite of g: b -> c after f: a -> b via gamma over the chain.
SimplexRef compose_hom(const GrProp& p, const Color& a, const Color& b, const Color& c,
                       const SimplexRef& f, const SimplexRef& g, int level = 0);

struct Pi0Category {
    FiniteCategory cat;
    // object index per color, morphism id per (a,b,component)
    std::map<Color, int> object_of;
    std::map<std::string, std::vector<int>> mor_of_component; // key(a,b) -> by comp
    std::vector<std::pair<Biprofile, int>> rep_vertex;        // per morphism id
};

Pi0Category pi0_category(const GrProp& p);

// Functor induced on pi0 categories by a morphism of props.
CatFunctor pi0_functor(const PropMorphism& f, const Pi0Category& src,
                       const Pi0Category& dst);

// Composition in pi0 does not depend on chosen representatives (exhaustive).
AxiomReport check_pi0_well_defined(const GrProp& p);

// The entrywise map (- o_i a) : P(d; c1..b'..cn) -> P(d; c1..b..cn) given a
// vertex a of entry ((b);(b')). Position i is 0-based.
SSetMap precompose_map(const GrPropPtr& p, const Biprofile& bp, int i,
                       const SimplexRef& a, const Color& b, const Color& b_prime);
// The entrywise map (a o_j -) : P(d1..b..dm; c) -> P(d1..b'..dm; c).
SSetMap postcompose_map(const GrPropPtr& p, const Biprofile& bp, int j,
                        const SimplexRef& a, const Color& b, const Color& b_prime);

} // namespace propcalc
