#pragma once

#include <optional>
#include <vector>

#include "graphs.hpp"

namespace propcalc {

// Per-vertex assignment v -> H_v over the vertices of a target graph,
// witnessing a morphism substitute(this) -> target of an extension category.
struct SubstitutionData {
    ColoredGraph target;                  // G
    std::vector<ColoredGraph> assignment; // H_v, indexed like target.vertices
};

// Profile (biprofile) match of every H_v against its vertex.
ValidationReport validate(const SubstitutionData& d);

// G{H_v}: each vertex v of G replaced by H_v, legs spliced onto v's incident
// edge ends in port order; graph-level orderings inherited from G.
// Throws ProfileError on arity/color mismatch.
ColoredGraph substitute(const SubstitutionData& d);

// All-corolla data on g (the identity morphism g -> g).
SubstitutionData identity_substitution(const ColoredGraph& g);

// G'(g2) after G(g): requires g with exactly one output, g2 with exactly one
// input, of equal color. Input ordering from g, output ordering from g2.
ColoredGraph graft(const ColoredGraph& g, const ColoredGraph& g2);

// Given inner: J -> K and outer: K' -> G with K' = substitute(outer) strictly
// isomorphic to K = inner.target, produce {H_v{I_u^v}}: J -> G. If iso is not
// supplied, one is searched for; absence is an error.
SubstitutionData compose_substitution_data(const SubstitutionData& inner,
                                           const SubstitutionData& outer,
                                           std::optional<GraphIso> iso = std::nullopt);

// Membership in a pasting scheme: Prop = valid wheel-free, Properad =
// connected, Dioperad = simply connected.
bool scheme_member(Scheme scheme, const ColoredGraph& g);

struct ClosureCounterexample {
    SubstitutionData data;
    std::string reason;
};

struct ClosureReport {
    long long cases_checked = 0;
    std::vector<ClosureCounterexample> counterexamples;
    bool ok() const { return counterexamples.empty(); }
};

struct ClosureOptions {
    std::vector<Color> colors{"c"};
    int max_target_vertices = 3;
    int max_sub_vertices = 2;
    int max_vertex_in = 2;
    int max_vertex_out = 2;
    int max_legs = 2;          // biprofile arity cap per side for targets
    unsigned seed = 1;
    int random_samples = 0;    // extra randomized trials on bigger shapes
};

// Substituting scheme members into a scheme member stays in the scheme;
// exhaustive over the given bounds plus optional seeded random sampling.
ClosureReport check_closure(Scheme scheme, const ClosureOptions& opts);

} // namespace propcalc
