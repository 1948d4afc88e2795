#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace propcalc {

// A monotone map [a] -> [b] given by its value list (size a+1).
using Monotone = std::vector<int>;

Monotone monotone_identity(int dim);
bool is_monotone(const Monotone& m);
bool is_epi(const Monotone& m); // surjective onto [max]

// Every simplex of a simplicial set is uniquely a degeneracy of a
// nondegenerate one: this names a simplex as (nondegenerate id, epi).
struct SimplexRef {
    int nd_id = -1;
    Monotone epi; // [dim] ->> [nd_dim]

    int dim() const { return static_cast<int>(epi.size()) - 1; }
    int nd_dim() const { return epi.empty() ? -1 : epi.back(); }
    bool nondegenerate() const { return dim() == nd_dim(); }
    bool operator==(const SimplexRef&) const = default;
    auto operator<=>(const SimplexRef&) const = default;
    std::string key() const;
};

// Finitely presented simplicial set: nondegenerate simplices per dimension
// with face maps; degeneracies implicit in the SimplexRef calculus.
class SSet {
public:
    // faces[k] is the k-th face, a ref of dimension dim-1. Vertices pass {}.
    int add_simplex(int dim, std::vector<SimplexRef> faces, std::string name = {});

    // Checks the simplicial identities on the nondegenerate data; throws
    // ValidationError on failure. Idempotent.
    void seal() const;

    int dim() const { return static_cast<int>(faces_.size()) - 1; }
    int count(int d) const {
        return (d >= 0 && d <= dim()) ? static_cast<int>(faces_[d].size()) : 0;
    }
    int total_count() const;
    bool empty() const { return total_count() == 0; }

    SimplexRef ref(int d, int i) const; // nondegenerate simplex as a ref
    const std::vector<SimplexRef>& faces(int d, int i) const { return faces_[d][i]; }
    const std::string& name(int d, int i) const { return names_[d][i]; }

    SimplexRef face(const SimplexRef& r, int k) const;
    SimplexRef degeneracy(const SimplexRef& r, int k) const;
    // r . op for an arbitrary monotone op: [a] -> [r.dim()].
    SimplexRef apply(const SimplexRef& r, const Monotone& op) const;
    // j-th vertex of r.
    SimplexRef vertex_of(const SimplexRef& r, int j) const;

    // All simplices of dimension d, degenerate ones included.
    std::vector<SimplexRef> simplices(int d) const;

private:
    std::vector<std::vector<std::vector<SimplexRef>>> faces_;
    std::vector<std::vector<std::string>> names_;
};

using SSetPtr = std::shared_ptr<const SSet>;

// Dimensionwise assignment of nondegenerate simplices to simplices of the
// codomain, commuting with faces (and hence all operators).
struct SSetMap {
    SSetPtr dom, cod;
    std::vector<std::vector<SimplexRef>> images; // [d][i]

    SimplexRef apply(const SimplexRef& r) const;
    bool valid() const;
    std::string key() const; // stable identity for dedup/search
};

SSetMap identity_map(const SSetPtr& x);
SSetMap compose(const SSetMap& g, const SSetMap& f); // g after f
SSetMap constant_map(const SSetPtr& x, const SSetPtr& y, int target_vertex);
bool is_isomorphism(const SSetMap& f);

// Standard cells. All are built over the subset model of Delta[p].
SSetPtr sset_empty();
SSetPtr sset_point();
SSetPtr sset_discrete(int n);
SSetPtr simplex(int p);
SSetPtr boundary(int p);     // p >= 0 (boundary(0) is empty)
SSetPtr horn(int k, int p);  // 0 <= k <= p, p >= 1
SSetMap boundary_inclusion(int p);
SSetMap horn_inclusion(int k, int p);

// Inclusion Lambda[k,p] -> dDelta[p] -> ... any subset complex into Delta[p]
// is what the two functions above produce; this maps one subset complex into
// another when the first is contained in the second.
struct DisjointUnion {
    SSetPtr sset;
    SSetMap inj1, inj2;
};
DisjointUnion sset_disjoint_union(const SSetPtr& a, const SSetPtr& b);

struct Product {
    SSetPtr sset;
    SSetMap proj1, proj2;
    // id of the product simplex holding a given jointly-nondegenerate pair
    std::map<std::pair<SimplexRef, SimplexRef>, std::pair<int, int>> pair_index;
    SimplexRef pair(const SimplexRef& a, const SimplexRef& b) const;
};
Product sset_product(const SSetPtr& x, const SSetPtr& y);

struct Pi0 {
    int components = 0;
    std::vector<int> component_of; // per 0-simplex
};
Pi0 pi0(const SSet& x);

// All simplicial maps a -> x, lexicographically ordered by image choice.
// Throws BoundError if the search space exceeds max_maps candidates.
std::vector<SSetMap> all_maps(const SSetPtr& a, const SSetPtr& x,
                              long long max_maps = 2'000'000);

struct KanResult {
    enum class Verdict { Yes, No, BoundExhausted } verdict;
    int checked_up_to = 0;
    std::string witness; // nonempty iff No: the failing square
};

// Exhaustive horn-lifting check for p <= p_max (p_max < 0 picks the default
// dim(dom)+dim(cod)+2). Yes means no failing square up to the default bound.
KanResult is_kan_fibration(const SSetMap& f, int p_max = -1);

// Right lifting property of f against boundary inclusions (acyclic-fibration
// proxy), same bounding convention as is_kan_fibration.
KanResult has_rlp_boundaries(const SSetMap& f, int p_max = -1);

struct WeakEqVerdict {
    enum class V { Yes, No, Unknown } v = V::Unknown;
    std::string reason;
    bool yes() const { return v == V::Yes; }
    bool no() const { return v == V::No; }
};

// Sound three-valued test: Yes certified by isomorphism or contractibility
// (collapsibility search) component by component; No certified by a pi0 or
// homology mismatch; Unknown otherwise.
WeakEqVerdict weak_equivalence_verdict(const SSetMap& f);

// Collapsibility of the realization to a point by elementary collapses.
bool collapsible(const SSet& x);

} // namespace propcalc
