#pragma once

#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"

namespace propcalc {

// Small category with explicit composition table.
struct FiniteCategory {
    struct Mor {
        int src = -1, dst = -1;
        std::string name;
    };

    std::vector<std::string> objects;
    std::vector<Mor> mors;
    std::vector<int> identity;          // per object, morphism id
    std::vector<std::vector<int>> comp; // comp[g][f] = g o f, -1 if not composable

    int object_count() const { return static_cast<int>(objects.size()); }
    int mor_count() const { return static_cast<int>(mors.size()); }

    int add_object(std::string name);
    int add_mor(int src, int dst, std::string name);
    void set_identity(int obj, int mor);
    void set_comp(int g, int f, int gf);
    int compose(int g, int f) const; // g o f

    // identity and associativity laws, exhaustive; throws ValidationError
    void seal() const;

    bool is_iso(int f) const;
    std::optional<int> inverse(int f) const;
    std::vector<int> isos() const;

    // objects a, b connected by an isomorphism
    bool isomorphic_objects(int a, int b) const;
};

struct CatFunctor {
    const FiniteCategory* dom = nullptr;
    const FiniteCategory* cod = nullptr;
    std::vector<int> obj_map;
    std::vector<int> mor_map;

    bool valid() const; // functoriality, exhaustive
};

// For every iso h: F(e) -> b there is an iso g: e -> e' with F(g) = h.
bool is_isofibration(const CatFunctor& F);

// Fully faithful and essentially surjective, decided exhaustively.
bool is_cat_equivalence(const CatFunctor& F);

bool is_fully_faithful(const CatFunctor& F);
bool is_essentially_surjective(const CatFunctor& F);

} // namespace propcalc
