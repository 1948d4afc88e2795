#include "category.hpp"

#include <set>

namespace propcalc {

int FiniteCategory::add_object(std::string name) {
    objects.push_back(std::move(name));
    identity.push_back(-1);
    return object_count() - 1;
}

int FiniteCategory::add_mor(int src, int dst, std::string name) {
    mors.push_back({src, dst, std::move(name)});
    for (auto& row : comp) row.push_back(-1);
    comp.emplace_back(mors.size(), -1);
    return mor_count() - 1;
}

void FiniteCategory::set_identity(int obj, int mor) { identity[obj] = mor; }

void FiniteCategory::set_comp(int g, int f, int gf) { comp[g][f] = gf; }

int FiniteCategory::compose(int g, int f) const {
    int r = comp[g][f];
    if (r < 0) throw ValidationError("compose: morphisms not composable");
    return r;
}

void FiniteCategory::seal() const {
    for (int a = 0; a < object_count(); ++a) {
        int i = identity[a];
        if (i < 0 || mors[i].src != a || mors[i].dst != a)
            throw ValidationError("category: object " + objects[a] + " has no identity");
    }
    for (int f = 0; f < mor_count(); ++f) {
        for (int g = 0; g < mor_count(); ++g) {
            bool composable = mors[f].dst == mors[g].src;
            if (composable != (comp[g][f] >= 0))
                throw ValidationError("category: composition table shape is wrong");
            if (composable) {
                int gf = comp[g][f];
                if (mors[gf].src != mors[f].src || mors[gf].dst != mors[g].dst)
                    throw ValidationError("category: composite has wrong endpoints");
            }
        }
        if (comp[f][identity[mors[f].src]] != f || comp[identity[mors[f].dst]][f] != f)
            throw ValidationError("category: unit law fails");
    }
    for (int f = 0; f < mor_count(); ++f)
        for (int g = 0; g < mor_count(); ++g) {
            if (mors[f].dst != mors[g].src) continue;
            for (int h = 0; h < mor_count(); ++h) {
                if (mors[g].dst != mors[h].src) continue;
                if (comp[h][comp[g][f]] != comp[comp[h][g]][f])
                    throw ValidationError("category: associativity fails");
            }
        }
}

bool FiniteCategory::is_iso(int f) const { return inverse(f).has_value(); }

std::optional<int> FiniteCategory::inverse(int f) const {
    for (int g = 0; g < mor_count(); ++g) {
        if (mors[g].src != mors[f].dst || mors[g].dst != mors[f].src) continue;
        if (comp[g][f] == identity[mors[f].src] && comp[f][g] == identity[mors[f].dst])
            return g;
    }
    return std::nullopt;
}

std::vector<int> FiniteCategory::isos() const {
    std::vector<int> out;
    for (int f = 0; f < mor_count(); ++f)
        if (is_iso(f)) out.push_back(f);
    return out;
}

bool FiniteCategory::isomorphic_objects(int a, int b) const {
    if (a == b) return true;
    for (int f = 0; f < mor_count(); ++f)
        if (mors[f].src == a && mors[f].dst == b && is_iso(f)) return true;
    return false;
}

bool CatFunctor::valid() const {
    if (!dom || !cod) return false;
    if (static_cast<int>(obj_map.size()) != dom->object_count()) return false;
    if (static_cast<int>(mor_map.size()) != dom->mor_count()) return false;
    for (int f = 0; f < dom->mor_count(); ++f) {
        const auto& m = dom->mors[f];
        const auto& fm = cod->mors[mor_map[f]];
        if (fm.src != obj_map[m.src] || fm.dst != obj_map[m.dst]) return false;
    }
    for (int a = 0; a < dom->object_count(); ++a)
        if (mor_map[dom->identity[a]] != cod->identity[obj_map[a]]) return false;
    for (int f = 0; f < dom->mor_count(); ++f)
        for (int g = 0; g < dom->mor_count(); ++g) {
            if (dom->mors[f].dst != dom->mors[g].src) continue;
            if (mor_map[dom->comp[g][f]] != cod->comp[mor_map[g]][mor_map[f]])
                return false;
        }
    return true;
}

bool is_isofibration(const CatFunctor& F) {
    for (int e = 0; e < F.dom->object_count(); ++e) {
        for (int h = 0; h < F.cod->mor_count(); ++h) {
            if (F.cod->mors[h].src != F.obj_map[e]) continue;
            if (!F.cod->is_iso(h)) continue;
            bool lifted = false;
            for (int g = 0; g < F.dom->mor_count() && !lifted; ++g) {
                if (F.dom->mors[g].src != e) continue;
                if (!F.dom->is_iso(g)) continue;
                if (F.mor_map[g] == h) lifted = true;
            }
            if (!lifted) return false;
        }
    }
    return true;
}

bool is_fully_faithful(const CatFunctor& F) {
    for (int a = 0; a < F.dom->object_count(); ++a) {
        for (int b = 0; b < F.dom->object_count(); ++b) {
            // hom(a,b) -> hom(Fa,Fb) must be a bijection
            std::set<int> image;
            int hom_size = 0;
            for (int f = 0; f < F.dom->mor_count(); ++f) {
                if (F.dom->mors[f].src != a || F.dom->mors[f].dst != b) continue;
                ++hom_size;
                image.insert(F.mor_map[f]);
            }
            if (static_cast<int>(image.size()) != hom_size) return false; // not faithful
            int target_size = 0;
            for (int f = 0; f < F.cod->mor_count(); ++f)
                if (F.cod->mors[f].src == F.obj_map[a] &&
                    F.cod->mors[f].dst == F.obj_map[b])
                    ++target_size;
            if (target_size != hom_size) return false; // not full
        }
    }
    return true;
}

bool is_essentially_surjective(const CatFunctor& F) {
    for (int b = 0; b < F.cod->object_count(); ++b) {
        bool hit = false;
        for (int a = 0; a < F.dom->object_count() && !hit; ++a)
            if (F.cod->isomorphic_objects(F.obj_map[a], b)) hit = true;
        if (!hit) return false;
    }
    return true;
}

bool is_cat_equivalence(const CatFunctor& F) {
    return is_fully_faithful(F) && is_essentially_surjective(F);
}

} // namespace propcalc
