#pragma once

#include <string>
#include <vector>

#include "sset.hpp"

namespace propcalc {

// Integer matrix in row-major order.
struct IntMatrix {
    int rows = 0, cols = 0;
    std::vector<long long> a;
    long long& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
    long long at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Nonzero diagonal entries of the Smith normal form, each dividing the next.
std::vector<long long> smith_invariant_factors(IntMatrix m);

struct HomologyGroup {
    long long rank = 0;
    std::vector<long long> torsion; // invariant factors > 1, ascending
    bool operator==(const HomologyGroup&) const = default;
    std::string str() const;
};

// Integral homology of the normalized chain complex (degenerate faces drop
// out), degrees 0..n_max.
std::vector<HomologyGroup> homology(const SSet& x, int n_max);

} // namespace propcalc
