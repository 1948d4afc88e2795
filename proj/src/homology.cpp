#include "homology.hpp"

#include <algorithm>
#include <cstdlib>

namespace propcalc {

namespace {

long long abs_ll(long long x) { return x < 0 ? -x : x; }

} // namespace

std::vector<long long> smith_invariant_factors(IntMatrix m) {
    std::vector<long long> factors;
    int top = 0;
    while (top < m.rows && top < m.cols) {
        // locate the smallest nonzero entry in the remaining block
        int pr = -1, pc = -1;
        for (int r = top; r < m.rows; ++r)
            for (int c = top; c < m.cols; ++c)
                if (m.at(r, c) != 0 &&
                    (pr < 0 || abs_ll(m.at(r, c)) < abs_ll(m.at(pr, pc)))) {
                    pr = r;
                    pc = c;
                }
        if (pr < 0) break;
        std::swap_ranges(m.a.begin() + static_cast<size_t>(top) * m.cols,
                         m.a.begin() + static_cast<size_t>(top + 1) * m.cols,
                         m.a.begin() + static_cast<size_t>(pr) * m.cols);
        for (int r = 0; r < m.rows; ++r) std::swap(m.at(r, top), m.at(r, pc));

        bool again = true;
        while (again) {
            again = false;
            for (int r = top + 1; r < m.rows; ++r) {
                if (m.at(r, top) == 0) continue;
                long long q = m.at(r, top) / m.at(top, top);
                for (int c = top; c < m.cols; ++c) m.at(r, c) -= q * m.at(top, c);
                if (m.at(r, top) != 0) {
                    // remainder became the smaller pivot
                    for (int c = top; c < m.cols; ++c) std::swap(m.at(r, c), m.at(top, c));
                    again = true;
                }
            }
            for (int c = top + 1; c < m.cols; ++c) {
                if (m.at(top, c) == 0) continue;
                long long q = m.at(top, c) / m.at(top, top);
                for (int r = top; r < m.rows; ++r) m.at(r, c) -= q * m.at(r, top);
                if (m.at(top, c) != 0) {
                    for (int r = top; r < m.rows; ++r) std::swap(m.at(r, c), m.at(r, top));
                    again = true;
                }
            }
        }

        // divisibility: fold any entry not divisible by the pivot into row top
        bool fixed = true;
        for (int r = top + 1; r < m.rows && fixed; ++r)
            for (int c = top + 1; c < m.cols && fixed; ++c)
                if (m.at(r, c) % m.at(top, top) != 0) {
                    for (int cc = top; cc < m.cols; ++cc) m.at(top, cc) += m.at(r, cc);
                    fixed = false;
                }
        if (!fixed) continue; // redo elimination at the same pivot

        factors.push_back(abs_ll(m.at(top, top)));
        ++top;
    }
    return factors;
}

std::string HomologyGroup::str() const {
    std::string s = "Z^" + std::to_string(rank);
    for (long long t : torsion) s += " + Z/" + std::to_string(t);
    return s;
}

std::vector<HomologyGroup> homology(const SSet& x, int n_max) {
    // boundary matrices of the normalized complex
    auto boundary_matrix = [&](int d) {
        IntMatrix m;
        m.rows = x.count(d - 1);
        m.cols = x.count(d);
        m.a.assign(static_cast<size_t>(m.rows) * m.cols, 0);
        for (int i = 0; i < x.count(d); ++i) {
            for (int k = 0; k <= d; ++k) {
                SimplexRef f = x.faces(d, i)[k];
                if (!f.nondegenerate()) continue;
                m.at(f.nd_id, i) += (k % 2 == 0) ? 1 : -1;
            }
        }
        return m;
    };

    std::vector<HomologyGroup> out;
    long long prev_rank = 0; // rank of boundary_d
    for (int d = 0; d <= n_max; ++d) {
        std::vector<long long> next_factors =
            (d + 1 <= x.dim() + 1) ? smith_invariant_factors(boundary_matrix(d + 1))
                                   : std::vector<long long>{};
        long long next_rank = static_cast<long long>(next_factors.size());
        HomologyGroup h;
        h.rank = static_cast<long long>(x.count(d)) - prev_rank - next_rank;
        for (long long f : next_factors)
            if (abs_ll(f) > 1) h.torsion.push_back(abs_ll(f));
        std::sort(h.torsion.begin(), h.torsion.end());
        out.push_back(std::move(h));
        prev_rank = next_rank;
    }
    return out;
}

} // namespace propcalc
