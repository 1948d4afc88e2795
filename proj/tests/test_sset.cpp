#include "doctest.h"

#include <set>

#include "homology.hpp"
#include "sset.hpp"

using namespace propcalc;

TEST_CASE("standard cells") {
    CHECK(simplex(0)->count(0) == 1);
    CHECK(simplex(0)->dim() == 0);

    CHECK(boundary(1)->count(0) == 2);
    CHECK(boundary(1)->count(1) == 0);

    SSetPtr h = horn(1, 2);
    CHECK(h->count(0) == 3);
    CHECK(h->count(1) == 2);
    CHECK(h->count(2) == 0);

    CHECK(simplex(2)->count(1) == 3);
    CHECK(simplex(3)->count(2) == 4);

    CHECK_THROWS_AS((void)horn(3, 2), BoundError);
    CHECK_THROWS_AS((void)simplex(-1), BoundError);

    CHECK(boundary_inclusion(2).valid());
    CHECK(horn_inclusion(0, 2).valid());
}

TEST_CASE("operator calculus obeys the simplicial identities") {
    // spot-check d_i s_j relations on every simplex of a couple of fixtures
    for (SSetPtr x : {simplex(2), simplex(3), horn(1, 2)}) {
        for (int d = 0; d <= x->dim(); ++d) {
            for (int i = 0; i < x->count(d); ++i) {
                SimplexRef r = x->ref(d, i);
                for (int j = 0; j <= d; ++j) {
                    SimplexRef s = x->degeneracy(r, j);
                    CHECK(x->face(s, j) == r);
                    CHECK(x->face(s, j + 1) == r);
                    if (j + 2 <= d + 1) {
                        // d_i s_j = s_j d_{i-1} for i > j+1
                        for (int k = j + 2; k <= d + 1; ++k) {
                            SimplexRef lhs = x->face(s, k);
                            SimplexRef rhs = x->degeneracy(x->face(r, k - 1), j);
                            CHECK(lhs == rhs);
                        }
                    }
                    for (int k = 0; k < j; ++k) {
                        // d_i s_j = s_{j-1} d_i for i < j
                        SimplexRef lhs = x->face(s, k);
                        SimplexRef rhs = x->degeneracy(x->face(r, k), j - 1);
                        CHECK(lhs == rhs);
                    }
                }
            }
        }
    }
}

TEST_CASE("products") {
    // X x point is X
    SSetPtr x = simplex(2);
    Product p = sset_product(x, sset_point());
    CHECK(is_isomorphism(p.proj1));

    // shuffle count: Delta[1] x Delta[1] has two nondegenerate 2-simplices
    Product sq = sset_product(simplex(1), simplex(1));
    CHECK(sq.sset->count(0) == 4);
    CHECK(sq.sset->count(1) == 5);
    CHECK(sq.sset->count(2) == 2);
    CHECK(sq.proj1.valid());
    CHECK(sq.proj2.valid());

    // pi0 of a product is the product of pi0s
    SSetPtr two = sset_discrete(2);
    Product pr = sset_product(two, boundary(1));
    CHECK(pi0(*pr.sset).components == 4);
}

TEST_CASE("pi0") {
    CHECK(pi0(*boundary(1)).components == 2);
    CHECK(pi0(*simplex(3)).components == 1);
    CHECK(pi0(*horn(0, 2)).components == 1);
    CHECK(pi0(*horn(2, 3)).components == 1);
    CHECK(pi0(*sset_empty()).components == 0);
}

TEST_CASE("homology") {
    auto h = homology(*simplex(3), 3);
    CHECK(h[0] == HomologyGroup{1, {}});
    CHECK(h[1] == HomologyGroup{0, {}});
    CHECK(h[2] == HomologyGroup{0, {}});
    CHECK(h[3] == HomologyGroup{0, {}});

    auto hb2 = homology(*boundary(2), 2);
    CHECK(hb2[0] == HomologyGroup{1, {}});
    CHECK(hb2[1] == HomologyGroup{1, {}});
    CHECK(hb2[2] == HomologyGroup{0, {}});

    auto hb1 = homology(*boundary(1), 1);
    CHECK(hb1[0] == HomologyGroup{2, {}});
    CHECK(hb1[1] == HomologyGroup{0, {}});

    auto hb3 = homology(*boundary(3), 3);
    CHECK(hb3[0] == HomologyGroup{1, {}});
    CHECK(hb3[1] == HomologyGroup{0, {}});
    CHECK(hb3[2] == HomologyGroup{1, {}});
}

TEST_CASE("smith normal form") {
    IntMatrix m;
    m.rows = 2;
    m.cols = 2;
    m.a = {2, 0, 0, 3};
    auto f = smith_invariant_factors(m);
    REQUIRE(f.size() == 2);
    CHECK(f[0] == 1);
    CHECK(f[1] == 6);

    IntMatrix z;
    z.rows = 3;
    z.cols = 2;
    z.a = {1, 1, 1, 1, 1, 1};
    auto fz = smith_invariant_factors(z);
    REQUIRE(fz.size() == 1);
    CHECK(fz[0] == 1);
}

TEST_CASE("kan fibration checks") {
    // identity maps lift everything
    for (SSetPtr x : {simplex(1), boundary(2), sset_discrete(3)}) {
        auto res = is_kan_fibration(identity_map(x));
        CHECK(res.verdict == KanResult::Verdict::Yes);
    }

    // maps of discrete sets are Kan fibrations
    {
        SSetMap f = constant_map(sset_discrete(2), sset_point(), 0);
        CHECK(is_kan_fibration(f).verdict == KanResult::Verdict::Yes);
    }

    // a horn inclusion is not a Kan fibration
    {
        auto res = is_kan_fibration(horn_inclusion(1, 2));
        CHECK(res.verdict == KanResult::Verdict::No);
        CHECK(!res.witness.empty());
    }

    // composition of fibrations stays a fibration on tested pairs
    {
        SSetMap f = constant_map(sset_discrete(2), sset_discrete(1), 0);
        SSetMap g = constant_map(sset_discrete(1), sset_point(), 0);
        CHECK(is_kan_fibration(compose(g, f)).verdict == KanResult::Verdict::Yes);
    }

    // boundary lifting: a non-surjective map fails rlp at p = 0
    {
        SSetMap f = constant_map(sset_point(), sset_discrete(2), 0);
        auto res = has_rlp_boundaries(f);
        CHECK(res.verdict == KanResult::Verdict::No);
    }
}

TEST_CASE("weak equivalence verdicts") {
    // simplex(p) -> point: yes
    for (int p = 0; p <= 3; ++p) {
        SSetMap f = constant_map(simplex(p), sset_point(), 0);
        CHECK(weak_equivalence_verdict(f).yes());
    }

    // boundary(1) -> point: no, pi0 mismatch
    {
        SSetMap f = constant_map(boundary(1), sset_point(), 0);
        auto v = weak_equivalence_verdict(f);
        CHECK(v.no());
    }

    // boundary(2) -> point: no, homology mismatch
    {
        SSetMap f = constant_map(boundary(2), sset_point(), 0);
        auto v = weak_equivalence_verdict(f);
        CHECK(v.no());
        CHECK(v.reason.find("homology") != std::string::npos);
    }

    // identity: yes (isomorphism)
    CHECK(weak_equivalence_verdict(identity_map(boundary(2))).yes());

    // empty to empty: yes
    CHECK(weak_equivalence_verdict(identity_map(sset_empty())).yes());
}

TEST_CASE("collapsibility") {
    CHECK(collapsible(*simplex(0)));
    CHECK(collapsible(*simplex(1)));
    CHECK(collapsible(*simplex(2)));
    CHECK(collapsible(*simplex(3)));
    CHECK(collapsible(*horn(1, 2)));
    CHECK(!collapsible(*boundary(2)));
    CHECK(!collapsible(*boundary(1)));
    CHECK(!collapsible(*sset_empty()));
    Product sq = sset_product(simplex(1), simplex(1));
    CHECK(collapsible(*sq.sset));
}

TEST_CASE("all_maps") {
    // maps Delta[0] -> X are the vertices
    CHECK(all_maps(simplex(0), sset_discrete(3)).size() == 3);
    // maps Delta[1] -> Delta[1]: all 1-simplices of Delta[1]
    CHECK(all_maps(simplex(1), simplex(1)).size() == 3); // 01, s0(0), s0(1)
    // maps out of the empty set: exactly one
    CHECK(all_maps(sset_empty(), simplex(2)).size() == 1);
    // maps boundary(1) -> discrete(2): ordered pairs of vertices
    CHECK(all_maps(boundary(1), sset_discrete(2)).size() == 4);
}

TEST_CASE("disjoint union") {
    DisjointUnion u = sset_disjoint_union(simplex(1), sset_point());
    CHECK(u.sset->count(0) == 3);
    CHECK(u.sset->count(1) == 1);
    CHECK(u.inj1.valid());
    CHECK(u.inj2.valid());
    CHECK(pi0(*u.sset).components == 2);
}
