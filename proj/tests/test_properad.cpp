#include "doctest.h"

#include "properad.hpp"

using namespace propcalc;

namespace {

// the endomorphism prop function index for a map S^1 -> S^1 over S = {0,1}
int fn11(int f0, int f1) { return f0 + 2 * f1; }

} // namespace

TEST_CASE("terminal prop axioms") {
    GrPropPtr t = terminal_prop(Scheme::Properad, {"c"});
    AxiomCheckOptions opts;
    opts.max_graph_vertices = 2;
    opts.max_sub_vertices = 2;
    AxiomReport rep = check_axioms(*t, opts);
    CHECK(rep.cases > 100);
    CHECK(rep.ok());
}

TEST_CASE("endomorphism prop basics") {
    GrPropPtr e1 = endomorphism_prop(1);
    CHECK(e1->entry({{"c"}, {"c"}})->count(0) == 1); // terminal at |S| = 1

    GrPropPtr e2 = endomorphism_prop(2);
    CHECK(e2->entry({{"c"}, {"c"}})->count(0) == 4);
    CHECK(e2->entry({{"c", "c"}, {"c", "c"}})->count(0) == 256);
    CHECK(e2->unit("c") == e2->entry({{"c"}, {"c"}})->ref(0, fn11(0, 1)));
}

TEST_CASE("endomorphism gamma composes functions") {
    GrPropPtr e2 = endomorphism_prop(2);
    // chain of two (c;c) functions: not(x) then not(x) = identity
    int neg = fn11(1, 0);
    ColoredGraph chain = hom_chain({"c"}, "c", "c", "c");
    SSetPtr hom = e2->entry({{"c"}, {"c"}});
    SimplexRef r = e2->gamma({chain, {hom->ref(0, neg), hom->ref(0, neg)}, 0});
    CHECK(r == e2->unit("c"));
    // not then const1: x -> 1
    int const1 = fn11(1, 1);
    SimplexRef r2 = e2->gamma({chain, {hom->ref(0, neg), hom->ref(0, const1)}, 0});
    CHECK(r2 == hom->ref(0, const1));
    // direct function composition oracle: f = id, g = neg gives neg
    SimplexRef r3 = e2->gamma({chain, {e2->unit("c"), hom->ref(0, neg)}, 0});
    CHECK(r3 == hom->ref(0, neg));
}

TEST_CASE("endomorphism prop axioms hold") {
    GrPropPtr e2 = endomorphism_prop(2, Scheme::Prop, 3);
    AxiomCheckOptions opts;
    opts.max_graph_vertices = 2;
    opts.max_sub_vertices = 1;
    opts.max_legs = 2;
    opts.max_level = 0;
    opts.max_cases = 50000;
    AxiomReport rep = check_axioms(*e2, opts);
    CHECK(rep.cases > 100);
    CHECK(rep.ok());
}

TEST_CASE("corrupted table prop is caught") {
    // one color, entry (c;c) = two points {u, q}; gamma misdeclares a chain
    PropTable t;
    t.scheme = Scheme::Properad;
    t.colors = {"c"};
    t.arity_bound = 2;
    t.dim_bound = 1;
    t.entries[Biprofile{{"c"}, {"c"}}.key()] = sset_discrete(2);
    t.units["c"] = 0;
    // q o q should be q for associativity with left-projection; corrupt it
    GrPropPtr honest;
    {
        PropTable h = t;
        GrPropPtr tmp = table_prop(h);
        SSetPtr hom = tmp->entry({{"c"}, {"c"}});
        ColoredGraph chain = hom_chain({"c"}, "c", "c", "c");
        // fill the full 2-chain table with left-projection values
        PropTable filled = t;
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Decoration d{chain, {hom->ref(0, a), hom->ref(0, b)}, 0};
                int value = b == 1 ? 1 : a; // unit = 0: pick the other factor
                filled.gamma[gamma_table_key(d)] = hom->ref(0, value);
            }
        honest = table_prop(filled);
    }
    AxiomCheckOptions opts;
    opts.max_graph_vertices = 2;
    opts.max_sub_vertices = 1;
    opts.max_legs = 1;
    opts.max_level = 0;
    CHECK(check_axioms(*honest, opts).ok());

    PropTable corrupt = t;
    {
        SSetPtr hom = honest->entry({{"c"}, {"c"}});
        ColoredGraph chain = hom_chain({"c"}, "c", "c", "c");
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                Decoration d{chain, {hom->ref(0, a), hom->ref(0, b)}, 0};
                corrupt.gamma[gamma_table_key(d)] = hom->ref(0, 1 - std::max(a, b));
            }
    }
    GrPropPtr bad = table_prop(corrupt);
    AxiomReport rep = check_axioms(*bad, opts);
    CHECK(!rep.ok());
}

TEST_CASE("gamma errors") {
    GrPropPtr t = terminal_prop(Scheme::Dioperad, {"c"}, 2);
    // scheme error: disconnected graph for a dioperad
    ColoredGraph pair;
    pair.colors = {"c"};
    pair.vertices.resize(2);
    CHECK_THROWS_AS((void)t->gamma({pair, {t->entry({{}, {}})->ref(0, 0),
                                           t->entry({{}, {}})->ref(0, 0)},
                                    0}),
                    SchemeError);
    // bound error: biprofile too wide
    ColoredGraph big = make_corolla({"c"}, {{"c", "c"}, {"c"}});
    CHECK_THROWS_AS((void)t->gamma({big, {t->entry({{"c"}, {"c"}})->ref(0, 0)}, 0}),
                    BoundError);
}

TEST_CASE("monoid-like prop") {
    SSetPtr x = sset_discrete(2);
    GrPropPtr p = monoid_like_prop(x);
    SSetPtr hom = p->entry({{"c"}, {"c"}});
    CHECK(hom->count(0) == 3);
    CHECK(p->entry({{"c", "c"}, {}})->empty());
    CHECK_THROWS_AS((void)p->entry({{"c", "c"}, {"c"}}), BoundError);
    AxiomCheckOptions opts;
    opts.max_graph_vertices = 2;
    opts.max_sub_vertices = 2;
    opts.max_legs = 1;
    AxiomReport rep = check_axioms(*p, opts);
    CHECK(rep.ok());
    // left projection: q1 after q0 is q1 (scan from output side)
    ColoredGraph chain = hom_chain({"c"}, "c", "c", "c");
    CHECK(p->gamma({chain, {hom->ref(0, 0), hom->ref(0, 1)}, 0}) == hom->ref(0, 1));
    CHECK(p->gamma({chain, {hom->ref(0, 0), p->unit("c")}, 0}) == hom->ref(0, 0));
}

TEST_CASE("pi0 category of fixtures") {
    // terminal properad: indiscrete one-point homs
    GrPropPtr t = terminal_prop(Scheme::Properad, {"a", "b"});
    Pi0Category pc = pi0_category(*t);
    CHECK(pc.cat.object_count() == 2);
    CHECK(pc.cat.mor_count() == 4);
    CHECK(pc.cat.isos().size() == 4);

    // endomorphism prop of a 2-element set: hom = 4 functions, isos = 2
    GrPropPtr e2 = endomorphism_prop(2);
    Pi0Category pe = pi0_category(*e2);
    CHECK(pe.cat.object_count() == 1);
    CHECK(pe.cat.mor_count() == 4);
    CHECK(pe.cat.isos().size() == 2); // identity and the swap
    CHECK(check_pi0_well_defined(*e2).ok());

    // chaotic groupoid on two objects
    GrPropPtr g = chaotic_groupoid_prop({"x", "y"});
    Pi0Category pg = pi0_category(*g);
    CHECK(pg.cat.mor_count() == 4);
    CHECK(pg.cat.isos().size() == 4);
}

TEST_CASE("morphism checks") {
    GrPropPtr e2 = endomorphism_prop(2, Scheme::Prop, 3);
    PropMorphism id = identity_morphism(e2);
    AxiomCheckOptions opts;
    opts.max_graph_vertices = 2;
    opts.max_sub_vertices = 1;
    opts.max_legs = 2;
    opts.max_level = 0;
    opts.max_cases = 20000;
    CHECK(check_morphism(id, opts).ok());

    PropMorphism idid = compose(id, id);
    CHECK(check_morphism(idid, opts).ok());
}

TEST_CASE("pi0 functor of the identity") {
    GrPropPtr e2 = endomorphism_prop(2);
    Pi0Category pc = pi0_category(*e2);
    CatFunctor F = pi0_functor(identity_morphism(e2), pc, pc);
    CHECK(F.valid());
    CHECK(is_isofibration(F));
    CHECK(is_cat_equivalence(F));
}

TEST_CASE("finite category checks") {
    // chaotic groupoid on 2 objects vs one-object inclusion
    FiniteCategory chaotic;
    int x = chaotic.add_object("x");
    int y = chaotic.add_object("y");
    int xx = chaotic.add_mor(x, x, "xx");
    int xy = chaotic.add_mor(x, y, "xy");
    int yx = chaotic.add_mor(y, x, "yx");
    int yy = chaotic.add_mor(y, y, "yy");
    chaotic.set_identity(x, xx);
    chaotic.set_identity(y, yy);
    auto pick = [&](int s, int t) { return s == x ? (t == x ? xx : xy) : (t == x ? yx : yy); };
    for (int f = 0; f < 4; ++f)
        for (int g = 0; g < 4; ++g)
            if (chaotic.mors[f].dst == chaotic.mors[g].src)
                chaotic.set_comp(g, f, pick(chaotic.mors[f].src, chaotic.mors[g].dst));
    chaotic.seal();
    CHECK(chaotic.isos().size() == 4);

    FiniteCategory one;
    int o = one.add_object("x");
    int oo = one.add_mor(o, o, "id");
    one.set_identity(o, oo);
    one.set_comp(oo, oo, oo);
    one.seal();

    CatFunctor incl;
    incl.dom = &one;
    incl.cod = &chaotic;
    incl.obj_map = {x};
    incl.mor_map = {xx};
    CHECK(incl.valid());
    CHECK(is_cat_equivalence(incl)); // chaotic 2-object groupoid is contractible
    CHECK(!is_isofibration(incl));   // xy cannot lift

    CatFunctor idf;
    idf.dom = &chaotic;
    idf.cod = &chaotic;
    idf.obj_map = {x, y};
    idf.mor_map = {xx, xy, yx, yy};
    CHECK(idf.valid());
    CHECK(is_isofibration(idf));
    CHECK(is_cat_equivalence(idf));

    // collapse of 2 discrete objects to 1 is not an equivalence
    FiniteCategory two;
    int a2 = two.add_object("a");
    int b2 = two.add_object("b");
    int ia = two.add_mor(a2, a2, "ida");
    int ib = two.add_mor(b2, b2, "idb");
    two.set_identity(a2, ia);
    two.set_identity(b2, ib);
    two.set_comp(ia, ia, ia);
    two.set_comp(ib, ib, ib);
    two.seal();
    CatFunctor collapse;
    collapse.dom = &two;
    collapse.cod = &one;
    collapse.obj_map = {o, o};
    collapse.mor_map = {oo, oo};
    CHECK(collapse.valid());
    CHECK(!is_cat_equivalence(collapse));
    // any functor into a category with no non-identity isos is an isofibration
    CHECK(is_isofibration(collapse));
}

TEST_CASE("precompose and postcompose") {
    GrPropPtr e2 = endomorphism_prop(2, Scheme::Prop, 3);
    SSetPtr hom = e2->entry({{"c"}, {"c"}});

    // plugging the unit gives the identity map
    Biprofile bp{{"c", "c"}, {"c"}};
    SSetMap pre_id = precompose_map(e2, bp, 0, e2->unit("c"), "c", "c");
    CHECK(is_isomorphism(pre_id));
    for (int i = 0; i < pre_id.dom->count(0); ++i)
        CHECK(pre_id.images[0][i] == pre_id.dom->ref(0, i));

    // plugging a bijection is a bijection on entries
    int neg = fn11(1, 0);
    SSetMap pre_neg = precompose_map(e2, bp, 0, hom->ref(0, neg), "c", "c");
    CHECK(is_isomorphism(pre_neg));
    SSetMap post_neg = postcompose_map(e2, bp, 0, hom->ref(0, neg), "c", "c");
    CHECK(is_isomorphism(post_neg));

    // plugging a constant is not injective on (c;c)
    int const0 = fn11(0, 0);
    SSetMap pre_const =
        precompose_map(e2, Biprofile{{"c"}, {"c"}}, 0, hom->ref(0, const0), "c", "c");
    CHECK(!is_isomorphism(pre_const));

    // direct function-composition oracle for precompose on (c;c):
    // (- o neg) sends f to f o neg
    SSetMap m = precompose_map(e2, Biprofile{{"c"}, {"c"}}, 0, hom->ref(0, neg), "c", "c");
    for (int f0 = 0; f0 < 2; ++f0)
        for (int f1 = 0; f1 < 2; ++f1) {
            int f = fn11(f0, f1);
            int expect = fn11(f1, f0); // f o neg
            CHECK(m.images[0][f] == hom->ref(0, expect));
        }
}
