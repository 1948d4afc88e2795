#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "betti_oracle.hpp"
#include "graphs.hpp"
#include "oracles.hpp"

using namespace propcalc;

namespace {

ColoredGraph chain(int length, const Color& c = "c") {
    // length vertices of profile (c;c) wired in a row
    ColoredGraph g;
    g.colors = {c};
    g.vertices.resize(length);
    // input leg
    g.edges.push_back({c, PortRef{}, PortRef{0, 0}});
    g.vertices[0].inputs.push_back(0);
    g.graph_inputs.push_back(0);
    for (int i = 0; i + 1 < length; ++i) {
        int id = static_cast<int>(g.edges.size());
        g.edges.push_back({c, PortRef{i, 0}, PortRef{i + 1, 0}});
        g.vertices[i].outputs.push_back(id);
        g.vertices[i + 1].inputs.push_back(id);
    }
    int out = static_cast<int>(g.edges.size());
    g.edges.push_back({c, PortRef{length - 1, 0}, PortRef{}});
    g.vertices[length - 1].outputs.push_back(out);
    g.graph_outputs.push_back(out);
    return g;
}

// two vertices joined by a pair of parallel internal edges, no legs
ColoredGraph theta_graph() {
    ColoredGraph g;
    g.colors = {"c"};
    g.vertices.resize(2);
    g.edges.push_back({"c", PortRef{0, 0}, PortRef{1, 0}});
    g.edges.push_back({"c", PortRef{0, 1}, PortRef{1, 1}});
    g.vertices[0].outputs = {0, 1};
    g.vertices[1].inputs = {0, 1};
    return g;
}

ColoredGraph disjoint_corollas(int k) {
    ColoredGraph g;
    g.colors = {"c"};
    g.vertices.resize(k);
    for (int v = 0; v < k; ++v) {
        int in = static_cast<int>(g.edges.size());
        g.edges.push_back({"c", PortRef{}, PortRef{v, 0}});
        g.vertices[v].inputs.push_back(in);
        g.graph_inputs.push_back(in);
        int out = static_cast<int>(g.edges.size());
        g.edges.push_back({"c", PortRef{v, 0}, PortRef{}});
        g.vertices[v].outputs.push_back(out);
        g.graph_outputs.push_back(out);
    }
    return g;
}

} // namespace

TEST_CASE("standard corolla") {
    ColoredGraph g = make_corolla({{"c"}, {"d"}});
    CHECK(validate(g).ok());
    CHECK(g.vertex_count() == 1);
    CHECK(g.edge_count() == 2);
    CHECK(g.edges[g.graph_inputs[0]].color == "c");
    CHECK(g.edges[g.graph_outputs[0]].color == "d");
    CHECK(g.biprofile() == Biprofile{{"c"}, {"d"}});
    CHECK(g.vertex_profile(0) == Biprofile{{"c"}, {"d"}});

    ColoredGraph e = make_corolla({{}, {}});
    CHECK(validate(e).ok());
    CHECK(e.vertex_count() == 1);
    CHECK(e.edge_count() == 0);
    CHECK(e.graph_inputs.empty());
    CHECK(e.graph_outputs.empty());

    CHECK(betti(make_corolla({{"c", "c"}, {"c"}})) == Betti{0, 0});
}

TEST_CASE("edge graph") {
    ColoredGraph g = make_edge("c");
    CHECK(validate(g).ok());
    CHECK(g.vertex_count() == 0);
    CHECK(g.edge_count() == 1);
    CHECK(g.graph_inputs == std::vector<int>{0});
    CHECK(g.graph_outputs == std::vector<int>{0});
    CHECK(betti(g) == Betti{0, 0});
    CHECK(canonical_code(g) == canonical_code(make_edge("c")));
}

TEST_CASE("validation catches broken graphs") {
    CHECK(validate(make_corolla({{"c"}, {"d"}})).ok());

    // directed 2-cycle
    ColoredGraph g;
    g.colors = {"c"};
    g.vertices.resize(2);
    g.edges.push_back({"c", PortRef{0, 0}, PortRef{1, 0}});
    g.edges.push_back({"c", PortRef{1, 0}, PortRef{0, 0}});
    g.vertices[0].outputs = {0};
    g.vertices[0].inputs = {1};
    g.vertices[1].inputs = {0};
    g.vertices[1].outputs = {1};
    auto rep = validate(g);
    CHECK(!rep.ok());
    bool has_wheel = false;
    for (const auto& i : rep.issues)
        if (i.code == "wheel") has_wheel = true;
    CHECK(has_wheel);

    // ord_i omits a dangling edge
    ColoredGraph h = make_edge("c");
    h.graph_inputs.clear();
    auto rep2 = validate(h);
    CHECK(!rep2.ok());
    bool has_ordering = false;
    for (const auto& i : rep2.issues)
        if (i.code == "ordering") has_ordering = true;
    CHECK(has_ordering);
}

TEST_CASE("connectivity") {
    ColoredGraph c = make_corolla({{"c"}, {"d"}});
    CHECK(is_connected(c));
    CHECK(is_simply_connected(c));

    ColoredGraph two = disjoint_corollas(2);
    CHECK(!is_connected(two));
    CHECK(!is_simply_connected(two));

    ColoredGraph th = theta_graph();
    CHECK(validate(th).ok());
    CHECK(is_connected(th));
    CHECK(!is_simply_connected(th));
    CHECK(oracles::brute_force_has_cycle(th));
    CHECK(!oracles::brute_force_has_cycle(c));

    CHECK(!is_connected(make_empty({"c"})));
}

TEST_CASE("betti numbers") {
    CHECK(betti(make_corolla({{"c"}, {"d"}})) == Betti{0, 0});
    CHECK(betti(theta_graph()) == Betti{0, 1});
    for (int k = 1; k <= 4; ++k)
        CHECK(betti(disjoint_corollas(k)) ==
              Betti{static_cast<unsigned>(k - 1), 0});
    CHECK(betti(make_empty({"c"})) == Betti{0, 0});

    // agreement with the homology oracle on the named fixtures
    for (const ColoredGraph& g :
         {make_corolla({{"c"}, {"d"}}), theta_graph(), disjoint_corollas(3),
          make_edge("c"), chain(3)})
        CHECK(betti(g) == betti_via_homology(g));
}

TEST_CASE("find_iso") {
    ColoredGraph c1 = make_corolla({{"c"}, {"d"}});
    auto id_strict = find_iso(c1, c1, IsoFlavor::Strict);
    auto id_weak = find_iso(c1, c1, IsoFlavor::Weak);
    REQUIRE(id_strict.has_value());
    REQUIRE(id_weak.has_value());
    CHECK(check_iso(c1, c1, *id_strict));
    CHECK(check_iso(c1, c1, *id_weak));

    ColoredGraph c2 = make_corolla({{"d"}, {"c"}});
    CHECK(!find_iso(c1, c2, IsoFlavor::Strict).has_value());
    CHECK(!find_iso(c1, c2, IsoFlavor::Weak).has_value());
    CHECK(!oracles::brute_force_iso_exists(c1, c2, IsoFlavor::Weak));

    // (2;1)-corollas with swapped input order: weak yes, strict no
    ColoredGraph a = make_corolla({{"x", "y"}, {"z"}});
    ColoredGraph b = make_corolla({{"y", "x"}, {"z"}});
    CHECK(find_iso(a, b, IsoFlavor::Weak).has_value());
    CHECK(!find_iso(a, b, IsoFlavor::Strict).has_value());
    CHECK(oracles::brute_force_iso_exists(a, b, IsoFlavor::Weak));
    CHECK(!oracles::brute_force_iso_exists(a, b, IsoFlavor::Strict));
}

TEST_CASE("canonical codes") {
    ColoredGraph c = make_corolla({{"c"}, {"d"}});
    CHECK(canonical_code(c) != canonical_code(make_edge("c")));

    // all strict relabelings of a 3-vertex chain produce one code
    ColoredGraph g = chain(3);
    std::set<CanonicalCode> codes;
    std::vector<int> vperm(g.vertex_count());
    std::iota(vperm.begin(), vperm.end(), 0);
    do {
        std::vector<int> eperm(g.edge_count());
        std::iota(eperm.begin(), eperm.end(), 0);
        do {
            ColoredGraph r = relabel(g, vperm, eperm);
            if (!validate(r).ok()) continue;
            codes.insert(canonical_code(r));
        } while (std::next_permutation(eperm.begin(), eperm.end()));
    } while (std::next_permutation(vperm.begin(), vperm.end()));
    CHECK(codes.size() == 1);
    CHECK(*codes.begin() == canonical_code(g));
}

TEST_CASE("canonical codes agree with strict iso search on a corpus") {
    EnumerationParams p;
    p.scheme = Scheme::Prop;
    p.colors = {"c"};
    p.biprofile = {{"c"}, {"c"}};
    p.max_vertices = 3;
    p.max_vertex_in = 2;
    p.max_vertex_out = 2;
    auto graphs = enumerate_graphs(p);
    CHECK(graphs.size() >= 2);
    // enumeration promises pairwise non-isomorphic representatives
    for (size_t i = 0; i < graphs.size(); ++i) {
        for (size_t j = i + 1; j < graphs.size(); ++j) {
            CHECK(!find_iso(graphs[i], graphs[j], IsoFlavor::Strict).has_value());
        }
        auto self = find_iso(graphs[i], graphs[i], IsoFlavor::Strict);
        REQUIRE(self.has_value());
        CHECK(check_iso(graphs[i], graphs[i], *self));
    }
    // brute-force cross-check on the smaller ones
    for (size_t i = 0; i < graphs.size(); ++i)
        for (size_t j = i + 1; j < graphs.size(); ++j)
            if (graphs[i].edge_count() <= 4 && graphs[j].edge_count() <= 4)
                CHECK(!oracles::brute_force_iso_exists(graphs[i], graphs[j],
                                                       IsoFlavor::Strict));
}

TEST_CASE("enumeration") {
    EnumerationParams p;
    p.scheme = Scheme::Dioperad;
    p.colors = {"c"};
    p.biprofile = {{"c"}, {"c"}};
    p.max_vertices = 1;
    p.max_vertex_in = 1;
    p.max_vertex_out = 1;
    auto graphs = enumerate_graphs(p);
    CHECK(graphs.size() == 2); // edge graph and the (1;1)-corolla

    p.max_vertices = 0;
    CHECK(enumerate_graphs(p).size() == 1); // edge graph only

    // prop-level disjoint pair of (0;0)-vertices vs connected enumeration
    EnumerationParams q;
    q.colors = {"c"};
    q.biprofile = {{}, {}};
    q.max_vertices = 2;
    q.max_vertex_in = 0;
    q.max_vertex_out = 0;
    q.scheme = Scheme::Prop;
    auto props = enumerate_graphs(q);
    q.scheme = Scheme::Properad;
    auto connected = enumerate_graphs(q);
    CHECK(props.size() == 3);     // empty, one vertex, two vertices
    CHECK(connected.size() == 1); // one vertex
    bool has_pair = false;
    for (const auto& g : props)
        if (g.vertex_count() == 2) has_pair = true;
    CHECK(has_pair);
}

TEST_CASE("betti invariants on an enumerated corpus") {
    // b0 = 0 iff connected (nonempty); if connected, b1 = 0 iff simply
    // connected; whisker deletion never changes betti; oracle agreement.
    std::vector<ColoredGraph> corpus;
    for (auto scheme : {Scheme::Prop}) {
        for (int n = 0; n <= 2; ++n) {
            for (int m = 0; m <= 2; ++m) {
                EnumerationParams p;
                p.scheme = scheme;
                p.colors = {"c"};
                p.biprofile = {std::vector<Color>(n, "c"), std::vector<Color>(m, "c")};
                p.max_vertices = 2;
                p.max_vertex_in = 2;
                p.max_vertex_out = 2;
                auto gs = enumerate_graphs(p);
                corpus.insert(corpus.end(), gs.begin(), gs.end());
            }
        }
    }
    CHECK(corpus.size() > 50);
    for (const auto& g : corpus) {
        Betti b = betti(g);
        CHECK(b == betti_via_homology(g));
        if (g.vertex_count() > 0 || g.edge_count() > 0) {
            CHECK((b.b0 == 0) == is_connected(g));
            if (is_connected(g)) CHECK((b.b1 == 0) == is_simply_connected(g));
            CHECK((b.b1 == 0) == !oracles::brute_force_has_cycle(g));
        }
        for (int e = 0; e < g.edge_count(); ++e) {
            auto dropped = oracles::drop_leg(g, e);
            if (!dropped) continue;
            REQUIRE(validate(*dropped).ok());
            CHECK(betti(*dropped) == b);
        }
    }
}

TEST_CASE("canonical code is relabeling-invariant across the corpus") {
    EnumerationParams p;
    p.scheme = Scheme::Prop;
    p.colors = {"c"};
    p.biprofile = {{"c"}, {}};
    p.max_vertices = 3;
    p.max_vertex_in = 1;
    p.max_vertex_out = 1;
    for (const auto& g : enumerate_graphs(p)) {
        CanonicalCode base = canonical_code(g);
        std::vector<int> vperm(g.vertex_count());
        std::iota(vperm.begin(), vperm.end(), 0);
        std::vector<int> eperm(g.edge_count());
        std::iota(eperm.begin(), eperm.end(), 0);
        // a couple of deterministic relabelings
        std::rotate(vperm.begin(), vperm.begin() + (vperm.size() > 1 ? 1 : 0), vperm.end());
        std::rotate(eperm.begin(), eperm.begin() + (eperm.size() > 1 ? 1 : 0), eperm.end());
        ColoredGraph r = relabel(g, vperm, eperm);
        REQUIRE(validate(r).ok());
        CHECK(canonical_code(r) == base);
    }
}

TEST_CASE("iso search bound") {
    EnumerationParams p;
    CHECK_THROWS_AS(
        (void)find_iso(chain(9), chain(9), IsoFlavor::Strict, 8), BoundError);
    (void)p;
}
