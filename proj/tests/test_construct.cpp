#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pentacover/construct.hpp"
#include "pentacover/symmetry.hpp"

using namespace pentacover;

TEST_CASE("cayley basics") {
    Graph c6 = cayley(AbelianGroup({6}), {{1}, {5}});
    CHECK(regular_valency(c6) == 2);
    CHECK(girth(c6) == 6);
    CHECK(is_connected(c6));
    CHECK_THROWS_WITH_AS(cayley(AbelianGroup({6}), {{0}}), doctest::Contains("identity"),
                         family_error);
    CHECK_THROWS_WITH_AS(cayley(AbelianGroup({6}), {{1}}), doctest::Contains("inverse"),
                         family_error);

    // connection set validation on the dihedral side
    GDihGroup d5{AbelianGroup({5})};
    CHECK_THROWS_WITH_AS(ConnectionSet::checked(d5, {d5.identity()}),
                         doctest::Contains("identity"), family_error);
    CHECK_THROWS_WITH_AS(ConnectionSet::checked(d5, {d5.make({1}, 0)}),
                         doctest::Contains("inverse"), family_error);
}

TEST_CASE("cd family: K_{5,5} at m=5, PGL(2,11) order at m=11") {
    FamilyInstance cd5 = family("cd", 5);
    CHECK(cd5.graph.vertex_count() == 10);
    CHECK(are_isomorphic(cd5.graph, family("k55").graph).has_value());

    FamilyInstance cd11 = family("cd", 11);
    CHECK(cd11.graph.vertex_count() == 22);
    CHECK(cd11.expected.aut_order == 1320);
    CHECK(is_connected(cd11.graph));
}

TEST_CASE("cd family side conditions") {
    CHECK_THROWS_WITH_AS(family("cd", 7), doctest::Contains("no root"), family_error);
    CHECK_THROWS_WITH_AS(family("cd", 25), doctest::Contains("no root"), family_error);
    FamilyInstance cd31 = family("cd", 31);
    CHECK(cd31.r == 2);
    CHECK(cd31.expected.aut_order == 310);
    FamilyInstance cd55 = family("cd", 55);
    CHECK(cd55.expected.cover == "Z_5-cover of CD_11");
}

TEST_CASE("sporadic graphs have the right shape") {
    CHECK(family("k6").graph.vertex_count() == 6);
    CHECK(family("i12").graph.vertex_count() == 12);
    CHECK(girth(family("i12").graph) == 3);
    CHECK(family("k66-6k2").graph.vertex_count() == 12);
    CHECK(girth(family("k66-6k2").graph) == 4);
    CHECK(family("i12x2").graph.vertex_count() == 24);
    CHECK(family("g48").graph.vertex_count() == 48);
    CHECK(family("g60").graph.vertex_count() == 60);
    CHECK(family("g120").graph.vertex_count() == 120);
    CHECK(family("cgd53").graph.vertex_count() == 250);
    CHECK_THROWS_AS(family("k6", 3), family_error);
    CHECK_THROWS_AS(family("nosuch"), family_error);
}

TEST_CASE("cgd side conditions name the violated requirement") {
    CHECK_THROWS_WITH_AS(family("cgd1", 1, 7, 2), doctest::Contains("5 | (p-1)"), family_error);
    CHECK_THROWS_WITH_AS(family("cgd1", 1, 11, 1), doctest::Contains("e >= 2"), family_error);
    CHECK_THROWS_WITH_AS(family("cgd4", 1, 7), doctest::Contains("p = 5 or 5 | (p+-1)"),
                         family_error);
    CHECK_THROWS_WITH_AS(family("cgd5", 1, 19), doctest::Contains("5 | (p-1)"), family_error);
    CHECK_THROWS_WITH_AS(family("cgd1", 11, 11, 2), doctest::Contains("(m, p) = 1"), family_error);
    CHECK_THROWS_WITH_AS(family("cgd4", 3, 11), doctest::Contains("no root"), family_error);
    CHECK_THROWS_WITH_AS(family("cgd1", 1, 12, 2), doctest::Contains("not prime"), family_error);
}

TEST_CASE("cgd instances: vertex counts, canonical parameters") {
    FamilyInstance g1 = family("cgd1", 1, 11, 2);
    CHECK(g1.graph.vertex_count() == 2662);
    CHECK(g1.r == 0);
    CHECK(g1.lambda == 3); // smallest order-5 unit mod 121
    CHECK(g1.expected.aut_order == 13310);

    FamilyInstance g4 = family("cgd4", 1, 5);
    CHECK(g4.graph.vertex_count() == 50);
    CHECK(g4.lambda == 0);
    CHECK(g4.expected.aut_order == 4000);

    FamilyInstance g4b = family("cgd4", 1, 11);
    CHECK(g4b.lambda == 4); // smallest square root of 5 mod 11
    CHECK(g4b.expected.aut_order == 2420);

    FamilyInstance g5 = family("cgd5", 1, 11);
    CHECK(g5.lambda == 3); // smallest root of x^4+10x^2+5 mod 11
    CHECK(g5.expected.aut_order == 1210);

    // m > 1 variant exercises the a-coordinate
    FamilyInstance g4m = family("cgd4", 11, 19);
    CHECK(g4m.graph.vertex_count() == 2 * 11 * 19 * 19);
    CHECK(g4m.expected.aut_order == 10 * 11 * 19 * 19);
}

TEST_CASE("alpha_i is a graph automorphism cycling the connection set") {
    for (auto [name, m, p, e] : {std::tuple<const char*, i64, i64, i64>{"cgd1", 1, 11, 2},
                                 {"cgd2", 1, 11, 2},
                                 {"cgd3", 1, 11, 2},
                                 {"cgd4", 1, 5, 0},
                                 {"cgd4", 1, 11, 0},
                                 {"cgd5", 1, 11, 0}}) {
        CAPTURE(name);
        FamilyInstance fi = family(name, m, p, e);
        PermGroup arc = canonical_arc_group(fi);
        // generators are [R(gens), alpha(, beta)]; alpha must 5-cycle the
        // neighbors of the identity vertex in listing order
        size_t n_regular = 1; // the flip
        for (i64 d : fi.group->base().moduli())
            if (d > 1) ++n_regular;
        const Perm& alpha = arc.gens[n_regular];
        for (int j = 0; j < 5; ++j) {
            int from = static_cast<int>(fi.group->rank_of(fi.conn[j]));
            int to = static_cast<int>(fi.group->rank_of(fi.conn[(j + 1) % 5]));
            CHECK(alpha[from] == to);
        }
        CHECK(arc.order() == fi.group->order() * ((fi.family == "cgd4" && (m == 1 || m == 5)) ? 10 : 5));
    }
}

TEST_CASE("cd arc group") {
    FamilyInstance cd11 = family("cd", 11);
    PermGroup arc = canonical_arc_group(cd11);
    CHECK(arc.order() == 110);
    FamilyInstance k6 = family("k6");
    CHECK_THROWS_AS(canonical_arc_group(k6), family_error);
}

TEST_CASE("beta extends the arc group at m = 5 as well") {
    FamilyInstance fi = family("cgd4", 5, 11);
    CHECK(fi.graph.vertex_count() == 1210);
    CHECK(canonical_arc_group(fi).order() == 12100);
    CHECK(canonical_arc_group(fi, false).order() == 6050);
}

TEST_CASE("canonical cover subgroups verify") {
    FamilyInstance g4 = family("cgd4", 1, 5);
    auto n4 = canonical_cover_subgroup(g4);
    REQUIRE(n4.has_value());
    CHECK(n4->order() == 5);

    FamilyInstance g5 = family("cgd5", 1, 11);
    auto n5 = canonical_cover_subgroup(g5);
    REQUIRE(n5.has_value());
    CHECK(n5->order() == 11);

    FamilyInstance g4b = family("cgd4", 1, 11);
    auto n4b = canonical_cover_subgroup(g4b);
    REQUIRE(n4b.has_value());
    CHECK(n4b->order() == 11);

    // 5 | (p+1): the quartic has no root and the instance is not a cover
    FamilyInstance g4c = family("cgd4", 1, 19);
    CHECK(!canonical_cover_subgroup(g4c).has_value());

    FamilyInstance cd55 = family("cd", 55);
    auto n55 = canonical_cover_subgroup(cd55);
    REQUIRE(n55.has_value());
    CHECK(n55->order() == 5);
    CHECK_THROWS_AS(canonical_cover_subgroup(family("cd", 11)), family_error);
}

TEST_CASE("N_1 for cgd1(1,11,2) is cyclic of order 121 and normal in the arc group") {
    FamilyInstance g1 = family("cgd1", 1, 11, 2);
    auto n1 = canonical_cover_subgroup(g1); // throws unless cyclic+normal+semiregular
    REQUIRE(n1.has_value());
    CHECK(n1->order() == 121);
    CHECK(is_semiregular(*n1));
}

TEST_CASE("bicayley constructor") {
    AbelianGroup z6({6});
    Graph c12 = bicayley(z6, {}, {}, {{0}, {1}});
    CHECK(regular_valency(c12) == 2);
    CHECK(girth(c12) == 12);

    AbelianGroup z5({5});
    std::vector<AVec> all;
    for (i64 x = 0; x < 5; ++x) all.push_back({x});
    Graph k55 = bicayley(z5, {}, {}, all);
    CHECK(k55 == family("k55").graph);

    CHECK_THROWS_WITH_AS(bicayley(z6, {{0}}, {}, {{1}}), doctest::Contains("identity"),
                         family_error);
    CHECK_THROWS_WITH_AS(bicayley(z6, {{1}}, {}, {{0}}), doctest::Contains("inverse"),
                         family_error);
}

TEST_CASE("bi-Cayley form of a cgd instance is bipartite with the two H-orbits as parts") {
    FamilyInstance fi = family("cgd4", 1, 5);
    Graph bc = bicayley(fi.group->base(), {}, {}, bicayley_connection(fi));
    auto col = is_bipartite(bc);
    REQUIRE(col.has_value());
    i64 n = fi.group->base().order();
    for (i64 v = 0; v < n; ++v) {
        CHECK((*col)[v] == (*col)[0]);
        CHECK((*col)[n + v] != (*col)[0]);
    }
}

TEST_CASE("observation and hexagons across cgd instances") {
    for (auto [name, m, p, e] : {std::tuple<const char*, i64, i64, i64>{"cgd1", 1, 11, 2},
                                 {"cgd4", 1, 5, 0},
                                 {"cgd5", 1, 11, 0},
                                 {"cgd4", 11, 19, 0}}) {
        CAPTURE(name);
        FamilyInstance fi = family(name, m, p, e);
        auto chk = check_bicayley_structure(fi);
        CHECK(chk.order_a);
        CHECK(chk.p_divides_order_b);
        CHECK(chk.a_b_generate);
        CHECK(chk.eq2);
        CHECK(contains_cycle(fi.graph, hexagon_witness(fi)));
    }
}

TEST_CASE("a large composite-m instance constructs and verifies structurally") {
    FamilyInstance fi = family("cgd1", 5, 11, 2);
    CHECK(fi.graph.vertex_count() == 13310);
    CHECK(contains_cycle(fi.graph, hexagon_witness(fi)));
    CHECK(check_bicayley_structure(fi).all());
    auto N = canonical_cover_subgroup(fi);
    REQUIRE(N.has_value());
    CHECK(N->order() == 605);
}

TEST_CASE("cd instances agree with their bi-Cayley forms") {
    for (i64 m : {11, 55}) {
        FamilyInstance fi = family("cd", m);
        Graph bc = bicayley(fi.group->base(), {}, {}, bicayley_connection(fi));
        CHECK(are_isomorphic(bc, fi.graph).has_value());
    }
}

TEST_CASE("lambda choice does not change the isomorphism class (desk instances)") {
    FamilyInstance a = family("cgd5", 1, 11, 0, std::nullopt, 3);
    FamilyInstance b = family("cgd5", 1, 11, 0, std::nullopt, 5);
    CHECK(are_isomorphic(a.graph, b.graph).has_value());
    FamilyInstance c = family("cgd4", 1, 11, 0, std::nullopt, 4);
    FamilyInstance d = family("cgd4", 1, 11, 0, std::nullopt, 7);
    CHECK(are_isomorphic(c.graph, d.graph).has_value());
}

TEST_CASE("override of canonical roots") {
    FamilyInstance a = family("cd", 31, 0, 0, 4);
    CHECK(a.r == 4);
    CHECK_THROWS_WITH_AS(family("cd", 31, 0, 0, 3), doctest::Contains("not a root"), family_error);
    FamilyInstance b = family("cgd4", 1, 11, 0, std::nullopt, 7);
    CHECK(b.lambda == 7);
    CHECK_THROWS_AS(family("cgd4", 1, 11, 0, std::nullopt, 5), family_error);
}

TEST_CASE("family catalog lists every key") {
    CHECK(family_catalog().size() == 15);
}
