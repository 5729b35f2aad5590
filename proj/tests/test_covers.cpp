#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pentacover/construct.hpp"
#include "pentacover/covers.hpp"
#include "pentacover/symmetry.hpp"

using namespace pentacover;

namespace {

PermGroup closed_aut(const Graph& g) {
    AutResult a = automorphism_group(g);
    PermGroup A;
    A.degree = g.vertex_count();
    A.gens = a.generators;
    return close(A);
}

} // namespace

TEST_CASE("quotient by the trivial group is the graph itself") {
    Graph g = family("i12").graph;
    PermGroup triv;
    triv.degree = g.vertex_count();
    triv.gens = {Perm::identity(g.vertex_count())};
    triv = close(triv);
    auto [q, proj] = quotient(g, triv);
    CHECK(q == g);
    for (int v = 0; v < g.vertex_count(); ++v) CHECK(proj[v] == v);
}

TEST_CASE("quotient rejects non-automorphisms") {
    Graph g = family("k6").graph;
    Graph h(6, {{0, 1}});
    PermGroup bad;
    bad.degree = 6;
    bad.gens = {Perm::from_cycles(6, {{0, 1, 2, 3, 4, 5}})};
    bad = close(bad);
    CHECK_THROWS_AS(quotient(h, bad), graph_error);
}

TEST_CASE("cgd4(1,5) covers K_{5,5} via N_4") {
    FamilyInstance fi = family("cgd4", 1, 5);
    auto N = canonical_cover_subgroup(fi);
    REQUIRE(N.has_value());
    Graph base = cover_base_graph(fi);
    CHECK(base.vertex_count() == 10);
    PermGroup F = canonical_arc_group(fi);
    CoverReport rep = verify_symmetric_cover(fi.graph, *N, base, &F);
    CHECK(rep.semiregular);
    CHECK(rep.orbit_count == 10);
    CHECK(rep.valency_preserved);
    CHECK(rep.quotient_iso_target.has_value());
    CHECK(rep.fibre_arc_transitive == std::optional<bool>(true));
    CHECK(rep.fibre_group_order == std::optional<i64>(500));
    CHECK(rep.checks_passed);
    std::string js = cover_report_json(rep);
    CHECK(js.find("\"checks_passed\": true") != std::string::npos);
    CHECK(js.find("\"orbit_count\": 10") != std::string::npos);
}

TEST_CASE("cd55 is a Z_5 cover of cd11") {
    FamilyInstance fi = family("cd", 55);
    auto N = canonical_cover_subgroup(fi);
    REQUIRE(N.has_value());
    CHECK(N->order() == 5);
    PermGroup F = canonical_arc_group(fi);
    CoverReport rep = verify_symmetric_cover(fi.graph, *N, cover_base_graph(fi), &F);
    CHECK(rep.checks_passed);
    CHECK(rep.quotient.vertex_count() == 22);
}

TEST_CASE("K_6 admits no pentavalent quotient") {
    Graph k6 = family("k6").graph;
    PermGroup A = closed_aut(k6);
    PermGroup K;
    K.degree = 6;
    K.gens = {Perm::from_cycles(6, {{0, 1}, {2, 3}, {4, 5}})};
    K = close(K);
    CoverReport rep = verify_regular_cover(k6, K, k6);
    CHECK(!rep.checks_passed);
    (void)A;
}

TEST_CASE("i12x2 is a symmetric D_2-cover of K_6 via the enumerated group") {
    FamilyInstance fi = family("i12x2");
    Graph k6 = family("k6").graph;
    PermGroup A = closed_aut(fi.graph);
    auto K = find_dihedral_cover_group(fi.graph, A, 4, k6);
    REQUIRE(K.has_value());
    CHECK(identify(fingerprint(*K)) == "D_2");
    CHECK(normalizer(A, *K).order() == A.order()); // the D_2 is normal in Aut
    // enumerated-normalizer path of verify_symmetric_cover
    CoverReport rep = verify_symmetric_cover(fi.graph, *K, k6);
    CHECK(rep.checks_passed);
    CHECK(rep.fibre_arc_transitive == std::optional<bool>(true));
    CHECK(rep.quotient_iso_target.has_value());
}

TEST_CASE("k66-6k2 and i12 are symmetric Z_2-covers of K_6") {
    Graph k6 = family("k6").graph;
    for (const char* name : {"k66-6k2", "i12"}) {
        Graph g = family(name).graph;
        PermGroup A = closed_aut(g);
        auto K = find_cover_group(g, A, 2, k6);
        REQUIRE(K.has_value());
        CHECK(identify(fingerprint(*K)) == "Z_2");
        PermGroup F = normalizer(A, *K);
        CoverReport rep = verify_symmetric_cover(g, *K, k6, &F);
        CHECK(rep.checks_passed);
        CHECK(rep.fibre_arc_transitive == std::optional<bool>(true));
    }
}

TEST_CASE("g48 covers K_6 with quaternion covering group, never dihedral") {
    FamilyInstance fi = family("g48");
    Graph k6 = family("k6").graph;
    PermGroup A = closed_aut(fi.graph);
    CHECK(!find_dihedral_cover_group(fi.graph, A, 8, k6).has_value());
    auto K = find_cover_group(fi.graph, A, 8, k6);
    REQUIRE(K.has_value());
    CHECK(identify(fingerprint(*K)) == "Q_8");
    CoverReport rep = verify_symmetric_cover(fi.graph, *K, k6, nullptr);
    CHECK(rep.checks_passed);
    CHECK(rep.fibre_arc_transitive == std::optional<bool>(true));
    CHECK(rep.fibre_group_order == std::optional<i64>(960));
}

TEST_CASE("quotient valency can only drop, and equality implies the cover conditions") {
    // a quotient of i12 by a non-semiregular subgroup loses valency
    Graph i12 = family("i12").graph;
    PermGroup A = closed_aut(i12);
    // stabilizer of vertex 0 inside Aut(i12): contains rotations fixing 0
    AutResult a = automorphism_group(i12);
    PermGroup st = vertex_stabilizer(i12, a, a.base_vertex);
    auto [q, proj] = quotient(i12, st);
    (void)proj;
    auto vq = regular_valency(q);
    CHECK((!vq.has_value() || *vq < 5));
}

TEST_CASE("edge fibres partition the cover's edges") {
    FamilyInstance fi = family("cgd4", 1, 5);
    auto N = canonical_cover_subgroup(fi);
    REQUIRE(N.has_value());
    auto [q, proj] = quotient(fi.graph, *N);
    // every cover edge projects to a base edge (never inside a fibre),
    // and each base edge receives |K| cover edges
    std::map<std::pair<int, int>, i64> fibre_sizes;
    for (auto [u, v] : fi.graph.edges()) {
        int a = proj[u], b = proj[v];
        REQUIRE(a != b);
        CHECK(q.adjacent(a, b));
        fibre_sizes[{std::min(a, b), std::max(a, b)}]++;
    }
    for (auto [e, c] : fibre_sizes) CHECK(c == N->order());
    CHECK(static_cast<i64>(fibre_sizes.size()) == q.edge_count());
}
