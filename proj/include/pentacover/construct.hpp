#pragma once

// Builders for every named graph of the classification: general Cayley
// and bi-Cayley constructors plus the parameterized family catalog with
// attached expected metadata (vertex count, full automorphism order,
// stabilizer label, canonical cover).
//
// Family keys:
//   cgd1 cgd2 cgd3   Cay(Dih(Z_m x Z_{p^e} x Z_p), T_i(r,lambda)), e >= 2
//   cgd4 cgd5        e = 1 variants with quadratic / quartic lambda
//   cd               Cay(D_m, 5 reflections), m = 5, 11 or >= 31
//   k6 k55 k66-6k2 i12 cgd53 i12x2 g48 g60 g120   fixed graphs

#include <optional>
#include <string>
#include <vector>

#include "pentacover/abelian.hpp"
#include "pentacover/graph.hpp"
#include "pentacover/perm.hpp"

namespace pentacover {

struct family_error : std::runtime_error {
    explicit family_error(const std::string& what) : std::runtime_error(what) {}
};

/// Validated Cayley connection set over a generalized dihedral group.
struct ConnectionSet {
    std::vector<GDihElement> elems; // order preserved: alpha 5-cycles it

    /// Checks 1 not in S, S = S^{-1}; throws naming the violated condition.
    static ConnectionSet checked(const GDihGroup& G, std::vector<GDihElement> elems);
};

/// Cayley graph on Dih-type groups: vertex g at rank(g), edges {g, sg}.
/// Connectivity must equal <S> = G; a mismatch is an internal error.
Graph cayley(const GDihGroup& G, const ConnectionSet& S, i64 cap = 20'000);

/// Cayley graph on an abelian group (circulants and friends).
Graph cayley(const AbelianGroup& H, const std::vector<AVec>& S, i64 cap = 20'000);

/// Cayley graph on an explicitly enumerated permutation group.
/// Elements are sorted lexicographically by image vector; edges {g, sg}.
Graph cayley_on_perm_group(const std::vector<Perm>& generators, const std::vector<Perm>& S,
                           i64 cap = 20'000);

/// Bi-Cayley graph: h_0 at rank(h), h_1 at |H| + rank(h); edges
/// {h_0,g_0} for g-h in R, {h_1,g_1} for g-h in L, {h_0,g_1} for g-h in S.
Graph bicayley(const AbelianGroup& H, const std::vector<AVec>& R, const std::vector<AVec>& L,
               const std::vector<AVec>& S);

struct ExpectedMeta {
    i64 vertices = 0;
    i64 aut_order = 0;
    std::string stabilizer; // label per the fingerprint catalog
    int s = 0;              // s-transitivity
    std::string cover;      // e.g. "Z_121-cover of CD_11", "none"
};

struct FamilyInstance {
    std::string family;
    i64 m = 0, p = 0, e = 0;
    i64 r = -1, lambda = -1;
    std::optional<GDihGroup> group;  // set for cgd*/cd/i12x2/g48/cgd53
    std::vector<GDihElement> conn;   // ordered connection set where applicable
    Graph graph;
    ExpectedMeta expected;

    bool is_cgd() const { return family.rfind("cgd", 0) == 0 && family.size() == 4; }
};

/// Construct a family member.  Side conditions are validated and a
/// violation raises family_error naming the condition.  Canonical
/// parameters r, lambda are the smallest valid residues unless
/// overridden.
FamilyInstance family(const std::string& name, i64 m = 0, i64 p = 0, i64 e = 0,
                      std::optional<i64> r_override = std::nullopt,
                      std::optional<i64> lambda_override = std::nullopt);

/// All family keys with their side conditions, for `catalog`.
struct FamilyDescription {
    std::string name;
    std::string parameters;
    std::string conditions;
    std::string aut_order;
};
const std::vector<FamilyDescription>& family_catalog();

/// <R(G), alpha_i> (plus beta when the family is cgd4 with m in {1,5}),
/// every generator verified to be a graph automorphism.  The group's
/// exact order is established from the verified relations.
/// with_beta = false always gives the order-5|G| group <R(G), alpha_i>,
/// the group in which the canonical cover subgroups are normal (beta
/// need not normalize N_4).
PermGroup canonical_arc_group(const FamilyInstance& fi, bool with_beta = true);

/// The explicit normal cyclic subgroup N_i of the arc group (for cgd
/// families) or Z_{m/q} inside <R(a)> (for cd with composite m),
/// verified cyclic of the right order, semiregular, and normal in
/// canonical_arc_group.  Returns nullopt for cgd4 with 5 | (p+1), where
/// no such subgroup exists.
std::optional<PermGroup> canonical_cover_subgroup(const FamilyInstance& fi);

/// The order-2p base graph this family covers: CD_p, or K_{5,5} when
/// p = 5, or K_6 for the sporadic dihedral covers.
Graph cover_base_graph(const FamilyInstance& fi);

/// The ordered cross-connection set of the bi-Cayley form over H:
/// [0, s1, s2, s3, s4] with s_j = -(vector of conn[j]).
std::vector<AVec> bicayley_connection(const FamilyInstance& fi);

/// alpha_i restricted to H, as an abelian automorphism.
AbelianAut alpha_restriction(const FamilyInstance& fi);

/// Checks on the bi-Cayley form of a cgd instance: o(s1) = m p^e,
/// p | o(s2), <s1,s2> = H, and alpha maps s1->s2-s1, s2->s3-s1,
/// s3->s4-s1, s4->-s1.
struct BiCayleyStructureCheck {
    bool order_a = false;
    bool p_divides_order_b = false;
    bool a_b_generate = false;
    bool eq2 = false;
    bool all() const { return order_a && p_divides_order_b && a_b_generate && eq2; }
};
BiCayleyStructureCheck check_bicayley_structure(const FamilyInstance& fi);

/// The two hexagon witnesses on a cgd instance, vertex ranks in cycle
/// order (family-dependent form).
std::vector<int> hexagon_witness(const FamilyInstance& fi);

} // namespace pentacover
