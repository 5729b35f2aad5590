#pragma once

// The search engine: graph automorphism groups by individualization-
// refinement backtracking, isomorphism testing with certified
// exhaustion, transitivity analysis, and the bi-Cayley normalizer
// machinery.

#include <optional>
#include <vector>

#include "pentacover/abelian.hpp"
#include "pentacover/graph.hpp"
#include "pentacover/perm.hpp"

namespace pentacover {

struct search_budget_error : graph_error {
    explicit search_budget_error(const std::string& what) : graph_error(what) {}
};

struct SearchBudget {
    i64 max_nodes = 100'000'000;
};

/// Edge-by-edge check that p maps g onto itself.
bool is_automorphism(const Graph& g, const Perm& p);
/// Edge-by-edge check that p maps g1 onto g2.
bool is_isomorphism(const Graph& g1, const Graph& g2, const Perm& p);

struct AutResult {
    std::vector<Perm> generators;     // verified edge-preserving
    i64 order = 1;                    // exact, by orbit-stabilizer recursion
    int base_vertex = 0;
    std::vector<Perm> stabilizer_gens; // generators fixing base_vertex
};

/// Exact automorphism group of a connected graph (N <= ~5000).
AutResult automorphism_group(const Graph& g, const SearchBudget& budget = {});

/// An explicit isomorphism, or certified absence by search exhaustion.
std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2,
                                   const SearchBudget& budget = {});

/// One orbit on ordered adjacent pairs, by orbit BFS over generator
/// words (no closure needed).
bool is_arc_transitive(const Graph& g, const AutResult& A);

/// Largest s with a single orbit on s-arcs; requires arc-transitive
/// valency-5 input.  Cross-checked against the admissible stabilizer
/// orders for that s.
int s_transitivity(const Graph& g, const AutResult& A);

/// Stabilizer of `v` in the generated group, closed (tiny for the
/// graphs at hand); label it with identify(fingerprint(...)).
PermGroup vertex_stabilizer(const Graph& g, const AutResult& A, int v);

/// Exact invariants used to screen isomorphism candidates.  The screen
/// alone never certifies non-isomorphism: are_isomorphic always settles
/// the answer with the search.
struct GraphInvariants {
    int n = 0;
    std::vector<int> degree_multiset;
    int girth = 0;                       // 0 when acyclic
    std::vector<std::vector<int>> distance_profiles; // sorted per-vertex BFS level sizes
    std::vector<double> spectrum;        // adjacency eigenvalues (n <= 256 only), 1e-9 rounded
};
GraphInvariants graph_invariants(const Graph& g);
bool invariants_match(const GraphInvariants& a, const GraphInvariants& b);

/// The vertex-0_0 stabilizer inside the normalizer of R(H) on a
/// bipartite bi-Cayley graph:
/// F = { sigma_{alpha,x} : alpha in Aut(H), S^alpha = x^{-1} S } as
/// permutations of the 2|H| vertices, plus the part-swapping
/// involution delta: h_0 <-> (-h)_1.
struct BiCayleyF {
    std::vector<Perm> sigma;   // the elements of F
    Perm delta;                // h_0 -> (-h)_1, h_1 -> (-h)_0
    i64 F_order = 0;
    i64 normalizer_order = 0;  // |<R(H), F, delta>|, verified = 2|H||F|
};
BiCayleyF bicayley_F(const AbelianGroup& H, const std::vector<AVec>& S, i64 cap = 10'000);

} // namespace pentacover
