#pragma once

// Regular-cover machinery: quotients by semiregular subgroups and
// verification that a graph is a (symmetric) K-cover of a base graph.
// Verification failures are recorded in the report, never thrown.

#include <optional>
#include <string>
#include <vector>

#include "pentacover/graph.hpp"
#include "pentacover/perm.hpp"

namespace pentacover {

struct CoverReport {
    bool semiregular = false;
    i64 orbit_count = 0;
    Graph quotient;
    bool valency_preserved = false;
    std::optional<Perm> quotient_iso_target;
    std::optional<i64> fibre_group_order;
    std::optional<bool> fibre_arc_transitive;
    bool checks_passed = false;
    std::vector<std::string> failures;
};

/// Quotient by the orbits of N: vertices are N-orbits (numbered by
/// smallest member), two orbits adjacent iff some edge joins them.
/// Throws if a generator is not an automorphism of g.
std::pair<Graph, std::vector<int>> quotient(const Graph& g, const PermGroup& N);

/// Checks: K semiregular, quotient isomorphic to base, valency
/// preserved, orbit count = |V(base)| >= 3.
CoverReport verify_regular_cover(const Graph& cover, const PermGroup& K, const Graph& base);

/// Additionally computes the fibre-preserving group F = N(K) — inside
/// the enumerated automorphism group, or taken from `supplied_F` (whose
/// generators are then verified to be automorphisms normalizing K) —
/// and checks that F is arc-transitive on the cover.
CoverReport verify_symmetric_cover(const Graph& cover, const PermGroup& K, const Graph& base,
                                   const PermGroup* supplied_F = nullptr);

std::string cover_report_json(const CoverReport& r);

/// Search an enumerated group A <= Aut(g) for a semiregular dihedral
/// subgroup K of the given order whose quotient is isomorphic to `base`
/// and whose normalizer in A is arc-transitive on g.  Deterministic:
/// elements are scanned in sorted order, first hit wins.
std::optional<PermGroup> find_dihedral_cover_group(const Graph& g, const PermGroup& A,
                                                   i64 order, const Graph& base);

/// Same search without the dihedral restriction: any semiregular
/// subgroup generated by at most two elements.
std::optional<PermGroup> find_cover_group(const Graph& g, const PermGroup& A, i64 order,
                                          const Graph& base);

} // namespace pentacover
