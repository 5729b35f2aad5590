#include "pentacover/covers.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "pentacover/symmetry.hpp"

namespace pentacover {

std::pair<Graph, std::vector<int>> quotient(const Graph& g, const PermGroup& N) {
    for (const auto& p : N.gens)
        if (!is_automorphism(g, p))
            throw graph_error("quotient: generator is not an automorphism");
    int count = 0;
    std::vector<int> orbit = point_orbits(g.vertex_count(), N.gens, &count);
    std::set<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) {
        int a = orbit[u], b = orbit[v];
        if (a == b) continue;
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    Graph q(count, {edges.begin(), edges.end()});
    return {std::move(q), std::move(orbit)};
}

namespace {

void record(CoverReport& r, bool ok, const std::string& what) {
    if (!ok) r.failures.push_back(what);
}

CoverReport base_checks(const Graph& cover, const PermGroup& K_in, const Graph& base) {
    CoverReport r;
    PermGroup K = K_in;
    for (const auto& p : K.gens)
        if (!is_automorphism(cover, p)) {
            r.failures.push_back("subgroup generator is not an automorphism of the cover");
            return r;
        }
    if (!K.has_closure()) K = close(K);

    r.semiregular = is_semiregular(K);
    record(r, r.semiregular, "K is not semiregular");

    int count = 0;
    auto [q, proj] = quotient(cover, K);
    (void)proj;
    count = q.vertex_count();
    r.quotient = q;
    r.orbit_count = count;
    record(r, count == base.vertex_count() && count >= 3,
           "orbit count " + std::to_string(count) + " != |V(base)| = " +
               std::to_string(base.vertex_count()));

    auto vc = regular_valency(cover), vq = regular_valency(q);
    r.valency_preserved = vc.has_value() && vq.has_value() && *vc == *vq;
    record(r, r.valency_preserved, "quotient valency differs from cover valency");

    if (count == base.vertex_count()) {
        r.quotient_iso_target = are_isomorphic(q, base);
        record(r, r.quotient_iso_target.has_value(), "quotient is not isomorphic to the base");
    } else {
        record(r, false, "quotient size precludes isomorphism with the base");
    }
    return r;
}

} // namespace

CoverReport verify_regular_cover(const Graph& cover, const PermGroup& K, const Graph& base) {
    CoverReport r = base_checks(cover, K, base);
    r.checks_passed = r.failures.empty();
    return r;
}

CoverReport verify_symmetric_cover(const Graph& cover, const PermGroup& K_in, const Graph& base,
                                   const PermGroup* supplied_F) {
    CoverReport r = base_checks(cover, K_in, base);
    PermGroup K = K_in.has_closure() ? K_in : close(K_in);

    if (supplied_F) {
        bool ok = true;
        for (const auto& g : supplied_F->gens) {
            if (!is_automorphism(cover, g)) {
                record(r, false, "supplied subgroup generator is not an automorphism");
                ok = false;
                break;
            }
            Perm gi = g.inverse();
            for (const auto& k : K.gens)
                if (!K.closure->contains(gi.then(k).then(g))) {
                    record(r, false, "supplied subgroup does not normalize K");
                    ok = false;
                    break;
                }
            if (!ok) break;
        }
        if (ok) {
            if (supplied_F->known_order || supplied_F->has_closure())
                r.fibre_group_order = supplied_F->order();
            AutResult ar;
            ar.generators = supplied_F->gens;
            r.fibre_arc_transitive = is_arc_transitive(cover, ar);
            record(r, *r.fibre_arc_transitive, "supplied fibre group is not arc-transitive");
        }
    } else {
        try {
            AutResult aut = automorphism_group(cover);
            PermGroup A;
            A.degree = cover.vertex_count();
            A.gens = aut.generators;
            A = close(A);
            PermGroup F = normalizer(A, K);
            r.fibre_group_order = F.order();
            AutResult ar;
            ar.generators = F.gens;
            r.fibre_arc_transitive = is_arc_transitive(cover, ar);
            record(r, *r.fibre_arc_transitive, "fibre-preserving group is not arc-transitive");
        } catch (const closure_cap_error& e) {
            throw group_error(std::string("verify_symmetric_cover: automorphism group exceeds "
                                          "the closure cap and no subgroup was supplied (") +
                              e.what() + ")");
        }
    }
    r.checks_passed = r.failures.empty();
    return r;
}

std::string cover_report_json(const CoverReport& r) {
    nlohmann::json j;
    j["semiregular"] = r.semiregular;
    j["orbit_count"] = r.orbit_count;
    j["valency_preserved"] = r.valency_preserved;
    j["quotient_order"] = r.quotient.vertex_count();
    j["iso_to_base"] = r.quotient_iso_target.has_value();
    if (r.fibre_group_order)
        j["fibre_group_order"] = *r.fibre_group_order;
    else
        j["fibre_group_order"] = nullptr;
    if (r.fibre_arc_transitive)
        j["fibre_arc_transitive"] = *r.fibre_arc_transitive;
    else
        j["fibre_arc_transitive"] = nullptr;
    j["checks_passed"] = r.checks_passed;
    j["failures"] = r.failures;
    return j.dump(2);
}

std::optional<PermGroup> find_dihedral_cover_group(const Graph& g, const PermGroup& A,
                                                   i64 order, const Graph& base) {
    if (!A.has_closure()) throw group_error("find_dihedral_cover_group: closure missing");
    i64 n_cyc = order / 2;
    std::vector<Perm> elems;
    elems.reserve(A.closure->order());
    A.closure->for_each([&](const Perm& p) { elems.push_back(p); });
    std::sort(elems.begin(), elems.end());

    std::vector<Perm> xs, ys;
    for (const auto& p : elems) {
        if (p.fixed_points() > 0) continue;
        i64 o = p.order();
        if (o == n_cyc) xs.push_back(p);
        if (o == 2) ys.push_back(p);
    }

    std::set<std::vector<std::vector<int>>> seen; // canonical element lists
    for (const auto& x : xs) {
        std::set<std::vector<int>> pow{Perm::identity(x.degree()).images()};
        Perm xp = x;
        for (i64 i = 1; i < n_cyc; ++i) {
            pow.insert(xp.images());
            xp = xp.then(x);
        }
        Perm xi = x.inverse();
        for (const auto& y : ys) {
            if (pow.count(y.images())) continue;
            if (y.then(x).then(y) != xi) continue; // y^-1 x y = x^-1 (y is an involution)
            PermGroup K;
            K.degree = x.degree();
            K.gens = {x, y};
            K = close(K, order * 2);
            if (K.order() != order) continue;
            std::vector<std::vector<int>> sig;
            K.closure->for_each([&](const Perm& p) { sig.push_back(p.images()); });
            std::sort(sig.begin(), sig.end());
            if (!seen.insert(sig).second) continue;
            if (!is_semiregular(K)) continue;
            auto rep = verify_regular_cover(g, K, base);
            if (!rep.checks_passed) continue;
            PermGroup F = normalizer(A, K);
            AutResult ar;
            ar.generators = F.gens;
            if (is_arc_transitive(g, ar)) return K;
        }
    }
    return std::nullopt;
}

std::optional<PermGroup> find_cover_group(const Graph& g, const PermGroup& A, i64 order,
                                          const Graph& base) {
    if (!A.has_closure()) throw group_error("find_cover_group: closure missing");
    std::vector<Perm> elems;
    elems.reserve(A.closure->order());
    A.closure->for_each([&](const Perm& p) { elems.push_back(p); });
    std::sort(elems.begin(), elems.end());

    std::vector<Perm> fpf{Perm::identity(A.degree)};
    for (const auto& p : elems)
        if (!p.is_identity() && p.fixed_points() == 0 && order % p.order() == 0)
            fpf.push_back(p);

    std::set<std::vector<std::vector<int>>> seen;
    for (size_t i = 1; i < fpf.size(); ++i) {
        for (size_t j = 0; j < fpf.size(); ++j) {
            PermGroup K;
            K.degree = A.degree;
            K.gens = {fpf[i], fpf[j]};
            try {
                K = close(K, order);
            } catch (const closure_cap_error&) {
                continue;
            }
            if (K.order() != order) continue;
            std::vector<std::vector<int>> sig;
            K.closure->for_each([&](const Perm& p) { sig.push_back(p.images()); });
            std::sort(sig.begin(), sig.end());
            if (!seen.insert(sig).second) continue;
            if (!is_semiregular(K)) continue;
            auto rep = verify_regular_cover(g, K, base);
            if (!rep.checks_passed) continue;
            PermGroup F = normalizer(A, K);
            AutResult ar;
            ar.generators = F.gens;
            if (is_arc_transitive(g, ar)) return K;
        }
    }
    return std::nullopt;
}

} // namespace pentacover
