#include "pentacover/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pentacover/construct.hpp"
#include "pentacover/covers.hpp"
#include "pentacover/graph6.hpp"
#include "pentacover/modarith.hpp"
#include "pentacover/symmetry.hpp"

#ifndef PENTACOVER_MANIFEST_PATH
#define PENTACOVER_MANIFEST_PATH "data/family_manifest.json"
#endif

namespace pentacover {

namespace {

struct check_failure : std::runtime_error {
    explicit check_failure(const std::string& what) : std::runtime_error(what) {}
};

void require(bool cond, const std::string& msg) {
    if (!cond) throw check_failure(msg);
}

struct Harness {
    bool quick;
    nlohmann::json manifest;
    std::ostream& out;
    std::vector<CriterionResult> results;

    std::map<std::string, FamilyInstance> instances;
    std::map<std::string, AutResult> auts;

    Harness(bool q, nlohmann::json m, std::ostream& o) : quick(q), manifest(std::move(m)), out(o) {}

    static std::string label(const std::string& fam, i64 m, i64 p, i64 e) {
        std::ostringstream os;
        os << fam;
        if (m || p || e) {
            os << "(" << m;
            if (p) os << "," << p;
            if (e) os << "," << e;
            os << ")";
        }
        return os.str();
    }

    const FamilyInstance& fi(const std::string& fam, i64 m = 0, i64 p = 0, i64 e = 0) {
        std::string key = label(fam, m, p, e);
        auto it = instances.find(key);
        if (it == instances.end()) it = instances.emplace(key, family(fam, m, p, e)).first;
        return it->second;
    }

    const AutResult& aut(const std::string& fam, i64 m = 0, i64 p = 0, i64 e = 0) {
        std::string key = label(fam, m, p, e);
        auto it = auts.find(key);
        if (it == auts.end()) it = auts.emplace(key, automorphism_group(fi(fam, m, p, e).graph)).first;
        return it->second;
    }

    void run(const std::string& id, const std::string& desc, bool skip,
             const std::function<std::string()>& body) {
        CriterionResult r;
        r.id = id;
        r.description = desc;
        if (skip) {
            r.skipped = true;
            r.detail = "full tier";
            print(r);
            results.push_back(std::move(r));
            return;
        }
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.passed = true;
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        r.seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        print(r);
        results.push_back(std::move(r));
    }

    void print(const CriterionResult& r) {
        out << "[" << std::setw(3) << r.id << "] "
            << (r.skipped ? "SKIP" : (r.passed ? "PASS" : "FAIL")) << "  " << r.description;
        if (!r.skipped) out << "  (" << std::fixed << std::setprecision(2) << r.seconds << " s)";
        if (!r.detail.empty() && (!r.passed || r.skipped)) out << "\n      " << r.detail;
        else if (!r.detail.empty()) out << "\n      " << r.detail;
        out << "\n";
        out.flush();
    }
};

// ---- criterion 12: independent brute-force oracle --------------------

using Mask = uint32_t;

std::vector<std::pair<int, int>> mask_edges(int n) {
    std::vector<std::pair<int, int>> e;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) e.emplace_back(i, j);
    return e;
}

bool mask_connected(Mask m, int n, const std::vector<std::pair<int, int>>& edges) {
    if (n == 1) return true;
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    };
    int comps = n;
    for (size_t b = 0; b < edges.size(); ++b)
        if ((m >> b) & 1) {
            int a = find(edges[b].first), c = find(edges[b].second);
            if (a != c) {
                root[a] = c;
                --comps;
            }
        }
    return comps == 1;
}

std::vector<std::vector<int>> all_perms(int n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// Per-permutation edge-position maps: applying sigma moves mask bit
/// em[b] to position b.
std::vector<std::vector<uint8_t>> edge_maps(int n, const std::vector<std::vector<int>>& perms) {
    auto edges = mask_edges(n);
    std::map<std::pair<int, int>, int> idx;
    for (size_t b = 0; b < edges.size(); ++b) idx[edges[b]] = static_cast<int>(b);
    std::vector<std::vector<uint8_t>> out;
    out.reserve(perms.size());
    for (const auto& s : perms) {
        std::vector<uint8_t> em(edges.size());
        for (size_t b = 0; b < edges.size(); ++b) {
            // sigma(M) has edge (i,j) iff M has edge (sigma^{-1} i, sigma^{-1} j);
            // equivalently bit b of sigma(M) is bit idx(sigma_i, sigma_j)... map forward:
            int i = s[edges[b].first], j = s[edges[b].second];
            if (i > j) std::swap(i, j);
            em[idx.at({i, j})] = static_cast<uint8_t>(b);
        }
        out.push_back(std::move(em));
    }
    return out;
}

Mask apply_perm_mask(Mask m, const std::vector<uint8_t>& em, int bits) {
    Mask r = 0;
    for (int b = 0; b < bits; ++b)
        if ((m >> em[b]) & 1) r |= Mask(1) << b;
    return r;
}

/// Canonical = mask maximal over all relabelings (bit 0 most significant).
bool mask_canonical(Mask m, int bits, const std::vector<std::vector<uint8_t>>& ems) {
    for (const auto& em : ems) {
        for (int b = 0; b < bits; ++b) {
            int pb = (m >> em[b]) & 1, ob = (m >> b) & 1;
            if (pb != ob) {
                if (pb > ob) return false;
                break;
            }
        }
    }
    return true;
}

Graph mask_graph(Mask m, int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::pair<int, int>> e;
    for (size_t b = 0; b < edges.size(); ++b)
        if ((m >> b) & 1) e.push_back(edges[b]);
    return Graph(n, e);
}

std::string criterion_brute_agreement() {
    i64 graphs = 0, iso_pairs = 0;
    for (int n = 1; n <= 7; ++n) {
        auto edges = mask_edges(n);
        int bits = static_cast<int>(edges.size());
        auto perms = all_perms(n);
        auto ems = edge_maps(n, perms);

        std::vector<Mask> canon;
        Mask limit = bits ? (Mask(1) << bits) : 1;
        for (Mask m = 0; m < limit; ++m) {
            if (n >= 2 && !(m & 1)) continue; // a maximal mask of an edged graph has x01 = 1
            if (!mask_connected(m, n, edges)) continue;
            if (!mask_canonical(m, bits, ems)) continue;
            canon.push_back(m);
        }
        graphs += static_cast<i64>(canon.size());

        // order agreement and positive isomorphism
        for (Mask m : canon) {
            Graph g = mask_graph(m, n, edges);
            i64 brute = 0;
            for (const auto& em : ems)
                if (apply_perm_mask(m, em, bits) == m) ++brute;
            AutResult a = automorphism_group(g);
            require(a.order == brute, "aut order mismatch at n=" + std::to_string(n) +
                                          " mask=" + std::to_string(m) + ": engine " +
                                          std::to_string(a.order) + " vs brute " +
                                          std::to_string(brute));
            if (n >= 2) {
                // relabeled copy must be found isomorphic
                std::vector<int> rot(n);
                for (int i = 0; i < n; ++i) rot[i] = (i + 1) % n;
                std::vector<std::pair<int, int>> e2;
                for (auto [u, v] : g.edges()) e2.emplace_back(rot[u], rot[v]);
                Graph g2(n, e2);
                require(are_isomorphic(g, g2).has_value(),
                        "engine missed an isomorphism of relabeled copies at n=" +
                            std::to_string(n));
            }
        }

        // negative isomorphism within (edge count, degree sequence) classes
        std::map<std::pair<int, std::vector<int>>, std::vector<Mask>> buckets;
        for (Mask m : canon) {
            std::vector<int> deg(n, 0);
            for (int b = 0; b < bits; ++b)
                if ((m >> b) & 1) {
                    deg[edges[b].first]++;
                    deg[edges[b].second]++;
                }
            std::sort(deg.begin(), deg.end());
            buckets[{__builtin_popcount(m), deg}].push_back(m);
        }
        for (const auto& [key, ms] : buckets)
            for (size_t i = 0; i < ms.size(); ++i)
                for (size_t j = i + 1; j < ms.size(); ++j) {
                    bool brute_iso = false;
                    for (const auto& em : ems)
                        if (apply_perm_mask(ms[i], em, bits) == ms[j]) {
                            brute_iso = true;
                            break;
                        }
                    require(!brute_iso, "two distinct canonical masks are isomorphic");
                    Graph a = mask_graph(ms[i], n, edges), b = mask_graph(ms[j], n, edges);
                    require(!are_isomorphic(a, b).has_value(),
                            "engine found a bogus isomorphism at n=" + std::to_string(n));
                    ++iso_pairs;
                }
    }
    return std::to_string(graphs) + " connected graphs, " + std::to_string(iso_pairs) +
           " non-isomorphic pairs checked against brute force";
}

} // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts, std::ostream& out) {
    std::string path = opts.manifest_path.empty() ? PENTACOVER_MANIFEST_PATH : opts.manifest_path;
    std::ifstream mf(path);
    if (!mf) throw std::runtime_error("cannot open family manifest at " + path);
    nlohmann::json manifest = nlohmann::json::parse(mf);

    Harness H(opts.quick, manifest, out);
    out << "acceptance suite (" << (opts.quick ? "quick" : "full") << " tier)\n";

    // 1 -----------------------------------------------------------------
    H.run("1", "eq1 solvability matches the factorization characterization for m <= 200", false,
          [&] {
              int solvable = 0;
              for (i64 m = 1; m <= 200; ++m) {
                  auto roots = solve_eq1(m); // internal structural cross-check throws on drift
                  require(roots.empty() != eq1_solvable_by_factorization(m),
                          "characterization mismatch at m = " + std::to_string(m));
                  if (!roots.empty()) ++solvable;
                  if (m > 5)
                      for (const auto& r : roots)
                          require(mul_order(r.value, m) == 5,
                                  "root without order 5 at m = " + std::to_string(m));
              }
              return std::to_string(solvable) + " solvable moduli";
          });

    // 2 -----------------------------------------------------------------
    H.run("2", "full automorphism orders match the classification table (quick instances)", false,
          [&] {
              std::ostringstream detail;
              int count = 0;
              for (const auto& row : H.manifest.at("aut_orders")) {
                  if (row.value("tier", "quick") == "full") continue;
                  std::string fam = row.at("family");
                  i64 m = row.value("m", 0), p = row.value("p", 0), e = row.value("e", 0);
                  const FamilyInstance& fi = H.fi(fam, m, p, e);
                  i64 expect = row.at("aut_order");
                  require(fi.expected.aut_order == expect,
                          "manifest disagrees with the built-in table for " + fam);
                  require(fi.graph.vertex_count() == row.at("vertices").get<i64>(),
                          "vertex count mismatch for " + fam);
                  const AutResult& a = H.aut(fam, m, p, e);
                  require(a.order == expect, Harness::label(fam, m, p, e) + ": engine order " +
                                                 std::to_string(a.order) + " != " +
                                                 std::to_string(expect));
                  ++count;
              }
              detail << count << " graphs, every order exact";
              return detail.str();
          });

    // 3 -----------------------------------------------------------------
    H.run("3", "cgd1/2/3 at (m,p,e)=(1,11,2): |Aut| = 13310, stabilizer Z_5, s = 1", H.quick,
          [&] {
              for (const std::string fam : {"cgd1", "cgd2", "cgd3"}) {
                  const FamilyInstance& fi = H.fi(fam, 1, 11, 2);
                  const AutResult& a = H.aut(fam, 1, 11, 2);
                  require(a.order == 13310, fam + ": order " + std::to_string(a.order));
                  PermGroup st = vertex_stabilizer(fi.graph, a, a.base_vertex);
                  require(identify(fingerprint(st)) == "Z_5", fam + ": stabilizer not Z_5");
                  require(s_transitivity(fi.graph, a) == 1, fam + ": s != 1");
              }
              return std::string("3 x (13310, Z_5, s=1)");
          });

    // 4 -----------------------------------------------------------------
    H.run("4", "cgd1/cgd2/cgd3 at (1,11,2) pairwise non-isomorphic (search exhaustion)", H.quick,
          [&] {
              const Graph& g1 = H.fi("cgd1", 1, 11, 2).graph;
              const Graph& g2 = H.fi("cgd2", 1, 11, 2).graph;
              const Graph& g3 = H.fi("cgd3", 1, 11, 2).graph;
              require(!are_isomorphic(g1, g2).has_value(), "cgd1 ~ cgd2");
              require(!are_isomorphic(g1, g3).has_value(), "cgd1 ~ cgd3");
              require(!are_isomorphic(g2, g3).has_value(), "cgd2 ~ cgd3");
              return std::string("3 pairs certified non-isomorphic");
          });

    // 5 -----------------------------------------------------------------
    H.run("5", "canonical cyclic cover subgroups: N_i cyclic, normal, semiregular; quotient "
               "is the order-2p base", false,
          [&] {
              struct Row {
                  const char* fam;
                  i64 m, p, e;
              };
              const Row rows[] = {{"cgd1", 1, 11, 2}, {"cgd2", 1, 11, 2}, {"cgd3", 1, 11, 2},
                                  {"cgd4", 1, 5, 0},  {"cgd5", 1, 11, 0}};
              std::ostringstream detail;
              for (const auto& row : rows) {
                  const FamilyInstance& fi = H.fi(row.fam, row.m, row.p, row.e);
                  auto N = canonical_cover_subgroup(fi); // throws on any verification failure
                  require(N.has_value(), std::string(row.fam) + ": no canonical subgroup");
                  Graph base = cover_base_graph(fi);
                  PermGroup F = canonical_arc_group(fi, false);
                  CoverReport rep = verify_symmetric_cover(fi.graph, *N, base, &F);
                  require(rep.checks_passed,
                          std::string(row.fam) + ": " +
                              (rep.failures.empty() ? "?" : rep.failures.front()));
                  require(rep.quotient.vertex_count() == 2 * row.p,
                          std::string(row.fam) + ": quotient order");
                  require(rep.fibre_arc_transitive.value_or(false),
                          std::string(row.fam) + ": fibre group not arc-transitive");
                  detail << row.fam << " -> |K| = " << N->order() << "; ";
              }
              return detail.str();
          });

    // 6 -----------------------------------------------------------------
    auto closed_aut_of = [&](const std::string& fam) {
        const FamilyInstance& fi = H.fi(fam);
        const AutResult& a = H.aut(fam);
        PermGroup A;
        A.degree = fi.graph.vertex_count();
        A.gens = a.generators;
        return close(A);
    };

    H.run("6a", "i12x2, g60, g120 are symmetric D_2-, D_5-, D_10-covers of K_6", false, [&] {
        struct Row {
            const char* fam;
            const char* dih;
        };
        const Row rows[] = {{"i12x2", "D_2"}, {"g60", "D_5"}, {"g120", "D_10"}};
        Graph k6 = H.fi("k6").graph;
        std::ostringstream detail;
        for (const auto& row : rows) {
            const FamilyInstance& fi = H.fi(row.fam);
            PermGroup A = closed_aut_of(row.fam);
            i64 korder = fi.graph.vertex_count() / 6;
            auto K = find_dihedral_cover_group(fi.graph, A, korder, k6);
            require(K.has_value(), std::string(row.fam) + ": no dihedral cover group");
            require(identify(fingerprint(*K)) == row.dih,
                    std::string(row.fam) + ": subgroup is not " + row.dih);
            PermGroup F = normalizer(A, *K);
            CoverReport rep = verify_symmetric_cover(fi.graph, *K, k6, &F);
            require(rep.checks_passed && rep.fibre_arc_transitive.value_or(false),
                    std::string(row.fam) + ": cover verification failed");
            detail << row.fam << " -> " << row.dih << "; ";
        }
        return detail.str();
    });

    // The stated claim for g48 ("a symmetric dihedral cover of K_6") does
    // not hold: D_3 is impossible by counting (48/6 = 8 fibres), and an
    // exhaustive scan shows none of the semiregular D_4 subgroups of the
    // 960-element automorphism group has independent fibres over K_6.
    // The unique order-8 covering group is Q_8, and its normalizer (the
    // full automorphism group) is arc-transitive, so g48 is a symmetric
    // quaternion cover of K_6. The check runs as stated and stays red;
    // the diagnostic reports the verified structure.
    H.run("6b", "g48 is a symmetric dihedral cover of K_6 (as stated: D_3/D_4)", false, [&] {
        const FamilyInstance& fi = H.fi("g48");
        Graph k6 = H.fi("k6").graph;
        PermGroup A = closed_aut_of("g48");
        auto K6g = find_dihedral_cover_group(fi.graph, A, 6, k6);  // the literal D_3 reading
        auto K8g = find_dihedral_cover_group(fi.graph, A, 8, k6);  // |V|/6 = 8 reading
        std::string diag;
        auto Kany = find_cover_group(fi.graph, A, 8, k6);
        if (Kany) {
            PermGroup F = normalizer(A, *Kany);
            CoverReport rep = verify_symmetric_cover(fi.graph, *Kany, k6, &F);
            diag = "no dihedral covering group exists; the unique order-8 covering group is " +
                   identify(fingerprint(*Kany)) + " with |N_Aut(K)| = " +
                   std::to_string(F.order()) +
                   (rep.checks_passed && rep.fibre_arc_transitive.value_or(false)
                        ? " (a verified symmetric quaternion cover of K_6)"
                        : " (cover verification failed)");
        } else {
            diag = "no order-8 covering group of any kind was found";
        }
        require(K6g.has_value() || K8g.has_value(), diag);
        return std::string("unexpected: a dihedral cover group appeared");
    });

    // 7 -----------------------------------------------------------------
    H.run("7", "bi-Cayley form isomorphic to the Cayley graph (and BiCay(Z_5,-,-,Z_5) = K_{5,5})",
          false, [&] {
              struct Row {
                  const char* fam;
                  i64 m, p, e;
              };
              const Row rows[] = {{"cgd4", 1, 5, 0}, {"cgd4", 1, 11, 0}, {"cgd5", 1, 11, 0}};
              for (const auto& row : rows) {
                  const FamilyInstance& fi = H.fi(row.fam, row.m, row.p, row.e);
                  Graph bc = bicayley(fi.group->base(), {}, {}, bicayley_connection(fi));
                  require(are_isomorphic(bc, fi.graph).has_value(),
                          std::string(row.fam) + ": bi-Cayley form not isomorphic");
              }
              AbelianGroup z5({5});
              std::vector<AVec> all;
              for (i64 x = 0; x < 5; ++x) all.push_back({x});
              Graph bc = bicayley(z5, {}, {}, all);
              require(are_isomorphic(bc, H.fi("k55").graph).has_value(),
                      "BiCay(Z_5,-,-,Z_5) != K_{5,5}");
              return std::string("4 isomorphisms found and verified");
          });

    // 8 -----------------------------------------------------------------
    H.run("8", "|F| on the bi-Cayley form: 5 for cgd1/2/3(1,11,2) and cgd5(1,11); "
               "10 for cgd4(1,11); 20 for cgd4(1,5)", false,
          [&] {
              struct Row {
                  const char* fam;
                  i64 m, p, e, F;
              };
              const Row rows[] = {{"cgd1", 1, 11, 2, 5}, {"cgd2", 1, 11, 2, 5},
                                  {"cgd3", 1, 11, 2, 5}, {"cgd5", 1, 11, 0, 5},
                                  {"cgd4", 1, 11, 0, 10}, {"cgd4", 1, 5, 0, 20}};
              std::ostringstream detail;
              for (const auto& row : rows) {
                  const FamilyInstance& fi = H.fi(row.fam, row.m, row.p, row.e);
                  BiCayleyF F = bicayley_F(fi.group->base(), bicayley_connection(fi));
                  require(F.F_order == row.F, Harness::label(row.fam, row.m, row.p, row.e) +
                                                  ": |F| = " + std::to_string(F.F_order) +
                                                  " != " + std::to_string(row.F));
                  require(F.normalizer_order == 2 * fi.group->base().order() * row.F,
                          std::string(row.fam) + ": normalizer order");
                  detail << Harness::label(row.fam, row.m, row.p, row.e) << ": " << F.F_order
                         << "; ";
              }
              return detail.str();
          });

    // 9 -----------------------------------------------------------------
    H.run("9", "vertex stabilizer identification (Z_5 / D_5 / F_20 per family)", false, [&] {
        struct Row {
            const char* fam;
            i64 m, p, e;
            const char* stab;
            bool full_tier;
        };
        const Row rows[] = {{"cgd5", 1, 11, 0, "Z_5", false}, {"cd", 31, 0, 0, "Z_5", false},
                            {"g60", 0, 0, 0, "D_5", false},   {"g120", 0, 0, 0, "D_5", false},
                            {"cgd4", 1, 11, 0, "D_5", false}, {"i12x2", 0, 0, 0, "F_20", false},
                            {"g48", 0, 0, 0, "F_20", false},  {"cgd1", 1, 11, 2, "Z_5", true},
                            {"cgd2", 1, 11, 2, "Z_5", true},  {"cgd3", 1, 11, 2, "Z_5", true}};
        int checked = 0;
        for (const auto& row : rows) {
            if (row.full_tier && H.quick) continue;
            const FamilyInstance& fi = H.fi(row.fam, row.m, row.p, row.e);
            const AutResult& a = H.aut(row.fam, row.m, row.p, row.e);
            PermGroup st = vertex_stabilizer(fi.graph, a, a.base_vertex);
            std::string got = identify(fingerprint(st));
            require(got == row.stab, Harness::label(row.fam, row.m, row.p, row.e) +
                                         ": stabilizer " + got + " != " + row.stab);
            require(got == fi.expected.stabilizer,
                    std::string(row.fam) + ": expected-metadata stabilizer drift");
            ++checked;
        }
        return std::to_string(checked) + " stabilizers identified";
    });

    // 10 ----------------------------------------------------------------
    H.run("10", "the hexagon witness closes in every cgd instance; girth <= 6", false, [&] {
        struct Row {
            const char* fam;
            i64 m, p, e;
        };
        const Row rows[] = {{"cgd1", 1, 11, 2}, {"cgd2", 1, 11, 2}, {"cgd3", 1, 11, 2},
                            {"cgd4", 1, 5, 0},  {"cgd4", 1, 11, 0}, {"cgd5", 1, 11, 0}};
        for (const auto& row : rows) {
            const FamilyInstance& fi = H.fi(row.fam, row.m, row.p, row.e);
            require(contains_cycle(fi.graph, hexagon_witness(fi)),
                    Harness::label(row.fam, row.m, row.p, row.e) + ": hexagon does not close");
            require(girth(fi.graph) <= 6,
                    Harness::label(row.fam, row.m, row.p, row.e) + ": girth > 6");
        }
        return std::string("6 instances");
    });

    // 11 ----------------------------------------------------------------
    H.run("11", "bi-Cayley observation: o(a) = m p^e, p | o(b), <a,b> = H, and the "
                "neighbor 5-cycle automorphism relations hold", false,
          [&] {
              struct Row {
                  const char* fam;
                  i64 m, p, e;
              };
              const Row rows[] = {{"cgd1", 1, 11, 2}, {"cgd2", 1, 11, 2}, {"cgd3", 1, 11, 2},
                                  {"cgd4", 1, 5, 0},  {"cgd4", 1, 11, 0}, {"cgd5", 1, 11, 0}};
              for (const auto& row : rows) {
                  auto chk = check_bicayley_structure(H.fi(row.fam, row.m, row.p, row.e));
                  require(chk.all(), Harness::label(row.fam, row.m, row.p, row.e) +
                                         ": observation checks failed");
              }
              return std::string("6 instances");
          });

    // 12 ----------------------------------------------------------------
    H.run("12", "engine agrees with exhaustive brute force on all connected graphs with <= 7 "
                "vertices", false,
          criterion_brute_agreement);

    // r-choice invariance (construct design decision) ---------------------
    H.run("r", "different valid roots give isomorphic graphs (cd m=31, r = 2 vs 4)", false, [&] {
        FamilyInstance a = family("cd", 31, 0, 0, 2);
        FamilyInstance b = family("cd", 31, 0, 0, 4);
        require(are_isomorphic(a.graph, b.graph).has_value(), "cd_31 root choice changed the graph");
        return std::string("isomorphic");
    });

    int passed = 0, failed = 0, skipped = 0;
    for (const auto& r : H.results) {
        if (r.skipped)
            ++skipped;
        else if (r.passed)
            ++passed;
        else
            ++failed;
    }
    out << passed << " passed, " << failed << " failed, " << skipped << " skipped\n";
    return H.results;
}

bool all_passed(const std::vector<CriterionResult>& rs) {
    return std::all_of(rs.begin(), rs.end(),
                       [](const CriterionResult& r) { return r.skipped || r.passed; });
}

} // namespace pentacover
