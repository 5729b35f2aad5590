#include "pentacover/construct.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "pentacover/graph6.hpp"
#include "pentacover/symmetry.hpp"

namespace pentacover {

namespace {

GDihElement h_word(const GDihGroup& G, AVec w) {
    // h * a^x b^y c^z = (-w, 1)
    return G.make(G.base().neg(G.base().normalized(std::move(w))), 1);
}

Perm right_mult_perm(const GDihGroup& G, const GDihElement& t) {
    i64 n = G.order();
    std::vector<int> img(n);
    for (i64 r = 0; r < n; ++r) img[r] = static_cast<int>(G.rank_of(G.mul(G.unrank(r), t)));
    return Perm(std::move(img));
}

/// Group automorphism of Dih(H) from a linear map on H (images of the
/// standard generators) and the image (w, 1) of the flip h.
struct GDihAut {
    std::vector<AVec> gen_images; // alpha(e_i)
    AVec h_image_vec;             // alpha(h) = (h_image_vec, 1)

    AVec apply_vec(const AbelianGroup& H, const AVec& v) const {
        AVec r = H.zero();
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] != 0) r = H.add(r, H.scale(gen_images[i], v[i]));
        return r;
    }
    GDihElement apply(const GDihGroup& G, const GDihElement& x) const {
        // (u, d) = u * h^d, so alpha(u, d) = M(u) + d*w with flip d.
        AVec v = apply_vec(G.base(), x.vec);
        if (x.flip) v = G.base().add(v, h_image_vec);
        return {std::move(v), x.flip};
    }
    Perm as_perm(const GDihGroup& G) const {
        i64 n = G.order();
        std::vector<int> img(n);
        for (i64 r = 0; r < n; ++r) img[r] = static_cast<int>(G.rank_of(apply(G, G.unrank(r))));
        return Perm(std::move(img));
    }
};

std::vector<std::pair<GDihElement, Perm>> regular_generators(const GDihGroup& G) {
    std::vector<std::pair<GDihElement, Perm>> out;
    for (int i = 0; i < G.base().rank(); ++i) {
        if (G.base().moduli()[i] == 1) continue;
        AVec e = G.base().zero();
        e[i] = 1;
        GDihElement t = G.make(e, 0);
        out.emplace_back(t, right_mult_perm(G, t));
    }
    GDihElement h = G.make(G.base().zero(), 1);
    out.emplace_back(h, right_mult_perm(G, h));
    return out;
}

} // namespace

ConnectionSet ConnectionSet::checked(const GDihGroup& G, std::vector<GDihElement> elems) {
    for (auto& s : elems) s = G.make(s.vec, s.flip);
    for (const auto& s : elems)
        if (s == G.identity()) throw family_error("connection set contains the identity");
    for (const auto& s : elems) {
        GDihElement si = G.inv(s);
        if (std::find(elems.begin(), elems.end(), si) == elems.end())
            throw family_error("connection set is not inverse-closed");
    }
    for (size_t i = 0; i < elems.size(); ++i)
        for (size_t j = i + 1; j < elems.size(); ++j)
            if (elems[i] == elems[j]) throw family_error("connection set has repeated elements");
    return ConnectionSet{std::move(elems)};
}

Graph cayley(const GDihGroup& G, const ConnectionSet& S, i64 cap) {
    i64 n = G.order();
    if (n > cap)
        throw family_error("cayley: group order " + std::to_string(n) + " exceeds cap");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n * S.elems.size() / 2 + 1);
    for (i64 r = 0; r < n; ++r) {
        GDihElement g = G.unrank(r);
        for (const auto& s : S.elems) {
            i64 t = G.rank_of(G.mul(s, g));
            if (r < t) edges.emplace_back(static_cast<int>(r), static_cast<int>(t));
        }
    }
    Graph g(static_cast<int>(n), edges);

    // <S> = G iff the graph is connected; cross-check by subgroup closure.
    bool connected = is_connected(g);
    bool generated;
    bool all_flip = std::all_of(S.elems.begin(), S.elems.end(),
                                [](const GDihElement& s) { return s.flip == 1; });
    if (all_flip) {
        // differences s t^{-1} land in H; S generates iff they span H
        std::vector<AVec> diffs;
        for (const auto& s : S.elems)
            for (const auto& t : S.elems)
                diffs.push_back(G.mul(s, G.inv(t)).vec);
        generated = G.base().generates(diffs);
    } else {
        std::map<i64, bool> seen{{G.rank_of(G.identity()), true}};
        std::vector<GDihElement> frontier{G.identity()};
        while (!frontier.empty()) {
            std::vector<GDihElement> next;
            for (const auto& x : frontier)
                for (const auto& s : S.elems) {
                    GDihElement y = G.mul(x, s);
                    if (seen.emplace(G.rank_of(y), true).second) next.push_back(y);
                }
            frontier = std::move(next);
        }
        generated = static_cast<i64>(seen.size()) == n;
    }
    if (connected != generated)
        throw family_error("cayley: connectivity disagrees with <S> = G check");
    return g;
}

Graph cayley(const AbelianGroup& H, const std::vector<AVec>& S, i64 cap) {
    i64 n = H.order();
    if (n > cap) throw family_error("cayley: group order exceeds cap");
    std::vector<AVec> conn;
    for (const auto& s : S) conn.push_back(H.normalized(s));
    for (const auto& s : conn) {
        if (H.is_zero(s)) throw family_error("connection set contains the identity");
        if (std::find(conn.begin(), conn.end(), H.neg(s)) == conn.end())
            throw family_error("connection set is not inverse-closed");
    }
    std::vector<std::pair<int, int>> edges;
    for (i64 r = 0; r < n; ++r) {
        AVec g = H.unrank(r);
        for (const auto& s : conn) {
            i64 t = H.rank_of(H.add(s, g));
            if (r < t) edges.emplace_back(static_cast<int>(r), static_cast<int>(t));
        }
    }
    Graph g(static_cast<int>(n), edges);
    if (is_connected(g) != H.generates(conn))
        throw family_error("cayley: connectivity disagrees with <S> = H check");
    return g;
}

Graph cayley_on_perm_group(const std::vector<Perm>& generators, const std::vector<Perm>& S,
                           i64 cap) {
    PermClosure cl = close_generators(generators.empty() ? 0 : generators[0].degree(),
                                      generators, cap);
    std::vector<Perm> elems;
    elems.reserve(cl.order());
    cl.for_each([&](const Perm& p) { elems.push_back(p); });
    std::sort(elems.begin(), elems.end());
    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < elems.size(); ++i) index[elems[i].images()] = static_cast<int>(i);

    for (const auto& s : S) {
        if (s.is_identity()) throw family_error("connection set contains the identity");
        if (!index.count(s.images())) throw family_error("connection element outside the group");
        if (!index.count(s.inverse().images()) ||
            std::find(S.begin(), S.end(), s.inverse()) == S.end())
            throw family_error("connection set is not inverse-closed");
    }

    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < elems.size(); ++i)
        for (const auto& s : S) {
            int j = index.at(s.then(elems[i]).images());
            if (static_cast<int>(i) < j) edges.emplace_back(static_cast<int>(i), j);
        }
    return Graph(static_cast<int>(elems.size()), edges);
}

Graph bicayley(const AbelianGroup& H, const std::vector<AVec>& R, const std::vector<AVec>& L,
               const std::vector<AVec>& S) {
    auto check_side = [&](const std::vector<AVec>& X, const char* which) {
        for (const auto& x : X) {
            AVec v = H.normalized(x);
            if (H.is_zero(v))
                throw family_error(std::string("bicayley: identity in ") + which);
            AVec nv = H.neg(v);
            bool found = false;
            for (const auto& y : X)
                if (H.normalized(y) == nv) {
                    found = true;
                    break;
                }
            if (!found)
                throw family_error(std::string("bicayley: ") + which + " is not inverse-closed");
        }
    };
    check_side(R, "R");
    check_side(L, "L");

    i64 n = H.order();
    std::vector<std::pair<int, int>> edges;
    for (i64 hr = 0; hr < n; ++hr) {
        AVec h = H.unrank(hr);
        for (const auto& x : R) {
            i64 gr = H.rank_of(H.add(h, H.normalized(x)));
            if (hr < gr) edges.emplace_back(static_cast<int>(hr), static_cast<int>(gr));
        }
        for (const auto& x : L) {
            i64 gr = H.rank_of(H.add(h, H.normalized(x)));
            if (hr < gr)
                edges.emplace_back(static_cast<int>(n + hr), static_cast<int>(n + gr));
        }
        for (const auto& x : S) {
            i64 gr = H.rank_of(H.add(h, H.normalized(x)));
            edges.emplace_back(static_cast<int>(hr), static_cast<int>(n + gr));
        }
    }
    return Graph(static_cast<int>(2 * n), edges);
}

namespace {

// ---- fixed sporadic graphs ----

Graph make_k6() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) e.emplace_back(i, j);
    return Graph(6, e);
}

Graph make_k55() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) e.emplace_back(i, 5 + j);
    return Graph(10, e);
}

Graph make_k66_minus_matching() {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
            if (i != j) e.emplace_back(i, 6 + j);
    return Graph(12, e);
}

Graph make_icosahedron() {
    // two apexes and a pentagonal antiprism
    std::vector<std::pair<int, int>> e;
    auto u = [](int k) { return 1 + (k % 5 + 5) % 5; };
    auto l = [](int k) { return 6 + (k % 5 + 5) % 5; };
    for (int k = 0; k < 5; ++k) {
        e.emplace_back(0, u(k));
        e.emplace_back(11, l(k));
        e.emplace_back(u(k), u(k + 1));
        e.emplace_back(l(k), l(k + 1));
        e.emplace_back(u(k), l(k));
        e.emplace_back(u(k), l(k + 1));
    }
    return Graph(12, e);
}

struct CayleyData {
    GDihGroup group;
    std::vector<GDihElement> conn;
    Graph graph;
};

CayleyData dihedral_cayley(i64 mod, const std::vector<i64>& reflect_exponents) {
    GDihGroup G(AbelianGroup({mod}));
    std::vector<GDihElement> conn;
    for (i64 k : reflect_exponents) conn.push_back(G.make({k}, 1));
    Graph g = cayley(G, ConnectionSet::checked(G, conn));
    return {G, std::move(conn), std::move(g)};
}

CayleyData make_cgd53() {
    GDihGroup G(AbelianGroup({5, 5, 5}));
    // x * h = (x, 1)
    std::vector<GDihElement> conn = {
        G.make({0, 0, 0}, 1), G.make({1, 0, 0}, 1), G.make({0, 1, 0}, 1),
        G.make({0, 0, 1}, 1), G.make({-1, -1, -1}, 1)};
    Graph g = cayley(G, ConnectionSet::checked(G, conn));
    return {G, std::move(conn), std::move(g)};
}

Graph make_g60() {
    std::vector<Perm> S = {
        Perm::from_cycles(5, {{0, 3}, {1, 4}}), Perm::from_cycles(5, {{0, 2}, {1, 4}}),
        Perm::from_cycles(5, {{0, 2}, {1, 3}}), Perm::from_cycles(5, {{1, 3}, {2, 4}}),
        Perm::from_cycles(5, {{0, 3}, {2, 4}})};
    return cayley_on_perm_group(S, S);
}

Graph make_g120() {
    std::vector<Perm> S = {
        Perm::from_cycles(7, {{0, 3}, {1, 4}, {5, 6}}),
        Perm::from_cycles(7, {{0, 2}, {1, 4}, {5, 6}}),
        Perm::from_cycles(7, {{0, 2}, {1, 3}, {5, 6}}),
        Perm::from_cycles(7, {{1, 3}, {2, 4}, {5, 6}}),
        Perm::from_cycles(7, {{0, 3}, {2, 4}, {5, 6}})};
    return cayley_on_perm_group(S, S);
}

// ---- cgd family internals ----

struct CgdData {
    int i;
    i64 m, p, e, pe;
    i64 r;      // root of eq1 in Z_m
    i64 lam;    // lambda in Z_{p^e} (cgd1-3) or Z_p (cgd4/5)
    GDihGroup group;
    std::vector<GDihElement> conn;
    GDihAut alpha;
    std::optional<GDihAut> beta;
};

i64 pow_i64(i64 b, i64 e) {
    i64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

i64 poly_at(const std::vector<i64>& coeffs, i64 x, i64 mod) {
    i64 r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = ((r * (x % mod) % mod) + *it % mod + mod) % mod;
    return r;
}

CgdData build_cgd(int i, i64 m, i64 p, i64 e, std::optional<i64> r_ov, std::optional<i64> l_ov) {
    std::string name = "cgd" + std::to_string(i);
    if (m < 1) throw family_error(name + ": m must be a positive integer");
    if (!is_prime(p)) throw family_error(name + ": p = " + std::to_string(p) + " is not prime");
    if (i <= 3) {
        if (e < 2) throw family_error(name + " requires e >= 2");
        if (p % 5 != 1) throw family_error(name + " requires 5 | (p-1)");
    } else {
        if (e == 0) e = 1;
        if (e != 1) throw family_error(name + " requires e = 1");
        if (i == 4) {
            if (!(p == 5 || p % 5 == 1 || p % 5 == 4))
                throw family_error(name + " requires p = 5 or 5 | (p+-1)");
        } else if (p % 5 != 1) {
            throw family_error(name + " requires 5 | (p-1)");
        }
    }
    if (gcd_i64(m, p) != 1) throw family_error(name + " requires (m, p) = 1");
    auto roots = solve_eq1(m);
    if (roots.empty())
        throw family_error(name + ": x^4+x^3+x^2+x+1 = 0 has no root mod m = " +
                           std::to_string(m) + " (m must be 1, 5, or 5^t times primes = 1 mod 5)");
    i64 r = r_ov.value_or(roots[0].value);
    if (r_ov && std::find_if(roots.begin(), roots.end(), [&](const Residue& x) {
                    return x.value == ((r % m) + m) % m;
                }) == roots.end())
        throw family_error(name + ": supplied r is not a root of eq1 mod m");
    r = ((r % m) + m) % m;

    i64 pe = pow_i64(p, e);
    i64 lam;
    if (i <= 3) {
        lam = l_ov.value_or(order5_unit(pe).value);
        if (l_ov && (lam <= 0 || pow_mod(lam, 5, pe) != 1 || lam % pe == 1))
            throw family_error(name + ": supplied lambda must have order 5 in Z_{p^e}^*");
        lam = ((lam % pe) + pe) % pe;
    } else if (i == 4) {
        if (p == 5) {
            lam = l_ov.value_or(0);
            if (lam % p != 0) throw family_error("cgd4 with p = 5 requires lambda = 0");
            lam = 0;
        } else {
            auto sq = sqrt_mod(5, p);
            if (sq.empty()) throw family_error("cgd4: 5 is not a square mod p");
            lam = l_ov.value_or(sq[0].value);
            lam = ((lam % p) + p) % p;
            if ((lam * lam) % p != 5 % p)
                throw family_error("cgd4: supplied lambda must satisfy lambda^2 = 5 mod p");
        }
    } else {
        auto qroots = poly_roots(ModPoly({5, 0, 10, 0, 1}, p));
        if (qroots.empty())
            throw family_error("cgd5: x^4+10x^2+5 has no root mod p = " + std::to_string(p));
        lam = l_ov.value_or(qroots[0].value);
        lam = ((lam % p) + p) % p;
        if (poly_at({5, 0, 10, 0, 1}, lam, p) != 0)
            throw family_error("cgd5: supplied lambda is not a root of x^4+10x^2+5 mod p");
    }

    GDihGroup G(AbelianGroup({m, pe, p}));
    const AbelianGroup& H = G.base();

    i64 a1 = 1 % m, a2 = (r + 1) % m, a3 = (r * r + r + 1) % m,
        a4 = (((r * r) % m) * r + r * r + r + 1) % m;
    i64 lp = lam % p;

    std::vector<GDihElement> conn;
    GDihAut alpha;
    std::optional<GDihAut> beta;

    if (i <= 3) {
        i64 b2 = (lam + 1) % pe, b3 = (lam * lam + lam + 1) % pe,
            b4 = (((lam * lam) % pe) * lam + lam * lam + lam + 1) % pe;
        i64 l2 = lp * lp % p, l3 = l2 * lp % p, l4 = l3 * lp % p;
        i64 c3, c4;
        if (i == 1) {
            c3 = (l4 + lp + 1) % p;
            c4 = 1;
        } else if (i == 2) {
            c3 = (l3 + lp + 1) % p;
            c4 = lp;
        } else {
            c3 = (l2 + lp + 1) % p;
            c4 = l2;
        }
        conn = {h_word(G, {0, 0, 0}), h_word(G, {a1, 1, 0}), h_word(G, {a2, b2, 1}),
                h_word(G, {a3, b3, c3}), h_word(G, {a4, b4, c4})};
        i64 c_img = (i == 1) ? l4 : (i == 2) ? l3 : l2;
        alpha = GDihAut{{AVec{r, 0, 0}, AVec{0, lam, 1}, AVec{0, 0, c_img}}, AVec{-1, -1, 0}};
    } else if (i == 4) {
        i64 inv2 = inv_mod(2, p);
        i64 s = inv2 * (1 + lam) % p; // 2^{-1}(1+lambda)
        conn = {h_word(G, {0, 0, 0}), h_word(G, {a1, 1, 0}), h_word(G, {a2, 0, 1}),
                h_word(G, {a3, -s, s}), h_word(G, {a4, -s, 1})};
        i64 c_b = (p - inv2 * (3 + lam) % p) % p; // -2^{-1}(3+lambda)
        alpha = GDihAut{{AVec{r, 0, 0}, AVec{0, -1, 1}, AVec{0, c_b, s}}, AVec{-1, -1, 0}};
        if (m == 1 || m == 5)
            beta = GDihAut{{AVec{-1, 0, 0}, AVec{0, -s, 1}, AVec{0, -s, s}}, AVec{0, 0, 0}};
    } else {
        i64 inv2 = inv_mod(2, p), inv8 = inv_mod(8, p);
        i64 l2 = lam * lam % p, l3 = l2 * lam % p;
        i64 b3 = inv8 * (((l3 - l2 + 7 * lam + 1) % p + p) % p) % p;
        i64 c3 = inv2 * ((lam + 1) % p) % p;
        i64 b4 = (p - inv8 * (((l3 + l2 + 7 * lam - 1) % p + p) % p) % p) % p;
        i64 c4 = inv8 * (((l3 + l2 + 11 * lam + 3) % p + p) % p) % p;
        conn = {h_word(G, {0, 0, 0}), h_word(G, {a1, 1, 0}), h_word(G, {a2, 0, 1}),
                h_word(G, {a3, b3, c3}), h_word(G, {a4, b4, c4})};
        i64 cb = inv8 * (((l3 - l2 + 7 * lam - 7) % p + p) % p) % p;
        alpha = GDihAut{{AVec{r, 0, 0}, AVec{0, -1, 1}, AVec{0, cb, c3}}, AVec{-1, -1, 0}};
    }

    for (auto& img : alpha.gen_images) img = H.normalized(std::move(img));
    alpha.h_image_vec = H.normalized(std::move(alpha.h_image_vec));
    if (beta) {
        for (auto& img : beta->gen_images) img = H.normalized(std::move(img));
        beta->h_image_vec = H.normalized(std::move(beta->h_image_vec));
    }

    return CgdData{i, m, p, e, pe, r, lam, G, std::move(conn), std::move(alpha), std::move(beta)};
}

i64 largest_prime_factor(i64 m) {
    auto f = factorize(m);
    return f.back().first;
}

} // namespace

const std::vector<FamilyDescription>& family_catalog() {
    static const std::vector<FamilyDescription> cat = {
        {"cgd1", "m p e", "(m,p)=1, eq1 solvable mod m, p prime with 5 | (p-1), e >= 2",
         "10 m p^(e+1)"},
        {"cgd2", "m p e", "(m,p)=1, eq1 solvable mod m, p prime with 5 | (p-1), e >= 2",
         "10 m p^(e+1)"},
        {"cgd3", "m p e", "(m,p)=1, eq1 solvable mod m, p prime with 5 | (p-1), e >= 2",
         "10 m p^(e+1)"},
        {"cgd4", "m p", "(m,p)=1, eq1 solvable mod m, p = 5 or 5 | (p+-1), e = 1",
         "10 m p^2 (20 m p^2 when m in {1,5} and p != 5; 4000 at m=1, p=5)"},
        {"cgd5", "m p", "(m,p)=1, eq1 solvable mod m, p prime with 5 | (p-1), e = 1",
         "10 m p^2"},
        {"cd", "m", "m = 5, 11 or m >= 31 with eq1 solvable mod m",
         "10 m for m >= 31; 1320 at m = 11; 28800 at m = 5"},
        {"k6", "", "none", "720"},
        {"k55", "", "none", "28800"},
        {"k66-6k2", "", "none", "1440"},
        {"i12", "", "none", "120"},
        {"cgd53", "", "none", "30000"},
        {"i12x2", "", "none", "480"},
        {"g48", "", "none", "960"},
        {"g60", "", "none", "600"},
        {"g120", "", "none", "1200"},
    };
    return cat;
}

FamilyInstance family(const std::string& raw_name, i64 m, i64 p, i64 e,
                      std::optional<i64> r_override, std::optional<i64> lambda_override) {
    std::string name = raw_name;
    std::transform(name.begin(), name.end(), name.begin(), ::tolower);
    if (name == "i12^(2)" || name == "i12_2" || name == "i12(2)") name = "i12x2";
    if (name == "k66m6k2" || name == "k66minus") name = "k66-6k2";

    FamilyInstance fi;
    fi.family = name;

    auto no_params = [&](i64 vertices, i64 aut, const std::string& stab, int s,
                         const std::string& cover) {
        if (m || p || e)
            throw family_error(name + " takes no parameters");
        fi.expected = {vertices, aut, stab, s, cover};
    };

    if (name == "k6") {
        no_params(6, 720, "S_5", 2, "none");
        fi.graph = make_k6();
    } else if (name == "k55") {
        no_params(10, 28800, "S_4 x S_5", 3, "none");
        fi.graph = make_k55();
    } else if (name == "k66-6k2") {
        no_params(12, 1440, "S_5", 2, "Z_2-cover of K_6");
        fi.graph = make_k66_minus_matching();
    } else if (name == "i12") {
        no_params(12, 120, "D_5", 1, "Z_2-cover of K_6");
        fi.graph = make_icosahedron();
    } else if (name == "cgd53") {
        no_params(250, 30000, "S_5", 2, "none");
        auto d = make_cgd53();
        fi.group = d.group;
        fi.conn = d.conn;
        fi.graph = d.graph;
    } else if (name == "i12x2") {
        no_params(24, 480, "F_20", 2, "D_2-cover of K_6");
        auto d = dihedral_cayley(12, {0, -1, -2, -4, -9});
        fi.group = d.group;
        fi.conn = d.conn;
        fi.graph = d.graph;
    } else if (name == "g48") {
        // the unique order-8 covering group over K_6 is quaternion
        no_params(48, 960, "F_20", 2, "Q_8-cover of K_6");
        auto d = dihedral_cayley(24, {0, -1, -3, -11, -20});
        fi.group = d.group;
        fi.conn = d.conn;
        fi.graph = d.graph;
    } else if (name == "g60") {
        no_params(60, 600, "D_5", 1, "D_5-cover of K_6");
        fi.graph = make_g60();
    } else if (name == "g120") {
        no_params(120, 1200, "D_5", 1, "D_10-cover of K_6");
        fi.graph = make_g120();
    } else if (name == "cd") {
        if (p || e) throw family_error("cd takes only m");
        if (m < 2) throw family_error("cd requires m >= 2");
        auto roots = solve_eq1(m);
        if (roots.empty())
            throw family_error("cd: x^4+x^3+x^2+x+1 = 0 has no root mod m = " + std::to_string(m) +
                               " (m must be 5, 11 or >= 31 with every prime factor = 1 mod 5, "
                               "at most one factor 5)");
        i64 r = r_override.value_or(roots[0].value);
        r = ((r % m) + m) % m;
        if (std::find_if(roots.begin(), roots.end(),
                         [&](const Residue& x) { return x.value == r; }) == roots.end())
            throw family_error("cd: supplied r is not a root of eq1 mod m");
        fi.m = m;
        fi.r = r;
        auto d = dihedral_cayley(
            m, {0, 1, (r + 1) % m, (r * r + r + 1) % m, (((r * r) % m) * r + r * r + r + 1) % m});
        fi.group = d.group;
        fi.conn = d.conn;
        fi.graph = d.graph;
        if (m == 5)
            fi.expected = {10, 28800, "S_4 x S_5", 3, "none"};
        else if (m == 11)
            fi.expected = {22, 1320, "A_5", 2, "none"};
        else {
            std::string cover = "none";
            if (!is_prime(m)) {
                i64 q = largest_prime_factor(m);
                cover = "Z_" + std::to_string(m / q) + "-cover of CD_" + std::to_string(q);
            }
            fi.expected = {2 * m, 10 * m, "Z_5", 1, cover};
        }
    } else if (name.rfind("cgd", 0) == 0 && name.size() == 4 && name[3] >= '1' && name[3] <= '5') {
        int i = name[3] - '0';
        auto d = build_cgd(i, m, p, e, r_override, lambda_override);
        fi.m = d.m;
        fi.p = d.p;
        fi.e = d.e;
        fi.r = d.r;
        fi.lambda = d.lam;
        fi.group = d.group;
        fi.conn = d.conn;
        fi.graph = cayley(d.group, ConnectionSet::checked(d.group, d.conn));
        i64 vertices = 2 * d.m * d.pe * d.p;
        std::string base = (d.p == 5) ? "K_{5,5}" : "CD_" + std::to_string(d.p);
        std::string cover = "Z_" + std::to_string(d.m * d.pe) + "-cover of " + base;
        if (i == 4 && d.p % 5 == 4)
            cover = "bi-Cayley over Z_" + std::to_string(d.m * d.p) + " x Z_" +
                    std::to_string(d.p) + " (not a cover of an order-2p graph)";
        if (i == 4 && d.m == 1 && d.p == 5)
            fi.expected = {50, 4000, "F_20 x Z_4", 3, cover};
        else if (i == 4 && (d.m == 1 || d.m == 5))
            fi.expected = {vertices, 20 * d.m * d.p * d.p, "D_5", 1, cover};
        else
            fi.expected = {vertices, 10 * d.m * d.pe * d.p, "Z_5", 1, cover};
    } else {
        throw family_error("unknown family '" + raw_name + "'");
    }

    if (regular_valency(fi.graph) != std::optional<int>(5))
        throw family_error(name + ": constructed graph is not pentavalent");
    if (!is_connected(fi.graph)) throw family_error(name + ": constructed graph is disconnected");
    if (fi.expected.vertices != fi.graph.vertex_count())
        throw family_error(name + ": vertex count mismatch");
    return fi;
}

namespace {

CgdData rebuild_cgd(const FamilyInstance& fi) {
    return build_cgd(fi.family[3] - '0', fi.m, fi.p, fi.e, fi.r, fi.lambda);
}

} // namespace

PermGroup canonical_arc_group(const FamilyInstance& fi, bool with_beta) {
    if (!fi.group || !(fi.is_cgd() || fi.family == "cd"))
        throw family_error("canonical_arc_group: only cgd/cd families carry one");
    const GDihGroup& G = *fi.group;

    std::vector<GDihAut> auts;
    if (fi.is_cgd()) {
        CgdData d = rebuild_cgd(fi);
        auts.push_back(d.alpha);
        if (d.beta && with_beta) auts.push_back(*d.beta);
    } else {
        // alpha: a -> a^r, b -> ab
        auts.push_back(GDihAut{{AVec{fi.r}}, AVec{1}});
    }

    auto reg = regular_generators(G);
    PermGroup arc;
    arc.degree = fi.graph.vertex_count();
    for (auto& [t, perm] : reg) arc.gens.push_back(perm);

    i64 aut_part = 1;
    std::vector<Perm> aut_perms;
    for (const auto& a : auts) {
        Perm pa = a.as_perm(G);
        if (!is_automorphism(fi.graph, pa))
            throw family_error("canonical_arc_group: constructed map is not a graph "
                               "automorphism (implementation bug)");
        if (pa[0] != 0)
            throw family_error("canonical_arc_group: automorphism moves the identity vertex");
        // conjugation carries R(x) to R(x^alpha): alpha normalizes R(G)
        Perm pai = pa.inverse();
        for (auto& [t, perm] : reg) {
            Perm lhs = pai.then(perm).then(pa);
            Perm rhs = right_mult_perm(G, a.apply(G, t));
            if (lhs != rhs)
                throw family_error("canonical_arc_group: automorphism fails to normalize R(G)");
        }
        aut_perms.push_back(std::move(pa));
    }

    if (aut_perms.size() == 1) {
        Perm p5 = aut_perms[0];
        for (int k = 1; k < 5; ++k) p5 = p5.then(aut_perms[0]);
        if (!p5.is_identity() || aut_perms[0].is_identity())
            throw family_error("canonical_arc_group: alpha does not have order 5");
        aut_part = 5;
    } else {
        PermGroup small;
        small.degree = arc.degree;
        small.gens = aut_perms;
        small = close(small, 1000);
        if (identify(fingerprint(small)) != "D_5")
            throw family_error("canonical_arc_group: <alpha, beta> is not D_5");
        aut_part = small.order();
    }

    for (auto& pa : aut_perms) arc.gens.push_back(std::move(pa));
    // R(G) is semiregular and every aut fixes vertex 0, so the product
    // R(G) <alpha(,beta)> has order |G| * aut_part exactly.
    arc.known_order = G.order() * aut_part;
    return arc;
}

std::optional<PermGroup> canonical_cover_subgroup(const FamilyInstance& fi) {
    if (!fi.group) throw family_error("canonical_cover_subgroup: not a Cayley family");
    const GDihGroup& G = *fi.group;

    std::vector<GDihElement> subgens;
    i64 expected_order;

    if (fi.family == "cd") {
        if (is_prime(fi.m))
            throw family_error("canonical_cover_subgroup: cd with prime m is a basic graph");
        i64 q = largest_prime_factor(fi.m);
        subgens.push_back(G.make({q}, 0));
        expected_order = fi.m / q;
    } else if (fi.is_cgd()) {
        int i = fi.family[3] - '0';
        i64 m = fi.m, p = fi.p, pe = pow_i64(fi.p, fi.e);
        i64 lam = fi.lambda, lp = lam % p;
        i64 l2 = lp * lp % p, l3 = l2 * lp % p, l4 = l3 * lp % p;
        i64 bexp, cexp;
        if (i == 1) {
            bexp = 5 % pe;
            cexp = ((3 * l4 + 2 * l2 - lp + 1) % p + p) % p;
        } else if (i == 2) {
            bexp = (pe - 5 % pe) % pe;
            cexp = (2 * l3 + 4 * l2 + lp + 3) % p;
        } else if (i == 3) {
            bexp = (pe - 5 % pe) % pe;
            cexp = (4 * l3 + 3 * l2 + 2 * lp + 1) % p;
        } else if (i == 4) {
            if (p == 5) {
                bexp = 2;
                cexp = 4;
            } else {
                auto qroots = poly_roots(ModPoly({5, 0, 10, 0, 1}, p));
                if (qroots.empty()) {
                    if (p % 5 == 4) return std::nullopt; // 5 | (p+1): not a 2p cover
                    throw family_error("canonical_cover_subgroup: quartic has no root mod p");
                }
                i64 t = qroots[0].value;
                i64 target = ((2 * lam - 5) % p + p) % p;
                i64 w;
                if (t * t % p == target) {
                    w = t;
                } else {
                    i64 u = inv_mod(2, p) * ((t + 5 * inv_mod(t, p)) % p) % p;
                    if (u * u % p != target)
                        throw family_error("canonical_cover_subgroup: neither case of the "
                                           "2 lambda - 5 square split holds");
                    w = u;
                }
                bexp = (w + 1) % p;
                cexp = ((lam - 3) % p + p) % p;
            }
        } else {
            i64 t = 2 * inv_mod((l2 + 5) % p, p) % p;
            bexp = ((t * ((l3 + 10 * lp + 5) % p) - (lp + 3)) % p + p) % p;
            cexp = 4 % p;
        }
        if (m > 1) subgens.push_back(G.make({1, 0, 0}, 0));
        subgens.push_back(G.make({0, bexp, cexp}, 0));
        expected_order = m * pe;
    } else {
        throw family_error("canonical_cover_subgroup: only cgd/cd families carry one");
    }

    PermGroup N;
    N.degree = fi.graph.vertex_count();
    for (const auto& t : subgens) N.gens.push_back(right_mult_perm(G, t));
    N = close(N, 10'000);

    if (N.order() != expected_order)
        throw family_error("canonical_cover_subgroup: order " + std::to_string(N.order()) +
                           " != expected " + std::to_string(expected_order));
    bool cyclic = false;
    N.closure->for_each([&](const Perm& q) {
        if (q.order() == N.order()) cyclic = true;
    });
    if (!cyclic) throw family_error("canonical_cover_subgroup: subgroup is not cyclic");
    if (!is_semiregular(N))
        throw family_error("canonical_cover_subgroup: subgroup is not semiregular");

    // Normality holds in <R(G), alpha_i>.  beta (present in the full
    // canonical arc group of cgd4 at m in {1,5}) need not normalize N_4
    // and is left out here.
    PermGroup arc = canonical_arc_group(fi, false);
    for (const auto& g : arc.gens) {
        Perm gi = g.inverse();
        for (const auto& k : N.gens)
            if (!N.closure->contains(gi.then(k).then(g)))
                throw family_error("canonical_cover_subgroup: not normal in the arc group");
    }
    return N;
}

Graph cover_base_graph(const FamilyInstance& fi) {
    if (fi.is_cgd()) return fi.p == 5 ? family("k55").graph : family("cd", fi.p).graph;
    if (fi.family == "cd") {
        if (is_prime(fi.m)) throw family_error("cover_base_graph: cd with prime m is basic");
        return family("cd", largest_prime_factor(fi.m)).graph;
    }
    if (fi.family == "i12x2" || fi.family == "g48" || fi.family == "g60" ||
        fi.family == "g120" || fi.family == "i12" || fi.family == "k66-6k2")
        return family("k6").graph;
    throw family_error("cover_base_graph: " + fi.family + " is not one of the covers");
}

std::vector<AVec> bicayley_connection(const FamilyInstance& fi) {
    if (!fi.group || fi.conn.size() != 5)
        throw family_error("bicayley_connection: needs a Cayley family over Dih(H)");
    const AbelianGroup& H = fi.group->base();
    std::vector<AVec> S;
    for (const auto& s : fi.conn) {
        if (s.flip != 1) throw family_error("bicayley_connection: connection set is not bipartite");
        S.push_back(H.neg(s.vec));
    }
    return S;
}

AbelianAut alpha_restriction(const FamilyInstance& fi) {
    if (!fi.is_cgd()) throw family_error("alpha_restriction: cgd families only");
    CgdData d = rebuild_cgd(fi);
    return AbelianAut{d.alpha.gen_images};
}

BiCayleyStructureCheck check_bicayley_structure(const FamilyInstance& fi) {
    if (!fi.is_cgd() || !fi.group)
        throw family_error("check_bicayley_structure: cgd families only");
    const AbelianGroup& H = fi.group->base();
    auto S = bicayley_connection(fi);
    AbelianAut alpha = alpha_restriction(fi);
    BiCayleyStructureCheck out;
    i64 mpe = fi.m * pow_i64(fi.p, fi.e);
    out.order_a = H.elem_order(S[1]) == mpe;
    out.p_divides_order_b = H.elem_order(S[2]) % fi.p == 0;
    out.a_b_generate = H.generates({S[1], S[2]});
    out.eq2 = alpha.apply(H, S[1]) == H.sub(S[2], S[1]) &&
              alpha.apply(H, S[2]) == H.sub(S[3], S[1]) &&
              alpha.apply(H, S[3]) == H.sub(S[4], S[1]) &&
              alpha.apply(H, S[4]) == H.neg(S[1]);
    return out;
}

std::vector<int> hexagon_witness(const FamilyInstance& fi) {
    if (!fi.is_cgd()) throw family_error("hexagon_witness: cgd families only");
    const GDihGroup& G = *fi.group;
    int i = fi.family[3] - '0';
    i64 r = fi.r, lam = fi.lambda;
    std::vector<GDihElement> cyc;
    if (i <= 3) {
        cyc = {G.identity(),
               G.make({0, 0, 0}, 1),
               G.make({-r - 1, -lam - 1, -1}, 0),
               h_word(G, {-r, -lam, -1}),
               G.make({-r, -lam, -1}, 0),
               h_word(G, {1, 1, 0})};
    } else {
        cyc = {G.identity(),
               G.make({0, 0, 0}, 1),
               G.make({-r - 1, 0, -1}, 0),
               h_word(G, {-r, 1, -1}),
               G.make({-r, 1, -1}, 0),
               h_word(G, {1, 1, 0})};
    }
    std::vector<int> out;
    for (const auto& x : cyc) out.push_back(static_cast<int>(G.rank_of(x)));
    return out;
}

} // namespace pentacover
