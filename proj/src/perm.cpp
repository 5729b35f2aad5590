#include "pentacover/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace pentacover {

Perm Perm::identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    return Perm(std::move(v));
}

Perm::Perm(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int x : img_) {
        if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
            throw group_error("Perm: image list is not a bijection");
        seen[x] = 1;
    }
}

Perm Perm::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 0);
    for (const auto& cyc : cycles)
        for (size_t i = 0; i < cyc.size(); ++i) v[cyc[i]] = cyc[(i + 1) % cyc.size()];
    return Perm(std::move(v));
}

bool Perm::is_identity() const {
    for (int i = 0; i < degree(); ++i)
        if (img_[i] != i) return false;
    return true;
}

Perm Perm::inverse() const {
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[img_[i]] = i;
    return Perm(std::move(v));
}

Perm Perm::then(const Perm& other) const {
    if (degree() != other.degree()) throw group_error("Perm: degree mismatch");
    std::vector<int> v(img_.size());
    for (int i = 0; i < degree(); ++i) v[i] = other.img_[img_[i]];
    return Perm(std::move(v));
}

i64 Perm::order() const {
    std::vector<char> seen(img_.size(), 0);
    i64 ord = 1;
    for (int i = 0; i < degree(); ++i) {
        if (seen[i]) continue;
        i64 len = 0;
        for (int j = i; !seen[j]; j = img_[j]) {
            seen[j] = 1;
            ++len;
        }
        ord = ord / gcd_i64(ord, len) * len;
    }
    return ord;
}

int Perm::fixed_points() const {
    int c = 0;
    for (int i = 0; i < degree(); ++i)
        if (img_[i] == i) ++c;
    return c;
}

bool PermClosure::contains(const Perm& p) const {
    std::vector<uint16_t> key(p.images().begin(), p.images().end());
    return index_.count(key) != 0;
}

Perm PermClosure::element(i64 i) const {
    return Perm(std::vector<int>(elems_[i].begin(), elems_[i].end()));
}

void PermClosure::insert(const Perm& p) {
    std::vector<uint16_t> key(p.images().begin(), p.images().end());
    if (index_.emplace(key, static_cast<i64>(elems_.size())).second) elems_.push_back(std::move(key));
}

PermClosure close_generators(int degree, const std::vector<Perm>& gens, i64 cap) {
    PermClosure c(degree);
    c.insert(Perm::identity(degree));
    std::vector<Perm> frontier{Perm::identity(degree)};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& x : frontier) {
            for (const auto& g : gens) {
                Perm y = x.then(g);
                std::vector<uint16_t> key(y.images().begin(), y.images().end());
                if (c.index_.emplace(key, static_cast<i64>(c.elems_.size())).second) {
                    c.elems_.push_back(std::move(key));
                    if (c.order() > cap)
                        throw closure_cap_error(
                            "close: element count exceeded cap " + std::to_string(cap),
                            c.order());
                    next.push_back(std::move(y));
                }
            }
        }
        frontier = std::move(next);
    }
    return c;
}

i64 PermGroup::order() const {
    if (closure) return closure->order();
    if (known_order) return *known_order;
    throw group_error("PermGroup::order: no closure materialized and no established order");
}

PermGroup close(const PermGroup& G, i64 cap) {
    PermGroup out = G;
    if (!out.closure)
        out.closure = std::make_shared<PermClosure>(close_generators(G.degree, G.gens, cap));
    if (out.known_order && *out.known_order != out.closure->order())
        throw group_error("close: established order contradicts closure size");
    return out;
}

PermGroup right_regular(const GDihGroup& G, i64 cap) {
    i64 n = G.order();
    if (n > cap)
        throw group_error("right_regular: group order " + std::to_string(n) +
                          " exceeds enumeration cap");
    PermGroup pg;
    pg.degree = static_cast<int>(n);
    // Right multiplication by the standard generators and the flip.
    std::vector<GDihElement> gens;
    for (int i = 0; i < G.base().rank(); ++i) {
        if (G.base().moduli()[i] == 1) continue;
        AVec e = G.base().zero();
        e[i] = 1;
        gens.push_back(G.make(e, 0));
    }
    gens.push_back(G.make(G.base().zero(), 1));
    for (const auto& t : gens) {
        std::vector<int> img(n);
        for (i64 r = 0; r < n; ++r)
            img[r] = static_cast<int>(G.rank_of(G.mul(G.unrank(r), t)));
        pg.gens.emplace_back(std::move(img));
    }
    pg.known_order = n; // regular action: order equals degree
    return pg;
}

PermGroup right_regular(const AbelianGroup& H, i64 cap) {
    i64 n = H.order();
    if (n > cap)
        throw group_error("right_regular: group order " + std::to_string(n) +
                          " exceeds enumeration cap");
    PermGroup pg;
    pg.degree = static_cast<int>(n);
    for (int i = 0; i < H.rank(); ++i) {
        if (H.moduli()[i] == 1) continue;
        AVec e = H.zero();
        e[i] = 1;
        std::vector<int> img(n);
        for (i64 r = 0; r < n; ++r) img[r] = static_cast<int>(H.rank_of(H.add(H.unrank(r), e)));
        pg.gens.emplace_back(std::move(img));
    }
    if (pg.gens.empty()) pg.gens.push_back(Perm::identity(static_cast<int>(n)));
    pg.known_order = n;
    return pg;
}

bool is_semiregular(const PermGroup& G) {
    if (!G.has_closure()) throw group_error("is_semiregular: closure missing");
    bool ok = true;
    G.closure->for_each([&](const Perm& p) {
        if (!p.is_identity() && p.fixed_points() > 0) ok = false;
    });
    return ok;
}

namespace {

bool conjugate_preserves(const Perm& g, const PermGroup& K) {
    Perm gi = g.inverse();
    for (const auto& k : K.gens)
        if (!K.closure->contains(gi.then(k).then(g))) return false;
    return true;
}

} // namespace

PermGroup normalizer(const PermGroup& A, const PermGroup& K) {
    if (!A.has_closure() || !K.has_closure())
        throw group_error("normalizer: closures missing");
    PermGroup out;
    out.degree = A.degree;
    auto cl = std::make_shared<PermClosure>(A.degree);
    A.closure->for_each([&](const Perm& g) {
        if (conjugate_preserves(g, K)) {
            cl->insert(g);
            out.gens.push_back(g);
        }
    });
    out.closure = cl;
    return out;
}

PermGroup centralizer(const PermGroup& A, const PermGroup& K) {
    if (!A.has_closure() || !K.has_closure())
        throw group_error("centralizer: closures missing");
    PermGroup out;
    out.degree = A.degree;
    auto cl = std::make_shared<PermClosure>(A.degree);
    A.closure->for_each([&](const Perm& g) {
        bool central = true;
        for (const auto& k : K.gens)
            if (g.then(k) != k.then(g)) {
                central = false;
                break;
            }
        if (central) {
            cl->insert(g);
            out.gens.push_back(g);
        }
    });
    out.closure = cl;
    return out;
}

std::vector<int> point_orbits(int degree, const std::vector<Perm>& gens, int* count) {
    std::vector<int> orbit(degree, -1);
    int nid = 0;
    std::vector<int> stack;
    for (int s = 0; s < degree; ++s) {
        if (orbit[s] != -1) continue;
        int id = nid++;
        orbit[s] = id;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (const auto& g : gens) {
                int w = g[v];
                if (orbit[w] == -1) {
                    orbit[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    if (count) *count = nid;
    return orbit;
}

std::string Fingerprint::to_string() const {
    std::ostringstream os;
    os << "order " << order << (abelian ? (cyclic ? ", cyclic" : ", abelian") : "") << ", orders {";
    bool first = true;
    for (auto [o, c] : order_histogram) {
        if (!first) os << ", ";
        os << o << ":" << c;
        first = false;
    }
    os << "}";
    return os.str();
}

Fingerprint fingerprint(const PermGroup& G, i64 cap) {
    if (!G.has_closure()) throw group_error("fingerprint: closure missing");
    if (G.closure->order() > cap)
        throw group_error("fingerprint: order exceeds cap " + std::to_string(cap));
    Fingerprint fp;
    fp.order = G.closure->order();
    i64 max_order = 1;
    G.closure->for_each([&](const Perm& p) {
        i64 o = p.order();
        fp.order_histogram[o]++;
        max_order = std::max(max_order, o);
    });
    fp.cyclic = (max_order == fp.order);
    fp.abelian = fp.cyclic;
    if (!fp.abelian) {
        fp.abelian = true;
        // pairwise commuting check on generators suffices
        for (size_t i = 0; i < G.gens.size() && fp.abelian; ++i)
            for (size_t j = i + 1; j < G.gens.size(); ++j)
                if (G.gens[i].then(G.gens[j]) != G.gens[j].then(G.gens[i])) {
                    fp.abelian = false;
                    break;
                }
    }
    return fp;
}

namespace {

PermGroup closed_from(int degree, std::vector<Perm> gens) {
    PermGroup g;
    g.degree = degree;
    g.gens = std::move(gens);
    return close(g);
}

Fingerprint fp_of(int degree, std::vector<Perm> gens) {
    return fingerprint(closed_from(degree, std::move(gens)), 30'000);
}

std::vector<std::pair<std::string, Fingerprint>> build_catalog() {
    std::vector<std::pair<std::string, Fingerprint>> cat;

    auto ncycle = [](int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = (i + 1) % n;
        return Perm(std::move(v));
    };
    auto reflection = [](int n) {
        std::vector<int> v(n);
        for (int i = 0; i < n; ++i) v[i] = (n - i) % n;
        return Perm(std::move(v));
    };

    for (int n = 1; n <= 100; ++n) cat.emplace_back("Z_" + std::to_string(n), fp_of(n, {ncycle(n)}));
    // D_n of order 2n, from n = 2 up (D_1 is just Z_2).
    cat.emplace_back("D_2", fp_of(4, {Perm::from_cycles(4, {{0, 1}, {2, 3}}),
                                      Perm::from_cycles(4, {{0, 2}, {1, 3}})}));
    for (int n = 3; n <= 100; ++n)
        cat.emplace_back("D_" + std::to_string(n), fp_of(n, {ncycle(n), reflection(n)}));

    // Q_8 by right multiplication with i and j on (1,-1,i,-i,j,-j,k,-k);
    // shows up as a covering transformation group.
    cat.emplace_back("Q_8", fp_of(8, {Perm({2, 3, 1, 0, 7, 6, 4, 5}),
                                      Perm({4, 5, 6, 7, 1, 0, 3, 2})}));

    // F_20 = AGL(1,5), x -> x+1 and x -> 2x on Z_5.
    Perm f20_a = Perm({1, 2, 3, 4, 0});
    Perm f20_b = Perm({0, 2, 4, 1, 3});
    cat.emplace_back("F_20", fp_of(5, {f20_a, f20_b}));

    auto pad = [](const Perm& p, int extra) {
        std::vector<int> v = p.images();
        int n = p.degree();
        for (int i = 0; i < extra; ++i) v.push_back(n + i);
        return Perm(std::move(v));
    };
    auto shift = [](const Perm& p, int offset, int total) {
        std::vector<int> v(total);
        std::iota(v.begin(), v.end(), 0);
        for (int i = 0; i < p.degree(); ++i) v[offset + i] = offset + p[i];
        return Perm(std::move(v));
    };

    cat.emplace_back("F_20 x Z_2",
                     fp_of(7, {pad(f20_a, 2), pad(f20_b, 2), Perm::from_cycles(7, {{5, 6}})}));
    cat.emplace_back("F_20 x Z_4",
                     fp_of(9, {pad(f20_a, 4), pad(f20_b, 4), Perm::from_cycles(9, {{5, 6, 7, 8}})}));

    Perm a5_1 = Perm::from_cycles(5, {{0, 1, 2}});
    Perm a5_2 = Perm::from_cycles(5, {{0, 1, 2, 3, 4}});
    cat.emplace_back("A_5", fp_of(5, {a5_1, a5_2}));
    Perm s5_t = Perm::from_cycles(5, {{0, 1}});
    cat.emplace_back("S_5", fp_of(5, {s5_t, a5_2}));

    Perm a4_1 = Perm::from_cycles(4, {{0, 1, 2}});
    Perm a4_2 = Perm::from_cycles(4, {{0, 1}, {2, 3}});
    cat.emplace_back("A_4 x A_5", fp_of(9, {pad(a4_1, 5), pad(a4_2, 5), shift(a5_1, 4, 9),
                                            shift(a5_2, 4, 9)}));
    cat.emplace_back("S_4 x S_5",
                     fp_of(9, {pad(a4_1, 5), pad(Perm::from_cycles(4, {{0, 1}}), 5),
                               shift(a5_1, 4, 9), shift(s5_t, 4, 9), shift(a5_2, 4, 9)}));
    // index-2 subgroup of S_4 x S_5 with matching signs
    cat.emplace_back("(A_4 x A_5) x| Z_2",
                     fp_of(9, {pad(a4_1, 5), pad(a4_2, 5), shift(a5_1, 4, 9), shift(a5_2, 4, 9),
                               Perm::from_cycles(9, {{0, 1}, {4, 5}})}));
    return cat;
}

} // namespace

const std::vector<std::pair<std::string, Fingerprint>>& fingerprint_catalog() {
    static const std::vector<std::pair<std::string, Fingerprint>> cat = build_catalog();
    return cat;
}

std::string identify(const Fingerprint& fp) {
    for (const auto& [label, cfp] : fingerprint_catalog())
        if (cfp == fp) return label;
    return "unrecognized";
}

std::string perms_to_text(const std::vector<Perm>& ps) {
    std::ostringstream os;
    for (const auto& p : ps) {
        for (int i = 0; i < p.degree(); ++i) {
            if (i) os << ' ';
            os << p[i];
        }
        os << '\n';
    }
    return os.str();
}

std::vector<Perm> perms_from_text(const std::string& text) {
    std::vector<Perm> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> v;
        int x;
        while (ls >> x) v.push_back(x);
        out.emplace_back(std::move(v));
    }
    return out;
}

} // namespace pentacover
