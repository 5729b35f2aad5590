#include "pentacover/symmetry.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <deque>
#include <map>
#include <set>
#include <unordered_set>

namespace pentacover {

bool is_automorphism(const Graph& g, const Perm& p) {
    if (p.degree() != g.vertex_count()) return false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(p[v]) != g.degree(v)) return false;
        for (int u : g.neighbors(v))
            if (!g.adjacent(p[v], p[u])) return false;
    }
    return true;
}

bool is_isomorphism(const Graph& g1, const Graph& g2, const Perm& p) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() ||
        p.degree() != g1.vertex_count())
        return false;
    for (int v = 0; v < g1.vertex_count(); ++v) {
        if (g2.degree(p[v]) != g1.degree(v)) return false;
        for (int u : g1.neighbors(v))
            if (!g2.adjacent(p[v], p[u])) return false;
    }
    return true;
}

namespace {

// ---- matched partition refinement -----------------------------------
//
// Ordered partitions of both graphs are kept positionally aligned: cell
// c occupies the same interval [cstart[c], cstart[c]+csize[c]) on both
// sides.  Refinement splits aligned cells by neighbor counts into a
// worklist cell; fragments are ordered by count, and any disagreement
// in the count distributions kills the node.  Every map respecting the
// alignment survives refinement, so exhausting the branch candidates
// certifies absence.

struct SidePartition {
    std::vector<int> pos;
    std::vector<int> vpos;
    std::vector<int> cell_of;
};

struct PairState {
    SidePartition a, b;
    std::vector<int> cstart;
    std::vector<int> csize;
};

PairState initial_state(int n) {
    PairState st;
    st.a.pos.resize(n);
    st.b.pos.resize(n);
    for (int i = 0; i < n; ++i) st.a.pos[i] = st.b.pos[i] = i;
    st.a.vpos = st.a.pos;
    st.b.vpos = st.b.pos;
    st.a.cell_of.assign(n, 0);
    st.b.cell_of.assign(n, 0);
    st.cstart = {0};
    st.csize = {n};
    return st;
}

class Refiner {
public:
    Refiner(const Graph& ga, const Graph& gb)
        : ga_(ga), gb_(gb), cnt_a_(ga.vertex_count(), 0), cnt_b_(gb.vertex_count(), 0) {}

    const Graph& graph_a() const { return ga_; }
    const Graph& graph_b() const { return gb_; }

    /// Refine to a stable matched partition; false = sides disagree.
    bool refine(PairState& st, std::deque<int> worklist) {
        while (!worklist.empty()) {
            int c = worklist.front();
            worklist.pop_front();
            int start = st.cstart[c], size = st.csize[c];
            splitter_a_.assign(st.a.pos.begin() + start, st.a.pos.begin() + start + size);
            splitter_b_.assign(st.b.pos.begin() + start, st.b.pos.begin() + start + size);

            touched_.clear();
            for (int v : splitter_a_)
                for (int u : ga_.neighbors(v)) {
                    if (cnt_a_[u] == 0 && cnt_b_[u] == 0) touched_.push_back(u);
                    ++cnt_a_[u];
                }
            for (int v : splitter_b_)
                for (int u : gb_.neighbors(v)) {
                    if (cnt_a_[u] == 0 && cnt_b_[u] == 0) touched_.push_back(u);
                    ++cnt_b_[u];
                }

            // cells owning touched vertices (on either side)
            affected_.clear();
            for (int u : touched_) {
                if (cnt_a_[u] > 0 && !mark_cell(st.a.cell_of[u])) affected_.push_back(st.a.cell_of[u]);
                if (cnt_b_[u] > 0 && !mark_cell(st.b.cell_of[u])) affected_.push_back(st.b.cell_of[u]);
            }
            std::sort(affected_.begin(), affected_.end(),
                      [&](int x, int y) { return st.cstart[x] < st.cstart[y]; });

            bool ok = true;
            for (int cid : affected_) {
                unmark_cell(cid);
                if (!split_cell(st, cid, worklist)) {
                    ok = false;
                    break;
                }
            }
            for (int cid : affected_) unmark_cell(cid);
            for (int v : splitter_a_)
                for (int u : ga_.neighbors(v)) cnt_a_[u] = 0;
            for (int v : splitter_b_)
                for (int u : gb_.neighbors(v)) cnt_b_[u] = 0;
            if (!ok) return false;
        }
        return true;
    }

private:
    bool mark_cell(int c) {
        if (static_cast<size_t>(c) >= cell_mark_.size()) cell_mark_.resize(c + 1, 0);
        if (cell_mark_[c]) return true;
        cell_mark_[c] = 1;
        return false;
    }
    void unmark_cell(int c) {
        if (static_cast<size_t>(c) < cell_mark_.size()) cell_mark_[c] = 0;
    }

    bool split_cell(PairState& st, int c, std::deque<int>& worklist) {
        int start = st.cstart[c], size = st.csize[c];
        if (size == 1) return cnt_a_[st.a.pos[start]] == cnt_b_[st.b.pos[start]];

        auto key_a = [&](int v) { return cnt_a_[v]; };
        auto key_b = [&](int v) { return cnt_b_[v]; };
        std::stable_sort(st.a.pos.begin() + start, st.a.pos.begin() + start + size,
                         [&](int x, int y) { return key_a(x) < key_a(y); });
        std::stable_sort(st.b.pos.begin() + start, st.b.pos.begin() + start + size,
                         [&](int x, int y) { return key_b(x) < key_b(y); });

        // compare count runs and cut fragments
        int i = start;
        bool first = true;
        bool split = false;
        while (i < start + size) {
            int va = st.a.pos[i], vb = st.b.pos[i];
            if (key_a(va) != key_b(vb)) return false;
            int j = i;
            while (j < start + size && key_a(st.a.pos[j]) == key_a(va) &&
                   key_b(st.b.pos[j]) == key_b(vb))
                ++j;
            if (j < start + size &&
                (key_a(st.a.pos[j]) == key_a(va)) != (key_b(st.b.pos[j]) == key_b(vb)))
                return false; // run lengths differ
            int cid;
            if (first) {
                cid = c;
                st.csize[c] = j - i;
                first = false;
                split = (j - i) != size;
            } else {
                cid = static_cast<int>(st.cstart.size());
                st.cstart.push_back(i);
                st.csize.push_back(j - i);
                split = true;
            }
            for (int k = i; k < j; ++k) {
                st.a.cell_of[st.a.pos[k]] = cid;
                st.b.cell_of[st.b.pos[k]] = cid;
                st.a.vpos[st.a.pos[k]] = k;
                st.b.vpos[st.b.pos[k]] = k;
            }
            if (split) worklist.push_back(cid);
            i = j;
        }
        return true;
    }

    const Graph& ga_;
    const Graph& gb_;
    std::vector<int> cnt_a_, cnt_b_;
    std::vector<int> splitter_a_, splitter_b_, touched_, affected_;
    std::vector<char> cell_mark_;
};

/// Target cell: smallest non-singleton, earliest on tie; -1 if discrete.
int target_cell(const PairState& st) {
    int best = -1;
    for (size_t c = 0; c < st.cstart.size(); ++c) {
        if (st.csize[c] < 2) continue;
        if (best == -1 || st.csize[c] < st.csize[best] ||
            (st.csize[c] == st.csize[best] && st.cstart[c] < st.cstart[best]))
            best = static_cast<int>(c);
    }
    return best;
}

int min_member_a(const PairState& st, int c) {
    int m = st.a.pos[st.cstart[c]];
    for (int i = st.cstart[c]; i < st.cstart[c] + st.csize[c]; ++i)
        m = std::min(m, st.a.pos[i]);
    return m;
}

std::vector<int> members_b(const PairState& st, int c) {
    std::vector<int> out(st.b.pos.begin() + st.cstart[c],
                         st.b.pos.begin() + st.cstart[c] + st.csize[c]);
    std::sort(out.begin(), out.end());
    return out;
}

/// Split v (side a) and w (side b) out of their shared cell; the
/// singleton becomes a fresh cell at the front of the interval.
void individualize(PairState& st, int v, int w, std::deque<int>& worklist) {
    int c = st.a.cell_of[v];
    int start = st.cstart[c];
    {
        int pv = st.a.vpos[v];
        std::swap(st.a.pos[start], st.a.pos[pv]);
        st.a.vpos[st.a.pos[pv]] = pv;
        st.a.vpos[v] = start;
    }
    {
        int pw = st.b.vpos[w];
        std::swap(st.b.pos[start], st.b.pos[pw]);
        st.b.vpos[st.b.pos[pw]] = pw;
        st.b.vpos[w] = start;
    }
    int nc = static_cast<int>(st.cstart.size());
    st.cstart.push_back(start);
    st.csize.push_back(1);
    st.a.cell_of[v] = nc;
    st.b.cell_of[w] = nc;
    st.cstart[c] = start + 1;
    st.csize[c] -= 1;
    worklist.push_back(nc);
    if (st.csize[c] > 0) worklist.push_back(c);
}

struct SearchContext {
    Refiner refiner;
    i64 nodes = 0;
    i64 max_nodes;

    SearchContext(const Graph& ga, const Graph& gb, const SearchBudget& b)
        : refiner(ga, gb), max_nodes(b.max_nodes) {}

    void count_node() {
        if (++nodes > max_nodes)
            throw search_budget_error("search budget exceeded: " + std::to_string(nodes) +
                                      " backtrack nodes (cap " + std::to_string(max_nodes) + ")");
    }

    /// Depth-first search for a single alignment-respecting map.
    bool find_map(PairState& st, Perm* out) {
        count_node();
        int c = target_cell(st);
        if (c < 0) {
            int n = refiner.graph_a().vertex_count();
            std::vector<int> img(n);
            for (int i = 0; i < n; ++i) img[st.a.pos[i]] = st.b.pos[i];
            Perm phi(std::move(img));
            if (!is_isomorphism(refiner.graph_a(), refiner.graph_b(), phi)) return false;
            if (out) *out = std::move(phi);
            return true;
        }
        int v = min_member_a(st, c);
        for (int w : members_b(st, c)) {
            PairState st2 = st;
            std::deque<int> wl;
            individualize(st2, v, w, wl);
            if (refiner.refine(st2, std::move(wl)) && find_map(st2, out)) return true;
        }
        return false;
    }
};

std::vector<int> orbit_closure(int n, int seed, const std::vector<Perm>& gens) {
    std::vector<char> in(n, 0);
    std::vector<int> orbit{seed};
    in[seed] = 1;
    for (size_t i = 0; i < orbit.size(); ++i)
        for (const auto& g : gens) {
            int w = g[orbit[i]];
            if (!in[w]) {
                in[w] = 1;
                orbit.push_back(w);
            }
        }
    return orbit;
}

struct LevelResult {
    i64 order = 1;
    std::vector<Perm> gens;
    std::vector<Perm> sub_gens; // generators of the next level down
};

/// Orbit-stabilizer recursion over the refinement base:
/// |Stab(prefix)| = |orbit of v| * |Stab(prefix + v)|, with the orbit
/// settled by complete searches for each candidate cell member.
LevelResult stabilizer_chain(SearchContext& ctx, const PairState& st) {
    int c = target_cell(st);
    if (c < 0) return {};
    int v = min_member_a(st, c);
    std::vector<int> candidates = members_b(st, c);

    PairState stv = st;
    std::deque<int> wl;
    individualize(stv, v, v, wl);
    if (!ctx.refiner.refine(stv, std::move(wl)))
        throw graph_error("internal: identity-consistent refinement failed");
    LevelResult sub = stabilizer_chain(ctx, stv);

    LevelResult out;
    out.gens = sub.gens;
    out.sub_gens = sub.gens;
    int n = ctx.refiner.graph_a().vertex_count();
    std::vector<int> orbit = orbit_closure(n, v, out.gens);
    for (int w : candidates) {
        if (w == v || std::find(orbit.begin(), orbit.end(), w) != orbit.end()) continue;
        PairState stw = st;
        std::deque<int> wl2;
        individualize(stw, v, w, wl2);
        Perm phi;
        if (ctx.refiner.refine(stw, std::move(wl2)) && ctx.find_map(stw, &phi)) {
            out.gens.push_back(std::move(phi));
            orbit = orbit_closure(n, v, out.gens);
        }
    }
    out.order = static_cast<i64>(orbit.size()) * sub.order;
    return out;
}

} // namespace

AutResult automorphism_group(const Graph& g, const SearchBudget& budget) {
    int n = g.vertex_count();
    if (n < 1) throw graph_error("automorphism_group: empty graph");
    if (n > 10'000) throw graph_error("automorphism_group: graph too large for this engine");
    if (!is_connected(g)) throw graph_error("automorphism_group: graph must be connected");

    SearchContext ctx(g, g, budget);
    PairState root = initial_state(n);
    std::deque<int> wl{0};
    if (!ctx.refiner.refine(root, std::move(wl)))
        throw graph_error("internal: self-refinement failed");

    AutResult res;
    int c = target_cell(root);
    if (c < 0) {
        res.order = 1;
        res.base_vertex = 0;
        return res;
    }
    res.base_vertex = min_member_a(root, c);

    LevelResult top = stabilizer_chain(ctx, root);
    res.order = top.order;
    res.generators = top.gens;
    res.stabilizer_gens = top.sub_gens;
    for (const auto& p : res.generators)
        if (!is_automorphism(g, p))
            throw graph_error("internal: emitted generator failed verification");
    return res;
}

std::optional<Perm> are_isomorphic(const Graph& g1, const Graph& g2,
                                   const SearchBudget& budget) {
    if (g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count())
        return std::nullopt;
    std::vector<int> d1, d2;
    for (int v = 0; v < g1.vertex_count(); ++v) d1.push_back(g1.degree(v));
    for (int v = 0; v < g2.vertex_count(); ++v) d2.push_back(g2.degree(v));
    std::sort(d1.begin(), d1.end());
    std::sort(d2.begin(), d2.end());
    if (d1 != d2) return std::nullopt;
    if (g1.vertex_count() == 0) return Perm::identity(0);

    SearchContext ctx(g1, g2, budget);
    PairState root = initial_state(g1.vertex_count());
    std::deque<int> wl{0};
    if (!ctx.refiner.refine(root, std::move(wl))) return std::nullopt;
    Perm phi;
    if (ctx.find_map(root, &phi)) {
        if (!is_isomorphism(g1, g2, phi))
            throw graph_error("internal: emitted isomorphism failed verification");
        return phi;
    }
    return std::nullopt;
}

namespace {

// s-arcs of a pentavalent graph packed into one integer: start vertex
// then 3-bit neighbor indexes per step.
uint64_t encode_walk(const Graph& g, const std::vector<int>& walk) {
    uint64_t code = static_cast<uint64_t>(walk[0]);
    for (size_t i = 1; i < walk.size(); ++i) {
        const auto& nb = g.neighbors(walk[i - 1]);
        auto it = std::lower_bound(nb.begin(), nb.end(), walk[i]);
        code = (code << 3) | static_cast<uint64_t>(it - nb.begin());
    }
    return code;
}

i64 count_s_arcs(const Graph& g, int s) {
    // valency 5, non-backtracking: n * 5 * 4^(s-1)
    i64 c = static_cast<i64>(g.vertex_count()) * 5;
    for (int i = 1; i < s; ++i) c *= 4;
    return c;
}

bool transitive_on_s_arcs(const Graph& g, const std::vector<Perm>& gens, int s) {
    std::vector<int> walk{0, g.neighbors(0)[0]};
    while (static_cast<int>(walk.size()) < s + 1) {
        int prev = walk[walk.size() - 2], cur = walk.back();
        for (int u : g.neighbors(cur))
            if (u != prev) {
                walk.push_back(u);
                break;
            }
    }
    std::unordered_set<uint64_t> seen{encode_walk(g, walk)};
    std::vector<std::vector<int>> frontier{walk};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& t : frontier)
            for (const auto& p : gens) {
                std::vector<int> im(t.size());
                for (size_t i = 0; i < t.size(); ++i) im[i] = p[t[i]];
                if (seen.insert(encode_walk(g, im)).second) next.push_back(std::move(im));
            }
        frontier = std::move(next);
    }
    return static_cast<i64>(seen.size()) == count_s_arcs(g, s);
}

} // namespace

bool is_arc_transitive(const Graph& g, const AutResult& A) {
    if (g.edge_count() == 0) return false;
    int start = 0;
    while (g.degree(start) == 0) ++start;
    std::vector<int> arc{start, g.neighbors(start)[0]};
    std::unordered_set<uint64_t> seen;
    uint64_t n = g.vertex_count();
    seen.insert(static_cast<uint64_t>(arc[0]) * n + arc[1]);
    std::vector<std::array<int, 2>> frontier{{arc[0], arc[1]}};
    while (!frontier.empty()) {
        std::vector<std::array<int, 2>> next;
        for (const auto& t : frontier)
            for (const auto& p : A.generators) {
                std::array<int, 2> im{p[t[0]], p[t[1]]};
                if (seen.insert(static_cast<uint64_t>(im[0]) * n + im[1]).second)
                    next.push_back(im);
            }
        frontier = std::move(next);
    }
    return static_cast<i64>(seen.size()) == 2 * g.edge_count();
}

int s_transitivity(const Graph& g, const AutResult& A) {
    if (regular_valency(g) != std::optional<int>(5))
        throw graph_error("s_transitivity: graph must be pentavalent");
    if (!is_arc_transitive(g, A)) throw graph_error("s_transitivity: graph is not arc-transitive");
    int s = 1;
    while (s < 5 && transitive_on_s_arcs(g, A.generators, s + 1)) ++s;

    // stabilizer order must be admissible for this s
    static const std::map<int, std::set<i64>> admissible = {
        {1, {5, 10, 20}},
        {2, {20, 40, 60, 120}},
        {3, {80, 720, 2880, 1440}},
        {4, {960, 2880, 1920, 5760}},
        {5, {23040}}};
    i64 stab = A.order / g.vertex_count();
    if (!admissible.at(s).count(stab))
        throw graph_error("s_transitivity: stabilizer order " + std::to_string(stab) +
                          " is not admissible for s = " + std::to_string(s));
    return s;
}

PermGroup vertex_stabilizer(const Graph& g, const AutResult& A, int v) {
    std::vector<Perm> gens = A.stabilizer_gens;
    if (v != A.base_vertex) {
        // transversal element mapping base_vertex to v
        int n = g.vertex_count();
        std::vector<int> from(n, -1);
        std::vector<Perm> reach(n);
        std::deque<int> q{A.base_vertex};
        from[A.base_vertex] = A.base_vertex;
        reach[A.base_vertex] = Perm::identity(n);
        while (!q.empty() && from[v] == -1) {
            int x = q.front();
            q.pop_front();
            for (const auto& p : A.generators) {
                int y = p[x];
                if (from[y] == -1) {
                    from[y] = x;
                    reach[y] = reach[x].then(p);
                    q.push_back(y);
                }
            }
        }
        if (from[v] == -1)
            throw graph_error("vertex_stabilizer: vertex not in the orbit of the base");
        Perm t = reach[v];
        Perm ti = t.inverse();
        for (auto& s : gens) s = ti.then(s).then(t);
    }
    PermGroup out;
    out.degree = g.vertex_count();
    if (gens.empty()) gens.push_back(Perm::identity(g.vertex_count()));
    out.gens = std::move(gens);
    return close(out, 100'000);
}

namespace {

std::vector<double> jacobi_spectrum(const Graph& g) {
    int n = g.vertex_count();
    std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
    for (int v = 0; v < n; ++v)
        for (int u : g.neighbors(v)) a[static_cast<size_t>(v) * n + u] = 1.0;
    auto at = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) off += at(i, j) * at(i, j);
        if (off < 1e-22) break;
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                double apq = at(p, q);
                if (std::abs(apq) < 1e-15) continue;
                double theta = (at(q, q) - at(p, p)) / (2 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1));
                double c = 1 / std::sqrt(t * t + 1), s = t * c;
                for (int k = 0; k < n; ++k) {
                    double akp = at(k, p), akq = at(k, q);
                    at(k, p) = c * akp - s * akq;
                    at(k, q) = s * akp + c * akq;
                }
                for (int k = 0; k < n; ++k) {
                    double apk = at(p, k), aqk = at(q, k);
                    at(p, k) = c * apk - s * aqk;
                    at(q, k) = s * apk + c * aqk;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = std::round(at(i, i) * 1e9) / 1e9;
    std::sort(eig.begin(), eig.end());
    return eig;
}

} // namespace

GraphInvariants graph_invariants(const Graph& g) {
    GraphInvariants inv;
    inv.n = g.vertex_count();
    for (int v = 0; v < inv.n; ++v) inv.degree_multiset.push_back(g.degree(v));
    std::sort(inv.degree_multiset.begin(), inv.degree_multiset.end());
    try {
        inv.girth = girth(g);
    } catch (const graph_error&) {
        inv.girth = 0;
    }
    for (int v = 0; v < inv.n; ++v) {
        auto d = bfs_distances(g, v);
        int maxd = 0;
        for (int x : d) maxd = std::max(maxd, x);
        std::vector<int> profile(maxd + 2, 0);
        for (int x : d)
            if (x >= 0)
                ++profile[x];
            else
                ++profile[maxd + 1]; // unreachable bucket
        inv.distance_profiles.push_back(std::move(profile));
    }
    std::sort(inv.distance_profiles.begin(), inv.distance_profiles.end());
    if (inv.n <= 256) inv.spectrum = jacobi_spectrum(g);
    return inv;
}

bool invariants_match(const GraphInvariants& a, const GraphInvariants& b) {
    if (a.n != b.n || a.degree_multiset != b.degree_multiset || a.girth != b.girth ||
        a.distance_profiles != b.distance_profiles)
        return false;
    if (!a.spectrum.empty() && !b.spectrum.empty()) {
        for (size_t i = 0; i < a.spectrum.size(); ++i)
            if (std::abs(a.spectrum[i] - b.spectrum[i]) > 1e-6) return false;
    }
    return true;
}

} // namespace pentacover
