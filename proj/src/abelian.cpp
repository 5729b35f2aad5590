#include "pentacover/abelian.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_set>

namespace pentacover {

AbelianGroup::AbelianGroup(std::vector<i64> moduli) : moduli_(std::move(moduli)) {
    if (moduli_.empty()) throw group_error("AbelianGroup: empty modulus list");
    order_ = 1;
    for (i64 d : moduli_) {
        if (d < 1) throw group_error("AbelianGroup: moduli must be positive");
        order_ *= d;
    }
}

AVec AbelianGroup::normalized(AVec v) const {
    if (v.size() != moduli_.size()) throw group_error("AbelianGroup: rank mismatch");
    for (size_t i = 0; i < v.size(); ++i) {
        v[i] %= moduli_[i];
        if (v[i] < 0) v[i] += moduli_[i];
    }
    return v;
}

AVec AbelianGroup::add(const AVec& a, const AVec& b) const {
    AVec r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = (a[i] + b[i]) % moduli_[i];
    return r;
}

AVec AbelianGroup::neg(const AVec& a) const {
    AVec r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) r[i] = a[i] == 0 ? 0 : moduli_[i] - a[i];
    return r;
}

AVec AbelianGroup::sub(const AVec& a, const AVec& b) const { return add(a, neg(b)); }

AVec AbelianGroup::scale(const AVec& a, i64 k) const {
    AVec r(moduli_.size());
    for (size_t i = 0; i < moduli_.size(); ++i) {
        i64 kk = k % moduli_[i];
        if (kk < 0) kk += moduli_[i];
        r[i] = (a[i] % moduli_[i]) * kk % moduli_[i];
    }
    return r;
}

bool AbelianGroup::is_zero(const AVec& a) const {
    for (i64 x : a)
        if (x != 0) return false;
    return true;
}

i64 AbelianGroup::elem_order(const AVec& a) const {
    i64 ord = 1;
    for (size_t i = 0; i < moduli_.size(); ++i) {
        i64 d = moduli_[i] / gcd_i64(a[i], moduli_[i]);
        ord = ord / gcd_i64(ord, d) * d;
    }
    return ord;
}

i64 AbelianGroup::rank_of(const AVec& a) const {
    i64 r = 0;
    for (size_t i = 0; i < moduli_.size(); ++i) r = r * moduli_[i] + a[i];
    return r;
}

AVec AbelianGroup::unrank(i64 r) const {
    AVec a(moduli_.size());
    for (size_t i = moduli_.size(); i-- > 0;) {
        a[i] = r % moduli_[i];
        r /= moduli_[i];
    }
    return a;
}

std::vector<i64> AbelianGroup::span(const std::vector<AVec>& gens) const {
    std::unordered_set<i64> seen;
    std::vector<AVec> frontier{zero()};
    seen.insert(rank_of(zero()));
    while (!frontier.empty()) {
        std::vector<AVec> next;
        for (const auto& v : frontier) {
            for (const auto& g : gens) {
                AVec w = add(v, g);
                i64 r = rank_of(w);
                if (seen.insert(r).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    std::vector<i64> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool AbelianGroup::generates(const std::vector<AVec>& gens) const {
    return static_cast<i64>(span(gens).size()) == order();
}

AVec AbelianAut::apply(const AbelianGroup& H, const AVec& v) const {
    AVec r = H.zero();
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) r = H.add(r, H.scale(gen_images[i], v[i]));
    return r;
}

AbelianAut AbelianAut::then(const AbelianGroup& H, const AbelianAut& other) const {
    AbelianAut r;
    r.gen_images.reserve(gen_images.size());
    for (const auto& img : gen_images) r.gen_images.push_back(other.apply(H, img));
    return r;
}

namespace {

// All automorphisms of one primary component (all moduli powers of the
// same prime), by recursive generator-image search.  An image tuple
// defines a homomorphism iff |u_i| divides d_i, and an automorphism iff
// the images generate the component.  The span of the prefix is carried
// incrementally so a leaf check is O(1).
void primary_auts(const AbelianGroup& H, size_t idx, std::vector<AVec>& chosen,
                  const std::unordered_set<i64>& span, std::vector<std::vector<AVec>>& out) {
    bool last = idx + 1 == H.moduli().size();
    i64 d = H.moduli()[idx];
    for (i64 r = 0; r < H.order(); ++r) {
        AVec u = H.unrank(r);
        if (d % H.elem_order(u) != 0) continue;
        // index of u modulo the current span
        i64 k = 1;
        AVec w = u;
        while (!span.count(H.rank_of(w))) {
            w = H.add(w, u);
            ++k;
        }
        if (last) {
            // leaf: the images span H iff the span grows to full order
            if (static_cast<i64>(span.size()) * k == H.order()) {
                chosen.push_back(std::move(u));
                out.push_back(chosen);
                chosen.pop_back();
            }
            continue;
        }
        std::unordered_set<i64> next = span;
        if (k > 1) {
            w = u;
            for (i64 t = 1; t < k; ++t) {
                for (i64 s : span) next.insert(H.rank_of(H.add(H.unrank(s), w)));
                w = H.add(w, u);
            }
        }
        chosen.push_back(std::move(u));
        primary_auts(H, idx + 1, chosen, next, out);
        chosen.pop_back();
    }
}

} // namespace

std::vector<AbelianAut> abelian_automorphisms(const AbelianGroup& H, i64 cap) {
    if (H.order() > cap)
        throw group_error("abelian_automorphisms: |H| = " + std::to_string(H.order()) +
                          " exceeds cap " + std::to_string(cap));

    // Coprime primary components: coordinate i contributes its q-part to
    // the component of each prime q | d_i.
    std::map<i64, std::vector<std::pair<int, i64>>> comps; // prime -> [(coord, q^e)]
    for (int i = 0; i < H.rank(); ++i)
        for (auto [q, e] : factorize(H.moduli()[i])) {
            i64 qe = 1;
            for (int j = 0; j < e; ++j) qe *= q;
            comps[q].emplace_back(i, qe);
        }

    // Automorphisms of each component, expressed back in full coordinates
    // via CRT: the q-part of coordinate i maps independently.
    std::vector<AbelianAut> result;
    result.push_back({std::vector<AVec>(H.rank())});
    for (auto& img : result[0].gen_images) img = H.zero();

    // Identity on coordinates with modulus 1.
    for (auto& [q, coords] : comps) {
        AbelianGroup C([&] {
            std::vector<i64> ms;
            for (auto& [coord, qe] : coords) ms.push_back(qe);
            return ms;
        }());
        std::vector<std::vector<AVec>> comp_auts;
        std::vector<AVec> chosen;
        std::unordered_set<i64> trivial{C.rank_of(C.zero())};
        primary_auts(C, 0, chosen, trivial, comp_auts);

        std::vector<AbelianAut> next;
        next.reserve(result.size() * comp_auts.size());
        for (const auto& base : result) {
            for (const auto& ca : comp_auts) {
                AbelianAut a = base;
                // e_{coord_j} gains the component image scaled into full
                // coordinates: component value v on coord i contributes
                // v * (d_i / q^e) * inv(d_i/q^e mod q^e) ... handled by CRT
                // below.
                for (size_t j = 0; j < coords.size(); ++j) {
                    int src = coords[j].first;
                    for (size_t t = 0; t < coords.size(); ++t) {
                        int dst = coords[t].first;
                        i64 qe = coords[t].second;
                        i64 d = H.moduli()[dst];
                        i64 cof = d / qe;
                        // x = ca[j][t] (mod qe), x = 0 (mod cof)
                        i64 x = ca[j][t] % qe;
                        i64 lift = (cof == 1) ? x : (x * cof % d) * inv_mod(cof, qe) % d;
                        a.gen_images[src][dst] = (a.gen_images[src][dst] + lift) % d;
                    }
                }
                next.push_back(std::move(a));
            }
        }
        result = std::move(next);
    }

    // Coordinates with modulus 1 (or primes not present) keep image 0;
    // generators of trivial coordinates map to 0, which is correct.
    return result;
}

GDihElement GDihGroup::mul(const GDihElement& x, const GDihElement& y) const {
    GDihElement r;
    r.vec = x.flip ? base_.sub(x.vec, y.vec) : base_.add(x.vec, y.vec);
    r.flip = x.flip ^ y.flip;
    return r;
}

GDihElement GDihGroup::inv(const GDihElement& x) const {
    if (x.flip) return x; // (v,1)^2 = 1
    return {base_.neg(x.vec), 0};
}

i64 GDihGroup::elem_order(const GDihElement& x) const {
    if (x.flip) return 2; // every flip element is an involution
    return base_.elem_order(x.vec);
}

i64 GDihGroup::rank_of(const GDihElement& x) const {
    return static_cast<i64>(x.flip) * base_.order() + base_.rank_of(x.vec);
}

GDihElement GDihGroup::unrank(i64 r) const {
    i64 n = base_.order();
    return {base_.unrank(r % n), static_cast<int>(r / n)};
}

GDihElement gdih_multiply(const GDihGroup& G, const GDihElement& x, const GDihElement& y) {
    if (x.vec.size() != G.base().moduli().size() || y.vec.size() != G.base().moduli().size())
        throw group_error("gdih_multiply: mismatched moduli");
    return G.mul(x, y);
}

} // namespace pentacover
