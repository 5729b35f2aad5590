#include <algorithm>

#include "pentacover/construct.hpp"
#include "pentacover/symmetry.hpp"

namespace pentacover {

namespace {

std::vector<i64> sorted_ranks(const AbelianGroup& H, const std::vector<AVec>& xs) {
    std::vector<i64> out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(H.rank_of(x));
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

BiCayleyF bicayley_F(const AbelianGroup& H, const std::vector<AVec>& S_in, i64 cap) {
    if (H.order() > cap)
        throw group_error("bicayley_F: |H| exceeds cap " + std::to_string(cap));
    std::vector<AVec> S;
    for (const auto& s : S_in) S.push_back(H.normalized(s));
    if (std::find_if(S.begin(), S.end(), [&](const AVec& s) { return H.is_zero(s); }) == S.end())
        throw group_error("bicayley_F: S must be normalized to contain the identity");

    int n = static_cast<int>(H.order());
    Graph gamma = bicayley(H, {}, {}, S);

    std::vector<i64> s_ranks = sorted_ranks(H, S);
    auto auts = abelian_automorphisms(H, cap);

    BiCayleyF out;
    for (const auto& alpha : auts) {
        std::vector<AVec> Sa;
        Sa.reserve(S.size());
        for (const auto& s : S) Sa.push_back(alpha.apply(H, s));
        std::vector<i64> sa_ranks = sorted_ranks(H, Sa);
        for (const auto& x : S) {
            // x^{-1} S = { s - x }
            std::vector<i64> shifted;
            shifted.reserve(S.size());
            for (const auto& s : S) shifted.push_back(H.rank_of(H.sub(s, x)));
            std::sort(shifted.begin(), shifted.end());
            if (shifted != sa_ranks) continue;
            // sigma_{alpha,x}: h_0 -> (h^alpha)_0, h_1 -> (x h^alpha)_1
            std::vector<int> img(2 * n);
            for (i64 h = 0; h < n; ++h) {
                AVec ha = alpha.apply(H, H.unrank(h));
                img[h] = static_cast<int>(H.rank_of(ha));
                img[n + h] = n + static_cast<int>(H.rank_of(H.add(x, ha)));
            }
            Perm sigma(std::move(img));
            if (sigma[0] != 0)
                throw group_error("bicayley_F: sigma does not fix the vertex 1_0");
            if (!is_automorphism(gamma, sigma))
                throw group_error("bicayley_F: sigma is not a graph automorphism");
            out.sigma.push_back(std::move(sigma));
        }
    }
    out.F_order = static_cast<i64>(out.sigma.size());

    {
        std::vector<int> img(2 * n);
        for (i64 h = 0; h < n; ++h) {
            i64 neg = H.rank_of(H.neg(H.unrank(h)));
            img[h] = n + static_cast<int>(neg);
            img[n + h] = static_cast<int>(neg);
        }
        out.delta = Perm(std::move(img));
        if (!is_automorphism(gamma, out.delta))
            throw group_error("bicayley_F: delta is not a graph automorphism");
    }

    // <R(H), F, delta> must have order exactly 2|H||F|: R(H) and delta
    // move 1_0 through all 2|H| vertices and F is the stabilizer of 1_0.
    PermGroup N;
    N.degree = 2 * n;
    for (int i = 0; i < H.rank(); ++i) {
        if (H.moduli()[i] == 1) continue;
        AVec e = H.zero();
        e[i] = 1;
        std::vector<int> img(2 * n);
        for (i64 h = 0; h < n; ++h) {
            i64 t = H.rank_of(H.add(H.unrank(h), e));
            img[h] = static_cast<int>(t);
            img[n + h] = n + static_cast<int>(t);
        }
        N.gens.emplace_back(std::move(img));
    }
    for (const auto& s : out.sigma) N.gens.push_back(s);
    N.gens.push_back(out.delta);
    i64 expected = 2 * static_cast<i64>(n) * out.F_order;
    try {
        N = close(N, 2 * expected);
    } catch (const closure_cap_error& e) {
        throw group_error("bicayley_F: <R(H), F, delta> is larger than 2|H||F| (partial count " +
                          std::to_string(e.partial_count) + ")");
    }
    if (N.order() != expected)
        throw group_error("bicayley_F: |<R(H), F, delta>| = " + std::to_string(N.order()) +
                          " but 2|H||F| = " + std::to_string(expected));
    out.normalizer_order = N.order();
    return out;
}

} // namespace pentacover
