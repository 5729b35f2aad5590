#include "pentacover/modarith.hpp"

#include <algorithm>

namespace pentacover {

i64 gcd_i64(i64 a, i64 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

i64 egcd_i64(i64 a, i64 b, i64& x, i64& y) {
    if (b == 0) {
        x = (a >= 0) ? 1 : -1;
        y = 0;
        return a >= 0 ? a : -a;
    }
    i64 x1, y1;
    i64 g = egcd_i64(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

i64 pow_mod(i64 a, i64 e, i64 n) {
    if (n < 1) throw modarith_error("pow_mod: modulus must be >= 1");
    if (n == 1) return 0;
    a %= n;
    if (a < 0) a += n;
    i64 r = 1;
    while (e > 0) {
        if (e & 1) r = (r * a) % n;
        a = (a * a) % n;
        e >>= 1;
    }
    return r;
}

i64 inv_mod(i64 a, i64 n) {
    if (n == 1) return 0;
    i64 x, y;
    i64 g = egcd_i64(((a % n) + n) % n, n, x, y);
    if (g != 1)
        throw modarith_error("inv_mod: " + std::to_string(a) + " is not invertible mod " +
                             std::to_string(n));
    x %= n;
    if (x < 0) x += n;
    return x;
}

i64 mul_order(i64 a, i64 n) {
    if (n == 1) return 1;
    a = ((a % n) + n) % n;
    if (gcd_i64(a, n) != 1)
        throw modarith_error("mul_order: not a unit");
    i64 x = a, ord = 1;
    while (x != 1) {
        x = (x * a) % n;
        ++ord;
    }
    return ord;
}

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::pair<i64, int>> factorize(i64 n) {
    if (n < 1) throw modarith_error("factorize: n must be >= 1");
    std::vector<std::pair<i64, int>> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            int e = 0;
            while (n % d == 0) {
                n /= d;
                ++e;
            }
            out.emplace_back(d, e);
        }
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

ModPoly::ModPoly(std::vector<i64> c, i64 n) : coeffs(std::move(c)), modulus(n) {
    if (n < 1) throw modarith_error("ModPoly: modulus must be >= 1");
    for (auto& a : coeffs) {
        a %= n;
        if (a < 0) a += n;
    }
}

i64 ModPoly::eval(i64 x) const {
    x = ((x % modulus) + modulus) % modulus;
    i64 r = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
        r = (r * x + *it) % modulus;
    return r;
}

std::vector<Residue> units(i64 n) {
    if (n < 1) throw modarith_error("units: n must be >= 1");
    if (n == 1) return {Residue(0, 1)};
    std::vector<Residue> out;
    for (i64 x = 1; x < n; ++x)
        if (gcd_i64(x, n) == 1) out.emplace_back(x, n);
    return out;
}

std::vector<Residue> poly_roots(const ModPoly& p) {
    if (p.modulus > kRootScanCap)
        throw modarith_error("poly_roots: modulus " + std::to_string(p.modulus) +
                             " too large for exhaustive scan (cap " +
                             std::to_string(kRootScanCap) + ")");
    std::vector<Residue> out;
    for (i64 x = 0; x < p.modulus; ++x)
        if (p.eval(x) == 0) out.emplace_back(x, p.modulus);
    return out;
}

bool eq1_solvable_by_factorization(i64 m) {
    if (m == 1 || m == 5) return true;
    int fives = 0;
    bool other = false;
    for (auto [q, e] : factorize(m)) {
        if (q == 5) {
            if (e > 1) return false;
            fives = e;
        } else {
            if (q % 5 != 1) return false;
            other = true;
        }
    }
    (void)fives;
    return other;
}

std::vector<Residue> solve_eq1(i64 m) {
    if (m < 1) throw modarith_error("solve_eq1: m must be >= 1");
    auto roots = poly_roots(ModPoly({1, 1, 1, 1, 1}, m));
    bool expected = eq1_solvable_by_factorization(m);
    if (roots.empty() == expected)
        throw modarith_error("solve_eq1: root scan disagrees with the factorization "
                             "characterization at m = " + std::to_string(m));
    if (m > 5)
        for (const auto& r : roots)
            if (mul_order(r.value, m) != 5)
                throw modarith_error("solve_eq1: root " + std::to_string(r.value) +
                                     " mod " + std::to_string(m) +
                                     " does not have multiplicative order 5");
    return roots;
}

Residue order5_unit(i64 n) {
    if (n < 1) throw modarith_error("order5_unit: n must be >= 1");
    // |Z_n^*| = phi(n); order-5 elements exist iff 5 | phi(n).
    i64 phi = 1;
    for (auto [q, e] : factorize(n)) {
        phi *= (q - 1);
        for (int i = 1; i < e; ++i) phi *= q;
    }
    if (n == 1 || phi % 5 != 0)
        throw modarith_error("order5_unit: no element of order 5 in Z_" +
                             std::to_string(n) + "^* (5 does not divide phi(n) = " +
                             std::to_string(phi) + ")");
    for (i64 x = 2; x < n; ++x) {
        if (gcd_i64(x, n) != 1) continue;
        if (pow_mod(x, 5, n) == 1) return Residue(x, n);
    }
    throw modarith_error("order5_unit: scan failed unexpectedly for n = " + std::to_string(n));
}

std::vector<Residue> sqrt_mod(i64 a, i64 p) {
    if (!is_prime(p)) throw modarith_error("sqrt_mod: p = " + std::to_string(p) + " is not prime");
    a = ((a % p) + p) % p;
    std::vector<Residue> out;
    for (i64 x = 0; x < p; ++x)
        if ((x * x) % p == a) out.emplace_back(x, p);
    return out;
}

} // namespace pentacover
