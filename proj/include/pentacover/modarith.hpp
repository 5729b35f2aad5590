#pragma once

// Exact modular arithmetic over Z_n: unit groups, polynomial root finding
// and the cyclotomic solvability condition x^4+x^3+x^2+x+1 = 0 (mod m)
// that drives every graph family's parameter set.
//
// Convention: Z_1 is the trivial ring with single element 0; its unit
// group is {0}.  All values are immutable, all functions pure.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace pentacover {

using i64 = long long;

struct modarith_error : std::runtime_error {
    explicit modarith_error(const std::string& what) : std::runtime_error(what) {}
};

/// Residue class modulo n, normalized to [0, n).
struct Residue {
    i64 value = 0;
    i64 modulus = 1;

    Residue() = default;
    Residue(i64 v, i64 n) : modulus(n) {
        if (n < 1) throw modarith_error("Residue: modulus must be >= 1");
        value = v % n;
        if (value < 0) value += n;
    }

    friend bool operator==(const Residue& a, const Residue& b) = default;
    friend auto operator<=>(const Residue& a, const Residue& b) = default;
};

i64 gcd_i64(i64 a, i64 b);

/// Extended gcd: returns g and sets x, y with a*x + b*y = g.
i64 egcd_i64(i64 a, i64 b, i64& x, i64& y);

/// a^e mod n (e >= 0, n >= 1).
i64 pow_mod(i64 a, i64 e, i64 n);

/// Multiplicative inverse of a mod n; throws if gcd(a, n) != 1.
i64 inv_mod(i64 a, i64 n);

/// Multiplicative order of a unit a mod n.
i64 mul_order(i64 a, i64 n);

bool is_prime(i64 n);

/// Trial-division factorization, ascending primes.
std::vector<std::pair<i64, int>> factorize(i64 n);

/// Polynomial over Z_n, constant term first.
struct ModPoly {
    std::vector<i64> coeffs;
    i64 modulus = 1;

    ModPoly(std::vector<i64> c, i64 n);
    i64 eval(i64 x) const;
};

/// All of {x : gcd(x, n) = 1}, ascending; {0} for n = 1.
std::vector<Residue> units(i64 n);

/// Exhaustive-scan roots of p over Z_modulus, ascending.
/// Throws if the modulus exceeds the scan cap (10^7).
std::vector<Residue> poly_roots(const ModPoly& p);

inline constexpr i64 kRootScanCap = 10'000'000;

/// Roots of x^4+x^3+x^2+x+1 = 0 in Z_m, ascending.
///
/// Cross-checks the structural characterization: nonempty exactly when
/// m = 1, m = 5, or m = 5^t * prod p_i^{e_i} with t <= 1 and every
/// p_i = 1 (mod 5); every root with m > 5 has multiplicative order 5.
/// A violation of either direction is an internal error.
std::vector<Residue> solve_eq1(i64 m);

/// True iff the factorization of m permits a root of eq1 (independent
/// check used by the property suite).
bool eq1_solvable_by_factorization(i64 m);

/// Smallest unit of multiplicative order exactly 5 in Z_n^*.
/// Throws, naming the failed divisibility, if none exists.
Residue order5_unit(i64 n);

/// All x with x^2 = a (mod p), p an odd prime (or p = 2).
std::vector<Residue> sqrt_mod(i64 a, i64 p);

} // namespace pentacover
