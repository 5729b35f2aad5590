#pragma once

// Finite abelian groups as mixed-modulus exponent vectors, and the
// generalized dihedral groups Dih(H) = H x| Z_2 built on them.
//
// Element enumeration is fixed once and for all: an abelian element
// (x_1, ..., x_k) has mixed-radix rank with x_1 most significant; a
// Dih(H) element (v, flip) has rank flip*|H| + rank(v), flip most
// significant.  Vertex numbering of every Cayley graph in the project
// derives from these ranks.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pentacover/modarith.hpp"

namespace pentacover {

/// Exponent vector; componentwise values normalized to [0, d_i).
using AVec = std::vector<i64>;

struct group_error : std::runtime_error {
    explicit group_error(const std::string& what) : std::runtime_error(what) {}
};

class AbelianGroup {
public:
    explicit AbelianGroup(std::vector<i64> moduli);

    const std::vector<i64>& moduli() const { return moduli_; }
    int rank() const { return static_cast<int>(moduli_.size()); }
    i64 order() const { return order_; }

    AVec zero() const { return AVec(moduli_.size(), 0); }
    AVec normalized(AVec v) const;
    AVec add(const AVec& a, const AVec& b) const;
    AVec neg(const AVec& a) const;
    AVec sub(const AVec& a, const AVec& b) const;
    AVec scale(const AVec& a, i64 k) const;
    bool is_zero(const AVec& a) const;
    i64 elem_order(const AVec& a) const;

    i64 rank_of(const AVec& a) const;
    AVec unrank(i64 r) const;

    /// Subgroup generated by gens, as sorted element ranks.
    std::vector<i64> span(const std::vector<AVec>& gens) const;
    bool generates(const std::vector<AVec>& gens) const;

private:
    std::vector<i64> moduli_;
    i64 order_;
};

/// Automorphism of an abelian group, stored as the images of the
/// standard generators e_1, ..., e_k.
struct AbelianAut {
    std::vector<AVec> gen_images;

    AVec apply(const AbelianGroup& H, const AVec& v) const;
    AbelianAut then(const AbelianGroup& H, const AbelianAut& other) const;
    bool operator==(const AbelianAut&) const = default;
};

/// All automorphisms of H, by coprime primary decomposition and
/// generator-image search within each primary component.
/// Throws if |H| exceeds the enumeration cap.
std::vector<AbelianAut> abelian_automorphisms(const AbelianGroup& H, i64 cap = 10'000);

/// Element of Dih(H): (vector, flip) with product rule
/// (u, d)(v, e) = (u + (-1)^d v, d xor e).
struct GDihElement {
    AVec vec;
    int flip = 0;

    bool operator==(const GDihElement&) const = default;
};

class GDihGroup {
public:
    explicit GDihGroup(AbelianGroup base) : base_(std::move(base)) {}

    const AbelianGroup& base() const { return base_; }
    i64 order() const { return 2 * base_.order(); }

    GDihElement identity() const { return {base_.zero(), 0}; }
    GDihElement make(AVec v, int flip) const { return {base_.normalized(std::move(v)), flip}; }
    GDihElement mul(const GDihElement& x, const GDihElement& y) const;
    GDihElement inv(const GDihElement& x) const;
    i64 elem_order(const GDihElement& x) const;

    i64 rank_of(const GDihElement& x) const;
    GDihElement unrank(i64 r) const;

private:
    AbelianGroup base_;
};

/// Product per the defining rule; the two elements must come from the
/// same group (checked against the moduli of `G`).
GDihElement gdih_multiply(const GDihGroup& G, const GDihElement& x, const GDihElement& y);

} // namespace pentacover
