#pragma once

// Permutations on {0, ..., N-1} and finitely generated permutation
// groups with an explicitly materialized closure.  Composition is
// left-to-right: (p * q)(x) = q(p(x)), so a Cayley product "s then g"
// is s * g and the right-regular action of t sends x to x * t.

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pentacover/abelian.hpp"

namespace pentacover {

class Perm {
public:
    Perm() = default;
    static Perm identity(int n);
    explicit Perm(std::vector<int> images);
    /// From disjoint cycles, e.g. {{0,3},{1,4}} on n points.
    static Perm from_cycles(int n, const std::vector<std::vector<int>>& cycles);

    int degree() const { return static_cast<int>(img_.size()); }
    int operator[](int i) const { return img_[i]; }
    const std::vector<int>& images() const { return img_; }

    bool is_identity() const;
    Perm inverse() const;
    /// this then other.
    Perm then(const Perm& other) const;
    friend Perm operator*(const Perm& a, const Perm& b) { return a.then(b); }

    i64 order() const;
    int fixed_points() const;

    bool operator==(const Perm&) const = default;
    auto operator<=>(const Perm&) const = default;

private:
    std::vector<int> img_;
};

/// Element set of a closed group, stored compactly (degree < 65536).
class PermClosure {
public:
    explicit PermClosure(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    i64 order() const { return static_cast<i64>(elems_.size()); }
    bool contains(const Perm& p) const;
    Perm element(i64 i) const;
    void insert(const Perm& p); // used by close() only

    /// Indices in insertion order; iteration helper.
    template <typename F>
    void for_each(F&& f) const {
        for (i64 i = 0; i < order(); ++i) f(element(i));
    }

private:
    int degree_;
    std::vector<std::vector<uint16_t>> elems_;
    std::map<std::vector<uint16_t>, i64> index_;
    friend PermClosure close_generators(int, const std::vector<Perm>&, i64);
};

struct PermGroup {
    int degree = 0;
    std::vector<Perm> gens;
    /// Exact order, when it has been established by construction
    /// (and verified); otherwise taken from the closure.
    std::optional<i64> known_order;
    std::shared_ptr<const PermClosure> closure;

    bool has_closure() const { return closure != nullptr; }
    i64 order() const;
};

struct closure_cap_error : group_error {
    i64 partial_count;
    closure_cap_error(const std::string& what, i64 partial)
        : group_error(what), partial_count(partial) {}
};

inline constexpr i64 kClosureCap = 1'000'000;

PermClosure close_generators(int degree, const std::vector<Perm>& gens, i64 cap = kClosureCap);

/// Returns a copy of G with the closure materialized.
PermGroup close(const PermGroup& G, i64 cap = kClosureCap);

/// Right-regular representation of Dih(H) on its ranked elements.
PermGroup right_regular(const GDihGroup& G, i64 cap = 100'000);
/// Right-regular representation of an abelian group.
PermGroup right_regular(const AbelianGroup& H, i64 cap = 100'000);

/// True iff every non-identity element of the closure is fixed-point-free.
bool is_semiregular(const PermGroup& G);

/// { g in A : K^g = K }.  Both closures must be available.
PermGroup normalizer(const PermGroup& A, const PermGroup& K);
/// { g in A : gk = kg for all k in K }.
PermGroup centralizer(const PermGroup& A, const PermGroup& K);

/// Orbit partition of {0..degree-1} under the generators; returns the
/// orbit id of each point, ids numbered by smallest member.
std::vector<int> point_orbits(int degree, const std::vector<Perm>& gens, int* count = nullptr);

/// Isomorphism-invariant fingerprint used for small-group identification.
struct Fingerprint {
    i64 order = 1;
    std::map<i64, i64> order_histogram;
    bool abelian = true;
    bool cyclic = true;

    bool operator==(const Fingerprint&) const = default;
    auto operator<=>(const Fingerprint&) const = default;
    std::string to_string() const;
};

Fingerprint fingerprint(const PermGroup& G, i64 cap = 10'000);

/// Matches a fingerprint against the built-in catalog (the stabilizer
/// groups of pentavalent s-transitive graphs plus Z_n and D_n for
/// n <= 100).  Returns "unrecognized" if nothing matches.
std::string identify(const Fingerprint& fp);

/// The catalog itself, for self-tests: label -> fingerprint.
const std::vector<std::pair<std::string, Fingerprint>>& fingerprint_catalog();

/// Line-based text format: one permutation per line, space-separated images.
std::string perms_to_text(const std::vector<Perm>& ps);
std::vector<Perm> perms_from_text(const std::string& text);

} // namespace pentacover
