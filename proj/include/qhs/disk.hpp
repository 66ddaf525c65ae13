#pragma once

#include <compare>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>

#include "qhs/suq2.hpp"

namespace qhs {

// Letters of the quantum disk: 'y', 'z', and 'Z' = z*.
inline constexpr char kY = 'y';
inline constexpr char kZ = 'z';
inline constexpr char kZStar = 'Z';

/**
 * Normal-form disk monomial y^J z^K (K > 0), y^J z*^(-K) (K < 0), or y^J
 * (K = 0). The sign convention ties K to the alpha-exponent of preimages:
 * z = F_q(alpha)*, so alpha -> z*, alpha* -> z, and a preimage of
 * y^J z^K has alpha-exponent i = -K with gamma-exponents summing to J.
 */
struct DiskMonomial {
    long long J = 0; // y-exponent, >= 0
    long long K = 0; // signed z-exponent: z^K for K > 0, z*^(-K) for K < 0

    auto operator<=>(const DiskMonomial&) const = default;

    bool is_unit() const { return J == 0 && K == 0; }
    long long degree() const { return J + (K < 0 ? -K : K); }
    std::string word() const;
};

/// Element of C[D_q] as a canonical linear combination of disk monomials.
class DiskElement {
public:
    using TermMap = std::map<DiskMonomial, QScalar>;

    DiskElement() = default;

    static DiskElement zero() { return {}; }
    static DiskElement unit() { return monomial({0, 0}); }
    static DiskElement monomial(DiskMonomial m, QScalar c = QScalar::one());

    static DiskElement y() { return monomial({1, 0}); }
    static DiskElement z() { return monomial({0, 1}); }
    static DiskElement z_star() { return monomial({0, -1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const DiskMonomial& m, const QScalar& c);

    DiskElement operator+(const DiskElement& o) const;
    DiskElement operator-(const DiskElement& o) const;
    DiskElement operator*(const QScalar& c) const;

    bool operator==(const DiskElement& o) const { return terms_ == o.terms_; }
    bool operator!=(const DiskElement& o) const { return !(*this == o); }

    std::optional<QScalar> as_scalar() const;

private:
    TermMap terms_;
};

// Oriented disk relations yz = qzy, y = y*, zz* + y^2 = 1 = z*z + q^2 y^2:
//   zy -> q^-1 yz,  z*y -> q y z*,  zz* -> 1 - y^2,  z*z -> 1 - q^2 y^2.
const RewriteSystem& disk_rewrite_system();

DiskElement disk_normalize(const std::string& word,
                           const QScalar& coeff = QScalar::one(),
                           Strategy strategy = Strategy::LeftmostFirst);
DiskElement disk_normalize(const FreeTermMap& words,
                           Strategy strategy = Strategy::LeftmostFirst);

DiskElement mul(const DiskElement& a, const DiskElement& b);
DiskElement star(const DiskElement& a);

// The quotient map C[SU_q(2)] -> C[D_q]: alpha -> z*, alpha* -> z,
// gamma, gamma* -> y. A unital *-homomorphism whose kernel is the ideal
// generated by gamma - gamma*.
DiskElement f_q(const SUq2Element& a);

// Membership of a monomial in C[D_q/T_n] = F_q(C[SU_q(2)/T_n]): some
// preimage torus weight t - K with t in {J, J-2, ..., -J} lies in nZ,
// i.e. t == K (mod n), with equality when n is infinite.
bool disk_tn_member(const DiskMonomial& m, TorusOrder n);

// The q-commutation exponent of two same-side monomials from the
// quantum-plane identity (y^j z^k)(y^j' z^k') = q^(jk'-j'k) (y^j' z^k')(y^j z^k);
// with the signed-K convention both sides reduce to J_a K_b - J_b K_a.
// Mixed z/z* pairs are refused; use q_commutation_exponent.
long long monomial_exponent(const DiskMonomial& a, const DiskMonomial& b);

// Exponent m with mul(a,b) = q^m mul(b,a) exactly, if one exists.
// Preconditions: a, b nonzero.
std::optional<long long> q_commutation_exponent(const DiskElement& a, const DiskElement& b);

// Independent oracle: solves ab = w * ba for a scalar w by exact
// cross-multiplied coefficient comparison, then recovers w by exact
// Laurent division. Detects proportionality whether or not w is a pure
// power of q.
std::optional<QScalar> brute_force_commutation_oracle(const DiskElement& a,
                                                      const DiskElement& b);

/**
 * Result of the bounded commutator-spectrum enumeration: every exponent m
 * recorded here carries a verified monomial witness pair (a, b) with
 * ab = q^m ba exactly.
 */
struct SpectrumReport {
    TorusOrder n = TorusOrder::infinite();
    long long degree_bound = 0;
    std::set<long long> exponents;
    std::map<long long, std::pair<DiskMonomial, DiskMonomial>> witnesses;

    std::optional<long long> min_positive() const;
    std::string to_text() const;
};

// Enumerates all ordered pairs of monomials of C[D_q/T_n] with total
// degree J + |K| at most degree_bound and records every q-commutation
// exponent realized. Deterministic: monomials scanned in (J, K) order,
// the witness kept per exponent is the lexicographically least pair.
SpectrumReport commutator_spectrum_search(TorusOrder n, long long degree_bound);

std::string to_string(const DiskMonomial& m);
std::string to_string(const DiskElement& a);

} // namespace qhs
