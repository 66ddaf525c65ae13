#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "qhs/rewrite.hpp"
#include "qhs/scalar.hpp"
#include "qhs/torus.hpp"

namespace qhs {

// Letters of the free *-monoid underlying C[SU_q(2)]:
//   'a' = alpha, 'A' = alpha*, 'g' = gamma, 'G' = gamma*.
inline constexpr char kAlpha = 'a';
inline constexpr char kAlphaStar = 'A';
inline constexpr char kGamma = 'g';
inline constexpr char kGammaStar = 'G';

/**
 * Normal-form monomial alpha^(i) gamma^j gamma*^k, where alpha^(i) means
 * alpha^i for i >= 0 and (alpha*)^(-i) for i < 0. The torus weight
 * i + j - k is derived, never stored.
 */
struct SUq2Monomial {
    long long i = 0; // alpha-exponent, sign selects alpha vs alpha*
    long long j = 0; // gamma-exponent, >= 0
    long long k = 0; // gamma*-exponent, >= 0

    auto operator<=>(const SUq2Monomial&) const = default;

    bool is_unit() const { return i == 0 && j == 0 && k == 0; }
    std::string word() const;
};

inline long long torus_weight(const SUq2Monomial& m) { return m.i + m.j - m.k; }

/**
 * Element of C[SU_q(2)] as a canonical QScalar-linear combination of
 * normal-form monomials. Values are immutable once built; all operations
 * are pure.
 */
class SUq2Element {
public:
    using TermMap = std::map<SUq2Monomial, QScalar>;

    SUq2Element() = default;

    static SUq2Element zero() { return {}; }
    static SUq2Element unit() { return monomial({0, 0, 0}); }
    static SUq2Element monomial(SUq2Monomial m, QScalar c = QScalar::one());

    static SUq2Element alpha() { return monomial({1, 0, 0}); }
    static SUq2Element alpha_star() { return monomial({-1, 0, 0}); }
    static SUq2Element gamma() { return monomial({0, 1, 0}); }
    static SUq2Element gamma_star() { return monomial({0, 0, 1}); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const SUq2Monomial& m, const QScalar& c);

    SUq2Element operator+(const SUq2Element& o) const;
    SUq2Element operator-(const SUq2Element& o) const;
    SUq2Element operator*(const QScalar& c) const;

    bool operator==(const SUq2Element& o) const { return terms_ == o.terms_; }
    bool operator!=(const SUq2Element& o) const { return !(*this == o); }

    // The scalar c when the element equals c * 1.
    std::optional<QScalar> as_scalar() const;

private:
    TermMap terms_;
};

// The oriented presentation of Eq-style relations
//   alpha gamma = q gamma alpha,  alpha gamma* = q gamma* alpha,
//   gamma gamma* = gamma* gamma,
//   alpha* alpha + gamma* gamma = 1 = alpha alpha* + q^2 gamma* gamma,
// with alpha-letters pushed left, gamma before gamma*, and the
// contractions alpha alpha*, alpha* alpha, gamma* gamma eliminated.
// Normal forms are exactly the words alpha^(i) gamma^j gamma*^k.
const RewriteSystem& su_rewrite_system();

// Unique normal form of a coefficient-weighted free word (letters a A g G).
SUq2Element normalize(const std::string& word, const QScalar& coeff = QScalar::one(),
                      Strategy strategy = Strategy::LeftmostFirst);
SUq2Element normalize(const FreeTermMap& words,
                      Strategy strategy = Strategy::LeftmostFirst);

SUq2Element mul(const SUq2Element& a, const SUq2Element& b);

// The *-involution: antilinear antihomomorphism with alpha <-> alpha*,
// gamma <-> gamma*.
SUq2Element star(const SUq2Element& a);

// Components of the algebra grading by alpha-degree; the component at i
// collects the monomials with alpha-exponent i.
std::map<long long, SUq2Element> alpha_degree_decompose(const SUq2Element& a);

// Membership in C[SU_q(2)/T_n]: every monomial has torus weight in nZ.
bool tn_member(const SUq2Element& a, TorusOrder n);

/**
 * Laurent polynomial in a single unitary variable u with QScalar
 * coefficients; the image of the quotient that kills gamma.
 */
class UPolynomial {
public:
    using TermMap = std::map<long long, QScalar>;

    UPolynomial() = default;

    static UPolynomial u_power(long long e, QScalar c = QScalar::one());

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(long long e, const QScalar& c);

    UPolynomial operator+(const UPolynomial& o) const;
    UPolynomial operator*(const UPolynomial& o) const;

    bool operator==(const UPolynomial& o) const { return terms_ == o.terms_; }
    bool operator!=(const UPolynomial& o) const { return !(*this == o); }

private:
    TermMap terms_;
};

// Unital homomorphism onto the commutative quotient at gamma = 0:
// gamma, gamma* -> 0, alpha -> u, alpha* -> u^-1.
UPolynomial quotient_by_gamma(const SUq2Element& a);

std::string to_string(const SUq2Monomial& m);
std::string to_string(const SUq2Element& a);
std::string to_string(const UPolynomial& p);

} // namespace qhs
