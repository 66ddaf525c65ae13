#pragma once

#include <complex>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace qhs {

using Rational = mpq_class;
using BigInt = mpz_class;

// mpq_class does not canonicalize on (num, den) construction; this does.
inline Rational make_rational(long num, long den = 1) {
    if (den == 0)
        throw std::domain_error("make_rational: zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

/**
 * Complex number with rational real and imaginary parts, i.e. an element
 * of Q(i). Exact field arithmetic; values are immutable.
 */
class GaussianRational {
public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(Rational re) : re_(std::move(re)), im_(0) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
    GaussianRational(long v) : re_(v), im_(0) {}

    static GaussianRational i() { return GaussianRational(Rational(0), Rational(1)); }

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }

    GaussianRational conj() const { return GaussianRational(re_, -im_); }

    std::complex<double> to_complex() const {
        return {re_.get_d(), im_.get_d()};
    }

    GaussianRational operator-() const { return GaussianRational(-re_, -im_); }

    GaussianRational operator+(const GaussianRational& o) const {
        return GaussianRational(re_ + o.re_, im_ + o.im_);
    }
    GaussianRational operator-(const GaussianRational& o) const {
        return GaussianRational(re_ - o.re_, im_ - o.im_);
    }
    GaussianRational operator*(const GaussianRational& o) const {
        return GaussianRational(re_ * o.re_ - im_ * o.im_,
                                re_ * o.im_ + im_ * o.re_);
    }

    // Exact division in the field Q(i).
    GaussianRational operator/(const GaussianRational& o) const {
        if (o.is_zero())
            throw std::domain_error("GaussianRational: division by zero");
        Rational n = o.re_ * o.re_ + o.im_ * o.im_;
        return GaussianRational((re_ * o.re_ + im_ * o.im_) / n,
                                (im_ * o.re_ - re_ * o.im_) / n);
    }

    bool operator==(const GaussianRational& o) const {
        return re_ == o.re_ && im_ == o.im_;
    }
    bool operator!=(const GaussianRational& o) const { return !(*this == o); }

private:
    Rational re_, im_;
};

/**
 * Laurent polynomial in the formal deformation parameter q with
 * GaussianRational coefficients: sum of c_e * q^e over integer exponents e.
 *
 * Canonical form: sparse exponent map with no zero coefficients stored;
 * the empty map is zero. Equality is structural. Conjugation fixes q
 * (the parameter is real) and conjugates every coefficient.
 */
class QScalar {
public:
    using TermMap = std::map<BigInt, GaussianRational>;

    QScalar() = default;
    QScalar(long v) {
        if (v != 0)
            terms_.emplace(BigInt(0), GaussianRational(v));
    }
    QScalar(GaussianRational c) {
        if (!c.is_zero())
            terms_.emplace(BigInt(0), std::move(c));
    }

    static QScalar zero() { return QScalar(); }
    static QScalar one() { return QScalar(1); }

    // c * q^e
    static QScalar term(GaussianRational c, BigInt e) {
        QScalar s;
        if (!c.is_zero())
            s.terms_.emplace(std::move(e), std::move(c));
        return s;
    }
    static QScalar q_power(BigInt e) { return term(GaussianRational(1), std::move(e)); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const { return *this == one(); }

    QScalar operator-() const {
        QScalar r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, -c);
        return r;
    }

    QScalar operator+(const QScalar& o) const {
        QScalar r = *this;
        r += o;
        return r;
    }

    QScalar& operator+=(const QScalar& o) {
        for (const auto& [e, c] : o.terms_)
            add_term(e, c);
        return *this;
    }

    QScalar operator-(const QScalar& o) const { return *this + (-o); }

    QScalar operator*(const QScalar& o) const {
        QScalar r;
        for (const auto& [e1, c1] : terms_)
            for (const auto& [e2, c2] : o.terms_)
                r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    QScalar& operator*=(const QScalar& o) { return *this = *this * o; }

    bool operator==(const QScalar& o) const { return terms_ == o.terms_; }
    bool operator!=(const QScalar& o) const { return !(*this == o); }

    // Coefficient-wise complex conjugation; q itself is fixed.
    QScalar conj() const {
        QScalar r;
        for (const auto& [e, c] : terms_)
            r.terms_.emplace(e, c.conj());
        return r;
    }

    // Numeric evaluation at a point q0 of the deformation interval (0,1).
    std::complex<double> eval(double q0) const {
        if (!(q0 > 0.0 && q0 < 1.0))
            throw std::domain_error("QScalar::eval: q0 must lie in (0,1)");
        std::complex<double> acc(0.0, 0.0);
        for (const auto& [e, c] : terms_)
            acc += c.to_complex() * std::pow(q0, e.get_d());
        return acc;
    }

    // Exponent m such that *this == q^m, if the scalar is a pure power.
    std::optional<BigInt> as_q_power() const {
        if (terms_.size() != 1)
            return std::nullopt;
        const auto& [e, c] = *terms_.begin();
        if (c != GaussianRational(1))
            return std::nullopt;
        return e;
    }

    // Exact quotient in the Laurent ring, when the divisor divides *this.
    // Both operands are shifted by their trailing exponents to ordinary
    // polynomials with nonzero constant term; since q is a unit, the
    // divisibility questions coincide and long division decides it.
    std::optional<QScalar> divexact(const QScalar& divisor) const {
        if (divisor.is_zero())
            throw std::domain_error("QScalar::divexact: division by zero");
        if (is_zero())
            return zero();
        const BigInt shift = terms_.begin()->first - divisor.terms_.begin()->first;
        QScalar rem = term(GaussianRational(1), -terms_.begin()->first) * (*this);
        const QScalar den =
            term(GaussianRational(1), -divisor.terms_.begin()->first) * divisor;
        const auto& [dlead_e, dlead_c] = *den.terms_.rbegin();
        QScalar quot;
        while (!rem.is_zero()) {
            const auto& [rlead_e, rlead_c] = *rem.terms_.rbegin();
            if (rlead_e < dlead_e)
                return std::nullopt;
            QScalar factor = term(rlead_c / dlead_c, rlead_e - dlead_e);
            quot += factor;
            rem = rem - factor * den;
        }
        return quot * q_power(shift);
    }

private:
    void add_term(const BigInt& e, const GaussianRational& c) {
        if (c.is_zero())
            return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    TermMap terms_;
};

std::string to_string(const GaussianRational& c);
std::string to_string(const QScalar& s);

// Rendering of a scalar as a left factor of a monomial: multi-term sums
// get parenthesized, 1 and -1 collapse to "" and "-".
std::string to_factor_string(const QScalar& s);

} // namespace qhs
