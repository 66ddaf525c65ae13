#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>

#include "qhs/parse.hpp"
#include "qhs/scalar.hpp"
#include "test_support.hpp"

using namespace qhs;
using qhs::testing::make_rng;
using qhs::testing::random_gaussian;
using qhs::testing::random_nonzero_qscalar;
using qhs::testing::random_qscalar;

namespace {
QScalar q_pow(long e) { return QScalar::q_power(BigInt(e)); }
} // namespace

TEST_CASE("addition cancels and respects identities") {
    // (q + q^-1) + (-q^-1) = q
    CHECK((q_pow(1) + q_pow(-1)) + (-q_pow(-1)) == q_pow(1));
    // 0 + x = x
    QScalar x = q_pow(2) + QScalar(3);
    CHECK(QScalar::zero() + x == x);
    // 1/2 q^2 + 1/2 q^2 = q^2
    QScalar half = QScalar::term(GaussianRational(make_rational(1, 2)), BigInt(2));
    CHECK(half + half == q_pow(2));
}

TEST_CASE("multiplication adds exponents") {
    CHECK(q_pow(1) * q_pow(1) == q_pow(2));
    CHECK(q_pow(1) * q_pow(-1) == QScalar::one());
    // (1+i) q * (1-i) = 2q
    QScalar a = QScalar::term(GaussianRational(Rational(1), Rational(1)), BigInt(1));
    QScalar b(GaussianRational(Rational(1), Rational(-1)));
    CHECK(a * b == QScalar::term(GaussianRational(2), BigInt(1)));
}

TEST_CASE("conjugation fixes q and conjugates coefficients") {
    QScalar iq = QScalar::term(GaussianRational::i(), BigInt(1));
    CHECK(iq.conj() == QScalar::term(-GaussianRational::i(), BigInt(1)));
    CHECK(q_pow(3).conj() == q_pow(3));
    // (2+i) + i q^-1 -> (2-i) - i q^-1
    QScalar s = QScalar(GaussianRational(Rational(2), Rational(1))) +
                QScalar::term(GaussianRational::i(), BigInt(-1));
    QScalar expected = QScalar(GaussianRational(Rational(2), Rational(-1))) +
                       QScalar::term(-GaussianRational::i(), BigInt(-1));
    CHECK(s.conj() == expected);
}

TEST_CASE("evaluation at a numeric parameter") {
    CHECK(q_pow(2).eval(0.5) == std::complex<double>(0.25, 0.0));
    CHECK((QScalar::one() - q_pow(2)).eval(0.5) == std::complex<double>(0.75, 0.0));
    CHECK(QScalar::zero().eval(0.3) == std::complex<double>(0.0, 0.0));
    CHECK_THROWS_AS(q_pow(1).eval(1.5), std::domain_error);
    CHECK_THROWS_AS(q_pow(1).eval(0.0), std::domain_error);
}

TEST_CASE("pure power recognition") {
    CHECK(q_pow(3).as_q_power() == BigInt(3));
    CHECK(!(QScalar(2) * q_pow(3)).as_q_power().has_value());
    CHECK(QScalar::one().as_q_power() == BigInt(0));
    CHECK(!QScalar::zero().as_q_power().has_value());
    CHECK(!(q_pow(1) + q_pow(2)).as_q_power().has_value());
}

TEST_CASE("ring axioms on random scalars") {
    auto rng = make_rng(101);
    for (int trial = 0; trial < 300; ++trial) {
        QScalar a = random_qscalar(rng);
        QScalar b = random_qscalar(rng);
        QScalar c = random_qscalar(rng);
        CHECK(a + b == b + a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QScalar::one() == a);
        CHECK(a + QScalar::zero() == a);
        CHECK(a - a == QScalar::zero());
    }
}

TEST_CASE("conjugation is an involutive ring homomorphism") {
    auto rng = make_rng(202);
    for (int trial = 0; trial < 300; ++trial) {
        QScalar a = random_qscalar(rng);
        QScalar b = random_qscalar(rng);
        CHECK(a.conj().conj() == a);
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK((a * b).conj() == a.conj() * b.conj());
    }
}

TEST_CASE("evaluation is multiplicative") {
    auto rng = make_rng(303);
    for (double q0 : {0.3, 0.5, 0.9}) {
        for (int trial = 0; trial < 100; ++trial) {
            QScalar a = random_qscalar(rng);
            QScalar b = random_qscalar(rng);
            std::complex<double> lhs = (a * b).eval(q0);
            std::complex<double> rhs = a.eval(q0) * b.eval(q0);
            double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
            CHECK(std::abs(lhs - rhs) < 1e-12 * scale);
        }
    }
}

TEST_CASE("exact Laurent division") {
    auto rng = make_rng(404);
    for (int trial = 0; trial < 300; ++trial) {
        QScalar a = random_qscalar(rng);
        QScalar b = random_nonzero_qscalar(rng);
        auto quot = (a * b).divexact(b);
        REQUIRE(quot.has_value());
        CHECK(*quot == a);
    }
    // non-divisible pair
    CHECK(!(q_pow(1) + QScalar::one()).divexact(q_pow(1) + QScalar(2)).has_value());
    CHECK_THROWS_AS(q_pow(1).divexact(QScalar::zero()), std::domain_error);
}

TEST_CASE("scalar printing round-trips through the parser") {
    auto rng = make_rng(505);
    for (int trial = 0; trial < 200; ++trial) {
        QScalar a = random_qscalar(rng);
        CHECK(parse_scalar(to_string(a)) == a);
    }
    CHECK(to_string(QScalar::zero()) == "0");
    CHECK(to_string(q_pow(-2)) == "q^-2");
}
