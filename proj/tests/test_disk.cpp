#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qhs/disk.hpp"
#include "test_support.hpp"

using namespace qhs;
using qhs::testing::make_rng;
using qhs::testing::random_disk_monomial;
using qhs::testing::random_disk_word;
using qhs::testing::random_nonzero_qscalar;
using qhs::testing::random_su_element;

namespace {

QScalar q_pow(long e) { return QScalar::q_power(BigInt(e)); }

DiskElement dmono(long long J, long long K, QScalar c = QScalar::one()) {
    return DiskElement::monomial({J, K}, std::move(c));
}

SUq2Element smono(long long i, long long j, long long k) {
    return SUq2Element::monomial({i, j, k});
}

} // namespace

TEST_CASE("disk normalize orients the defining relations") {
    CHECK(disk_normalize("zy") == dmono(1, 1, q_pow(-1)));
    CHECK(disk_normalize("Zy") == dmono(1, -1, q_pow(1)));
    CHECK(disk_normalize("zZ") == DiskElement::unit() - dmono(2, 0));
    CHECK(disk_normalize("Zz") == DiskElement::unit() - dmono(2, 0, q_pow(2)));
}

TEST_CASE("disk normal form is strategy independent") {
    // z*zz has a single initial redex; confirm against both strategies
    DiskElement a = disk_normalize("Zzz", QScalar::one(), Strategy::LeftmostFirst);
    DiskElement b = disk_normalize("Zzz", QScalar::one(), Strategy::RightmostFirst);
    CHECK(a == b);
    CHECK(a == dmono(0, 1) - dmono(2, 1, q_pow(2))); // (z*z)z = z - q^2 y^2 z

    static const char letters[] = {kY, kZ, kZStar};
    std::vector<std::string> words{""};
    for (int len = 1; len <= 4; ++len) {
        std::vector<std::string> next;
        for (const auto& w : words)
            if (static_cast<int>(w.size()) == len - 1)
                for (char c : letters)
                    next.push_back(w + c);
        for (const auto& w : next) {
            CAPTURE(w);
            CHECK(disk_normalize(w, QScalar::one(), Strategy::LeftmostFirst) ==
                  disk_normalize(w, QScalar::one(), Strategy::RightmostFirst));
        }
        words.insert(words.end(), next.begin(), next.end());
    }

    auto rng = make_rng(2001);
    for (int trial = 0; trial < 500; ++trial) {
        std::string w = random_disk_word(rng);
        CAPTURE(w);
        CHECK(disk_normalize(w, QScalar::one(), Strategy::LeftmostFirst) ==
              disk_normalize(w, QScalar::one(), Strategy::RightmostFirst));
    }
}

TEST_CASE("disk relations hold exactly after normalization") {
    DiskElement z = DiskElement::z();
    DiskElement y = DiskElement::y();
    CHECK(mul(z, star(z)) + mul(y, y) == DiskElement::unit());
    CHECK(mul(star(z), z) + mul(y, y) * q_pow(2) == DiskElement::unit());
    CHECK(star(y) == y);
}

TEST_CASE("quotient map examples") {
    CHECK(f_q(SUq2Element::gamma() - SUq2Element::gamma_star()).is_zero());
    // gamma* alpha maps to y z*
    CHECK(f_q(mul(SUq2Element::gamma_star(), SUq2Element::alpha())) == dmono(1, -1));
    // gamma^(n+1) alpha* maps to y^(n+1) z for n = 3
    CHECK(f_q(mul(smono(0, 4, 0), SUq2Element::alpha_star())) == dmono(4, 1));
}

TEST_CASE("quotient map is a unital *-homomorphism") {
    auto rng = make_rng(2002);
    CHECK(f_q(SUq2Element::unit()) == DiskElement::unit());
    for (int trial = 0; trial < 100; ++trial) {
        SUq2Element a = random_su_element(rng, 2);
        SUq2Element b = random_su_element(rng, 2);
        CHECK(f_q(mul(a, b)) == mul(f_q(a), f_q(b)));
        CHECK(f_q(star(a)) == star(f_q(a)));
        CHECK(f_q(a + b) == f_q(a) + f_q(b));
    }
}

TEST_CASE("kernel of the quotient is the ideal generated by gamma - gamma*") {
    auto rng = make_rng(2003);
    SUq2Element ideal_gen = SUq2Element::gamma() - SUq2Element::gamma_star();
    for (int trial = 0; trial < 100; ++trial) {
        SUq2Element x = random_su_element(rng, 2);
        SUq2Element y = random_su_element(rng, 2);
        CHECK(f_q(mul(mul(x, ideal_gen), y)).is_zero());
    }
}

TEST_CASE("disk T_n membership") {
    // y z* lies in the even subalgebra (preimage weight 2)
    CHECK(disk_tn_member({1, -1}, TorusOrder::finite(2)));
    // y alone is excluded from the full-torus subalgebra
    CHECK_FALSE(disk_tn_member({1, 0}, TorusOrder::infinite()));
    // y^2 = image of gamma* gamma survives
    CHECK(disk_tn_member({2, 0}, TorusOrder::infinite()));
    // everything lies in the n = 1 algebra
    auto rng = make_rng(2004);
    for (int trial = 0; trial < 50; ++trial)
        CHECK(disk_tn_member(random_disk_monomial(rng), TorusOrder::finite(1)));
}

TEST_CASE("even or infinite n forces J = K (mod 2)") {
    auto torus_orders = {TorusOrder::finite(2), TorusOrder::finite(4), TorusOrder::infinite()};
    for (TorusOrder n : torus_orders)
        for (long long J = 0; J <= 7; ++J)
            for (long long K = -7; K <= 7; ++K)
                if (disk_tn_member({J, K}, n))
                    CHECK((J - K) % 2 == 0);
}

TEST_CASE("disk T_n monomials are closed under multiplication and star") {
    auto rng = make_rng(2005);
    auto torus_orders = {TorusOrder::finite(1), TorusOrder::finite(2),
                         TorusOrder::finite(3), TorusOrder::infinite()};
    for (TorusOrder n : torus_orders) {
        int found = 0;
        for (int trial = 0; trial < 600 && found < 40; ++trial) {
            DiskMonomial a = random_disk_monomial(rng);
            DiskMonomial b = random_disk_monomial(rng);
            if (!disk_tn_member(a, n) || !disk_tn_member(b, n))
                continue;
            ++found;
            DiskElement product = mul(DiskElement::monomial(a), DiskElement::monomial(b));
            for (const auto& [m, c] : product.terms())
                CHECK(disk_tn_member(m, n));
            DiskElement adjoint = star(DiskElement::monomial(a));
            for (const auto& [m, c] : adjoint.terms())
                CHECK(disk_tn_member(m, n));
        }
        CHECK(found > 0);
    }
}

TEST_CASE("q-commutation exponent witnesses") {
    // (y z*, y^2) realizes q^2
    CHECK(q_commutation_exponent(dmono(1, -1), dmono(2, 0)) == 2);
    // (y^(n+1) z, y^n z) realizes q, n = 3
    CHECK(q_commutation_exponent(dmono(4, 1), dmono(3, 1)) == 1);
    // everything commutes with itself
    CHECK(q_commutation_exponent(DiskElement::y(), DiskElement::y()) == 0);
    // zero inputs are rejected
    CHECK_THROWS_AS(q_commutation_exponent(DiskElement::zero(), DiskElement::y()),
                    std::invalid_argument);
}

TEST_CASE("monomial exponent formula") {
    // z* side: (j,k,j',k') = (1,1,2,0) gives 2
    CHECK(monomial_exponent({1, -1}, {2, 0}) == 2);
    // z side: (n+1,1,n,1) gives 1
    for (long long n : {1, 3, 5})
        CHECK(monomial_exponent({n + 1, 1}, {n, 1}) == 1);
    // antisymmetry: equal pairs give 0
    CHECK(monomial_exponent({3, 2}, {3, 2}) == 0);
    CHECK_THROWS_AS(monomial_exponent({1, 1}, {1, -1}), std::invalid_argument);
}

TEST_CASE("exponent formula agrees with the normal-form engine") {
    auto rng = make_rng(2006);
    std::uniform_int_distribution<long long> ypow(0, 4);
    std::uniform_int_distribution<long long> zpow(0, 4);
    std::uniform_int_distribution<int> side(0, 1);
    for (int trial = 0; trial < 200; ++trial) {
        long long sign = side(rng) ? 1 : -1;
        DiskMonomial a{ypow(rng), sign * zpow(rng)};
        DiskMonomial b{ypow(rng), sign * zpow(rng)};
        long long predicted = monomial_exponent(a, b);
        auto engine = q_commutation_exponent(DiskElement::monomial(a),
                                             DiskElement::monomial(b));
        REQUIRE(engine.has_value());
        CHECK(*engine == predicted);
    }
}

TEST_CASE("brute-force oracle") {
    CHECK(brute_force_commutation_oracle(dmono(1, -1), dmono(2, 0)) == q_pow(2));
    CHECK(brute_force_commutation_oracle(DiskElement::y(), DiskElement::z()) == q_pow(1));
    CHECK(!brute_force_commutation_oracle(DiskElement::unit() + DiskElement::y(),
                                          DiskElement::z())
               .has_value());
}

TEST_CASE("oracle agrees with the exponent engine on random pairs") {
    auto rng = make_rng(2007);
    for (int trial = 0; trial < 200; ++trial) {
        DiskElement a = qhs::testing::random_disk_element(rng, 2);
        DiskElement b = qhs::testing::random_disk_element(rng, 2);
        auto m = q_commutation_exponent(a, b);
        auto w = brute_force_commutation_oracle(a, b);
        if (m.has_value()) {
            REQUIRE(w.has_value());
            CHECK(*w == q_pow(*m));
        } else if (w.has_value()) {
            // proportional but not by a pure power of q
            CHECK(!w->as_q_power().has_value());
        }
    }
}

TEST_CASE("spectrum search reproduces the parity dichotomy at small degree") {
    SpectrumReport even = commutator_spectrum_search(TorusOrder::finite(2), 6);
    CHECK(even.min_positive() == 2);
    for (long long m : even.exponents)
        CHECK(m % 2 == 0);

    SpectrumReport odd = commutator_spectrum_search(TorusOrder::finite(3), 8);
    CHECK(odd.min_positive() == 1);

    SpectrumReport full = commutator_spectrum_search(TorusOrder::infinite(), 6);
    CHECK(full.min_positive() == 2);
    for (long long m : full.exponents)
        CHECK(m % 2 == 0);
}

TEST_CASE("spectrum reports close under negation and record verified witnesses") {
    for (auto n : {TorusOrder::finite(1), TorusOrder::finite(2), TorusOrder::infinite()}) {
        SpectrumReport r = commutator_spectrum_search(n, 5);
        for (long long m : r.exponents) {
            CHECK(r.exponents.count(-m) == 1);
            const auto& [a, b] = r.witnesses.at(m);
            CHECK(q_commutation_exponent(DiskElement::monomial(a),
                                         DiskElement::monomial(b)) == m);
        }
    }
}

TEST_CASE("recorded exponents scale under powers of the witness") {
    SpectrumReport r = commutator_spectrum_search(TorusOrder::finite(3), 8);
    REQUIRE(r.min_positive() == 1);
    const auto& [a, b] = r.witnesses.at(1);
    DiskElement bb = DiskElement::monomial(b);
    DiskElement bpow = bb;
    for (long long t = 2; t <= 3; ++t) {
        bpow = mul(bpow, bb);
        CHECK(q_commutation_exponent(DiskElement::monomial(a), bpow) == t);
    }
}

TEST_CASE("spectrum report serialization") {
    SpectrumReport r = commutator_spectrum_search(TorusOrder::finite(2), 4);
    std::string text = r.to_text();
    CHECK(text.find("n=2 D=4") == 0);
    CHECK(text.find("min_positive=2") != std::string::npos);
    // witnesses are the (J,K)-lexicographically least pairs, z*-powers first
    CHECK(text.find("exponent 0: z*^4 , z*^4") != std::string::npos);
    CHECK(text == commutator_spectrum_search(TorusOrder::finite(2), 4).to_text());

    // degree 1 at n = infinity leaves only the unit monomial
    SpectrumReport tiny = commutator_spectrum_search(TorusOrder::infinite(), 1);
    CHECK(tiny.to_text().find("min_positive=none") != std::string::npos);
}
