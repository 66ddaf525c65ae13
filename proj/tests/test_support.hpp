#pragma once

#include <random>
#include <string>

#include "qhs/disk.hpp"
#include "qhs/scalar.hpp"
#include "qhs/suq2.hpp"

namespace qhs::testing {

inline std::mt19937 make_rng(unsigned seed) { return std::mt19937(seed); }

inline GaussianRational random_gaussian(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-4, 4);
    std::uniform_int_distribution<long> den(1, 3);
    std::uniform_int_distribution<int> coin(0, 3);
    Rational re = make_rational(num(rng), den(rng));
    Rational im = coin(rng) == 0 ? make_rational(num(rng), den(rng)) : Rational(0);
    return GaussianRational(re, im);
}

inline QScalar random_qscalar(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<long> expo(-5, 5);
    QScalar s;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        s += QScalar::term(random_gaussian(rng), BigInt(expo(rng)));
    return s;
}

inline QScalar random_nonzero_qscalar(std::mt19937& rng, int max_terms = 3) {
    for (;;) {
        QScalar s = random_qscalar(rng, max_terms);
        if (!s.is_zero())
            return s;
    }
}

inline std::string random_su_word(std::mt19937& rng, int max_len = 10) {
    static const char letters[] = {kAlpha, kAlphaStar, kGamma, kGammaStar};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 3);
    std::string w;
    int n = len(rng);
    for (int t = 0; t < n; ++t)
        w.push_back(letters[pick(rng)]);
    return w;
}

inline std::string random_disk_word(std::mt19937& rng, int max_len = 10) {
    static const char letters[] = {kY, kZ, kZStar};
    std::uniform_int_distribution<int> len(0, max_len);
    std::uniform_int_distribution<int> pick(0, 2);
    std::string w;
    int n = len(rng);
    for (int t = 0; t < n; ++t)
        w.push_back(letters[pick(rng)]);
    return w;
}

inline SUq2Monomial random_su_monomial(std::mt19937& rng, long long max_exp = 3) {
    std::uniform_int_distribution<long long> alpha(-max_exp, max_exp);
    std::uniform_int_distribution<long long> gamma(0, max_exp);
    return {alpha(rng), gamma(rng), gamma(rng)};
}

inline SUq2Element random_su_element(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    SUq2Element e;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        e.add_term(random_su_monomial(rng), random_nonzero_qscalar(rng, 2));
    return e;
}

inline DiskMonomial random_disk_monomial(std::mt19937& rng, long long max_exp = 3) {
    std::uniform_int_distribution<long long> ypow(0, max_exp);
    std::uniform_int_distribution<long long> zpow(-max_exp, max_exp);
    return {ypow(rng), zpow(rng)};
}

inline DiskElement random_disk_element(std::mt19937& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    DiskElement e;
    int n = nterms(rng);
    for (int t = 0; t < n; ++t)
        e.add_term(random_disk_monomial(rng), random_nonzero_qscalar(rng, 2));
    return e;
}

} // namespace qhs::testing
