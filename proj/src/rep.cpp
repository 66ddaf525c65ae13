#include "qhs/rep.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace qhs {

TruncatedRep::TruncatedRep(int N, double q0) : N_(N), q0_(q0) {
    if (N < 1)
        throw std::invalid_argument("TruncatedRep: N must be >= 1");
    if (!(q0 > 0.0 && q0 < 1.0))
        throw std::domain_error("TruncatedRep: q0 must lie in (0,1)");
    alpha_ = Eigen::MatrixXd::Zero(N, N);
    gamma_ = Eigen::MatrixXd::Zero(N, N);
    for (int n = 0; n < N; ++n)
        gamma_(n, n) = -std::pow(q0, n);
    for (int n = 1; n < N; ++n)
        alpha_(n - 1, n) = std::sqrt(1.0 - std::pow(q0, 2 * n));
}

Eigen::MatrixXd TruncatedRep::alpha_power(long long i) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Identity(N_, N_);
    Eigen::MatrixXd base = alpha_;
    if (i < 0)
        base = alpha_.transpose();
    for (long long t = 0; t < (i >= 0 ? i : -i); ++t)
        m = m * base;
    return m;
}

Eigen::MatrixXcd TruncatedRep::matrix(const SUq2Element& a) const {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N_, N_);
    for (const auto& [m, c] : a.terms()) {
        Eigen::MatrixXd gpow = Eigen::MatrixXd::Identity(N_, N_);
        for (long long t = 0; t < m.j + m.k; ++t)
            gpow = gpow * gamma_;
        acc += c.eval(q0_) * (alpha_power(m.i) * gpow);
    }
    return acc;
}

Eigen::MatrixXcd TruncatedRep::matrix(const DiskElement& a) const {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(N_, N_);
    for (const auto& [m, c] : a.terms()) {
        Eigen::MatrixXd mat = Eigen::MatrixXd::Identity(N_, N_);
        for (long long t = 0; t < m.J; ++t)
            mat = mat * gamma_;
        Eigen::MatrixXd zmat = alpha_;
        if (m.K > 0)
            zmat = alpha_.transpose();
        for (long long t = 0; t < (m.K < 0 ? -m.K : m.K); ++t)
            mat = mat * zmat;
        acc += c.eval(q0_) * mat;
    }
    return acc;
}

double relation_residuals(const TruncatedRep& rep) {
    if (rep.N() < 3)
        throw std::invalid_argument("relation_residuals: N must be >= 3");
    const int B = rep.N() - 1; // edge-excluded block size
    const Eigen::MatrixXd& A = rep.alpha();
    const Eigen::MatrixXd& G = rep.gamma();
    const Eigen::MatrixXd At = A.transpose();
    const double q0 = rep.q0();
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(rep.N(), rep.N());

    std::vector<Eigen::MatrixXd> residuals = {
        A * G - q0 * G * A,
        A * G - q0 * G * A, // gamma* has the same matrix as gamma
        G * G - G * G,
        At * A + G * G - I,
        A * At + (q0 * q0) * G * G - I,
    };
    double worst = 0.0;
    for (const auto& R : residuals)
        worst = std::max(worst, R.topLeftCorner(B, B).cwiseAbs().maxCoeff());
    return worst;
}

std::optional<long long> shift_degree(const SUq2Element& a, const TruncatedRep& rep) {
    auto parts = alpha_degree_decompose(a);
    if (parts.size() > 1)
        throw std::invalid_argument("shift_degree: element is not grading-homogeneous");
    Eigen::MatrixXcd M = rep.matrix(a);
    std::optional<long long> degree;
    for (int r = 0; r < rep.N(); ++r) {
        for (int c = 0; c < rep.N(); ++c) {
            if (M(r, c) == std::complex<double>(0.0, 0.0))
                continue;
            long long offset = c - r;
            if (degree && *degree != offset)
                return std::nullopt;
            degree = offset;
        }
    }
    return degree;
}

bool kernel_membership(const SUq2Element& a) { return f_q(a).is_zero(); }

bool faithfulness_rank(int D, const TruncatedRep& rep) {
    if (D < 0)
        throw std::invalid_argument("faithfulness_rank: D must be >= 0");
    std::vector<DiskMonomial> basis;
    for (long long J = 0; J <= D; ++J)
        for (long long K = -(D - J); K <= D - J; ++K)
            basis.push_back({J, K});

    const int N = rep.N();
    Eigen::MatrixXd flat(static_cast<int>(basis.size()), N * N);
    for (std::size_t b = 0; b < basis.size(); ++b) {
        Eigen::MatrixXcd M = rep.matrix(DiskElement::monomial(basis[b]));
        for (int r = 0; r < N; ++r)
            for (int c = 0; c < N; ++c)
                flat(static_cast<int>(b), r * N + c) = M(r, c).real();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(flat);
    const auto& sv = svd.singularValues();
    if (sv.size() == 0)
        return basis.empty();
    int rank = 0;
    for (int s = 0; s < sv.size(); ++s)
        if (sv(s) > 1e-8 * sv(0))
            ++rank;
    return rank == static_cast<int>(basis.size());
}

bool compact_ideal_check(TorusOrder n, const TruncatedRep& rep) {
    // alpha* gamma acts as e_m -> -q0^m sqrt(1 - q0^(2m+2)) e_{m+1}; the
    // weights must be nonzero and pairwise distinct at the truncation.
    Eigen::MatrixXcd S = rep.matrix(mul(SUq2Element::alpha_star(), SUq2Element::gamma()));
    const int N = rep.N();
    std::vector<double> weights;
    for (int r = 0; r < N; ++r)
        for (int c = 0; c < N; ++c) {
            if (S(r, c) == std::complex<double>(0.0, 0.0))
                continue;
            if (r != c + 1)
                return false; // not a lowering-to-raising shift pattern
            weights.push_back(S(r, c).real());
        }
    if (static_cast<int>(weights.size()) != N - 1)
        return false;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i] == 0.0)
            return false;
        for (std::size_t j = i + 1; j < weights.size(); ++j)
            if (weights[i] == weights[j])
                return false;
    }

    // Sampled monomials of C[SU_q(2)/T_n] must commute after the quotient
    // killing gamma.
    std::mt19937 rng(20260809u);
    std::uniform_int_distribution<long long> small(0, 3);
    auto random_member = [&]() {
        long long j = small(rng), k = small(rng);
        long long i;
        if (n.is_infinite()) {
            i = k - j;
        } else {
            long long t = small(rng) - 1;
            i = t * n.value() + (k - j);
        }
        return SUq2Element::monomial({i, j, k});
    };
    for (int trial = 0; trial < 32; ++trial) {
        SUq2Element x = random_member();
        SUq2Element y = random_member();
        if (quotient_by_gamma(mul(x, y)) != quotient_by_gamma(mul(y, x)))
            return false;
    }
    return true;
}

} // namespace qhs
