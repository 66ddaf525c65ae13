#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qhs/disk.hpp"
#include "qhs/suq2.hpp"
#include "qhs/torus.hpp"

namespace qhs {

/**
 * The standard irreducible representation on l^2(Z_+), truncated to the
 * span of e_0..e_{N-1} at a numeric parameter q0 in (0,1):
 *
 *   alpha: e_n -> sqrt(1 - q0^(2n)) e_{n-1}   (so column 0 is zero),
 *   gamma: e_n -> -q0^n e_n                   (self-adjoint diagonal).
 *
 * Monomial matrices are exact compressions of the untruncated operators;
 * truncation error enters only through products of truncated matrices.
 */
class TruncatedRep {
public:
    TruncatedRep(int N, double q0);

    int N() const { return N_; }
    double q0() const { return q0_; }

    const Eigen::MatrixXd& alpha() const { return alpha_; }
    const Eigen::MatrixXd& gamma() const { return gamma_; }

    // Image of an element of C[SU_q(2)], monomial by monomial, with
    // gamma* evaluated as gamma.
    Eigen::MatrixXcd matrix(const SUq2Element& a) const;

    // Image of a disk element under the faithful representation of
    // C[D_q]: y -> gamma-matrix, z -> alpha-matrix transposed.
    Eigen::MatrixXcd matrix(const DiskElement& a) const;

private:
    Eigen::MatrixXd alpha_power(long long i) const; // alpha^(i), signed

    int N_;
    double q0_;
    Eigen::MatrixXd alpha_, gamma_;
};

// Maximum entrywise residual of the five defining relations, measured on
// the subspace spanned by e_0..e_{N-2}; the top corner of
// alpha alpha* + q^2 gamma* gamma - 1 is a known truncation artifact of
// size 1 - q0^(2N) and is excluded. Requires N >= 3.
double relation_residuals(const TruncatedRep& rep);

// The diagonal offset i (entries at column - row = i) supporting the
// matrix of a grading-homogeneous element; empty for the zero matrix.
// Throws if the element mixes alpha-degrees.
std::optional<long long> shift_degree(const SUq2Element& a, const TruncatedRep& rep);

// Whether a lies in the kernel of the standard representation, i.e. the
// ideal generated by gamma - gamma*. Decided exactly via the disk quotient.
bool kernel_membership(const SUq2Element& a);

// Linear independence of the matrices of all disk basis monomials of
// total degree <= D, decided by numerical rank (singular values above
// 1e-8 of the largest). The truncation should satisfy N >= 2D + 4.
bool faithfulness_rank(int D, const TruncatedRep& rep);

// Finite-dimensional shadows of the two-cell structure of the standard
// representation on C[SU_q(2)/T_n]: the matrix of alpha* gamma is a
// weighted shift with distinct nonzero weights, and the quotient killing
// gamma maps sampled T_n-subalgebra pairs to commuting images.
bool compact_ideal_check(TorusOrder n, const TruncatedRep& rep);

} // namespace qhs
