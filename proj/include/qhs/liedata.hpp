#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qhs/torus.hpp"

namespace qhs {

using CartanMatrix = std::vector<std::vector<long long>>;

// Minimal positive integer vector d with diag(d) * cartan symmetric and
// minimum 1 on each simple factor; entries land in {1,2,3} for the
// finite-type matrices accepted here. Throws std::invalid_argument on an
// invalid Cartan matrix.
std::vector<long long> symmetrizers(const CartanMatrix& cartan);

/**
 * A finite-type root datum: Cartan matrix (convention
 * a_ij = 2(alpha_i, alpha_j)/(alpha_i, alpha_i), short roots normalized to
 * (alpha, alpha) = 2) together with its symmetrizers d_i = (alpha_i,
 * alpha_i)/2, so that q_i = q^(d_i).
 */
class RootDatum {
public:
    // "A3", "B2", "G2", or a product such as "A1xB2".
    static RootDatum from_type(const std::string& type);
    static RootDatum from_cartan(CartanMatrix cartan, std::string label = "custom");

    int rank() const { return static_cast<int>(cartan_.size()); }
    const std::string& label() const { return label_; }
    const CartanMatrix& cartan() const { return cartan_; }
    const std::vector<long long>& d() const { return d_; }

    // Symmetrizer of the i-th simple root, 1-based index.
    long long d_at(int i) const;

private:
    RootDatum() = default;
    std::string label_;
    CartanMatrix cartan_;
    std::vector<long long> d_;
};

/**
 * The pair (S, L) classifying a Poisson-Lie subgroup: S a subset of the
 * simple roots (1-based indices) and L a subgroup of the weight lattice
 * P(S^c) spanned by the fundamental weights off S, given by generators in
 * fundamental-weight coordinates over S^c in increasing index order.
 */
class SubgroupData {
public:
    static SubgroupData make(std::vector<int> s, std::vector<std::vector<long long>> l_generators,
                             const RootDatum& datum);

    const std::vector<int>& s() const { return s_; }
    const std::vector<std::vector<long long>>& l_generators() const { return l_generators_; }

    bool in_s_complement(int i) const;
    const std::vector<int>& s_complement() const { return s_complement_; }

    // Position of root index i within the S^c coordinate order.
    int coordinate_of(int i) const;

private:
    SubgroupData() = default;
    std::vector<int> s_;
    std::vector<int> s_complement_;
    std::vector<std::vector<long long>> l_generators_;
};

// (mu, alpha_i) = d_i * (coefficient of omega_i in mu) for mu given in
// fundamental-weight coordinates over S^c. Throws if i is not in S^c.
long long pairing_with_simple_root(const std::vector<long long>& mu, int i,
                                   const SubgroupData& subgroup, const RootDatum& datum);

// The positive generator n_i of the subgroup {(mu, alpha_i) : mu in L}
// of Z, infinite when the subgroup is {0}.
TorusOrder restriction_torus_order(const SubgroupData& subgroup, const RootDatum& datum,
                                   int i);

/**
 * The isomorphism invariant of the quantized homogeneous space: the map
 * i -> n_i over S^c and the exponent m = min_i d_i * (1 if n_i odd else 2),
 * so that q^m is the greatest commutator-spectrum value below one common
 * to all 2-cell representation images.
 */
struct HomSpaceInvariant {
    std::map<int, TorusOrder> n; // keyed by root index in S^c
    long long m = 0;
};

HomSpaceInvariant invariant_exponent(const SubgroupData& subgroup, const RootDatum& datum);

// Whether the irreducible representation indexed by a Weyl-group element
// of the given Bruhat length (and simple-reflection index i when the
// length is 1) is a 2-cell representation.
bool is_two_cell(const SubgroupData& subgroup, const RootDatum& datum,
                 long long w_length, std::optional<int> i = std::nullopt);

enum class Verdict { isomorphic, non_isomorphic };

struct DistinguishReport {
    Verdict verdict = Verdict::non_isomorphic;
    long long m = 0;       // invariant exponent of the space
    double p_power = 0.0;  // p^m
    double q_power = 0.0;  // q^m
    bool p_commutative = false; // p == 1
    bool q_commutative = false; // q == 1
};

// Decides whether the deformations at parameters p and q of the same
// homogeneous space are *-isomorphic. Parameters must lie in (0,1]
// (fold parameters above 1 through q -> 1/q first).
DistinguishReport distinguish(double p, double q, const SubgroupData& subgroup,
                              const RootDatum& datum);

// Config-text helpers shared by the CLI: "1,3" -> {1,3} and
// "(1,0);(0,2)" -> {{1,0},{0,2}}. Empty strings give empty sets.
std::vector<int> parse_index_set(const std::string& text);
std::vector<std::vector<long long>> parse_weight_list(const std::string& text);

} // namespace qhs
