#pragma once

#include <array>
#include <string>
#include <vector>

#include "genps/rational.hpp"

namespace genps::oracle {

/// 2x2 matrix [[a,b],[c,d]] over Gaussian rationals.
struct Mat2 {
    CRat a, b, c, d;

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
                x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    CRat trace() const { return a + d; }
    CRat det() const { return a * d - b * c; }
    /// Inverse for det = 1 (adjugate).
    Mat2 inv_unimodular() const { return {d, -b, -c, a}; }
};

/// The order-8 centralizer group in SU(2): +-Id, +-diag(i,-i),
/// +-[[0,1],[-1,0]], +-[[0,i],[i,0]] (the quaternion group Q8).
const std::array<Mat2, 8>& zero_m_elements();

/// Group-law checks: closure, order 8, a unique element of order two.
bool zero_m_is_quaternion_group();

/// Conjugation action on t = (1/2) diag(i,-i): each element acts by +1 or
/// -1 exactly. Throws if any element does neither.
std::vector<int> zero_m_ad_signs_on_t();

/// Symmetric-power model of the SU(2) irrep with highest weight p/2 on
/// monomials x^a y^(p-a); the torus weight of x^a y^(p-a) is (2a-p)/2.
class Su2Model {
public:
    explicit Su2Model(int p);

    int p() const { return p_; }
    int dim() const { return p_ + 1; }
    Rat weight(int a) const { return rat(2 * a - p_, 2); }

    /// Matrix of (g.f)(v) = f(g^{-1} v) on the monomial basis; column a is
    /// the image of x^a y^(p-a).
    std::vector<std::vector<CRat>> action(const Mat2& g) const;

private:
    int p_;
};

/// Basis of the Q8-fixed subspace of Su2Model(p/2), by exact row reduction
/// of the averaging projector (p even; odd p has no invariants).
std::vector<std::vector<CRat>> invariant_basis(int p);

struct InvariantsReport {
    long l = 0;            // dim of the fixed subspace, by row reduction
    long l_character = 0;  // the same count by character averaging
    std::vector<Rat> dominant_weights;  // one per irreducible constituent, ascending
};

/// l(gamma) and the dominant torus weights on the span of the invariants,
/// for the harmonic constituent of highest weight p/2 (p even).
InvariantsReport invariants_dim(int p);

/// The dominant t weights {1/2, 3/2, ..., p/2} on Su2Model(p/2) for p odd,
/// computed by decomposing under the group generated by the torus and Q8
/// and certifying each 2-dimensional constituent is the genuine Q8 type.
std::vector<Rat> genuine_weight_list(int p);

struct ComparisonEntry {
    int p = 0;
    bool matched = false;
    std::vector<Rat> xi_weights;
    std::vector<Rat> gamma_weights;
    std::vector<int> signs;  // +1 / -1 per xi weight, the exhibited bijection
    std::string detail;
};

struct ComparisonReport {
    bool pass = false;
    std::vector<ComparisonEntry> entries;
};

/// For each odd p <= p_max, exhibits a bijection delta_j = delta_j^xi +- 1/2
/// between the genuine weights of Su2Model(p/2) and the invariant weights of
/// the harmonic constituents gamma with V_xi < V_gamma (x) V_tau.
ComparisonReport verify_weight_comparison(int p_max);

struct MultiplicityEntry {
    int p = 0;
    long n_xi = 0;
    long sum_l = 0;
    bool matched = false;
    std::vector<int> gamma_degrees;  // sym degrees of the contributing gammas
};

struct MultiplicityReport {
    bool pass = false;
    std::vector<MultiplicityEntry> entries;
};

/// n(xi) = sum_j l(gamma_j) over the harmonic types with V_xi < V_gamma (x)
/// V_tau, checked against the count from genuine_weight_list and against
/// dim(xi)/dim(tau).
MultiplicityReport verify_multiplicity_identity(int p_max);

/// Sym degrees q (even) of the harmonic gamma types with
/// V_(p/2) < V_(q/2) (x) V_(1/2) and l(gamma) >= 1, certified against the
/// Clebsch-Gordan decomposition.
std::vector<int> gamma_candidates(int p);

}  // namespace genps::oracle
