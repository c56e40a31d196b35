#pragma once

#include <map>
#include <vector>

#include "genps/rank_one.hpp"
#include "genps/rational.hpp"
#include "genps/rep_theory.hpp"
#include "genps/root_system.hpp"
#include "genps/small_k.hpp"

namespace genps::pxi {

/// One linear factor (2(nu,phi)/(phi,phi) + shift)^mult of a determinant.
struct Factor {
    roots::Root root;
    Rat shift;
    long mult = 1;
};

/// The determinant p_xi(nu) as a factored product over positive roots:
/// scalar * prod (2(nu,phi)/(phi,phi) + shift)^mult. Kept factored so that
/// zero-testing on a* is exact hyperplane membership; expansion is for
/// display only.
class FactoredPolynomial {
public:
    FactoredPolynomial() = default;
    explicit FactoredPolynomial(Rat scalar) : scalar_(std::move(scalar)) {}

    const Rat& scalar() const { return scalar_; }
    const std::vector<Factor>& factors() const { return factors_; }
    long total_degree() const;

    void add_factor(const roots::Root& root, Rat shift, long mult = 1);

    /// Exact evaluation at a complex rational point (epsilon coordinates);
    /// zero iff some factor's hyperplane contains nu.
    CRat evaluate(const std::vector<CRat>& nu) const;
    CRat evaluate(const Vec& nu_re, const Vec& nu_im) const;
    Rat evaluate_real(const Vec& nu) const;

    /// Shift multisets keyed by root coordinates, ascending shifts.
    std::map<Vec, std::vector<Rat>, VecLess> per_root_shifts() const;

    /// Multiset equality of factors and equal scalar.
    friend bool operator==(const FactoredPolynomial& a, const FactoredPolynomial& b);

private:
    void canonicalize();

    Rat scalar_ = Rat(1);
    std::vector<Factor> factors_;
};

/// A K type occurring in the principal series, with its 0M multiplicity.
struct XiSpec {
    roots::LieType lie_type;
    smallk::SmallKType tau;
    rep::Irrep xi;
    long n_xi = 0;
};

/// Builds an XiSpec, enforcing n(xi) * dim(tau) = dim(xi).
XiSpec make_xi_spec(const roots::LieType& lie_type, const smallk::SmallKType& tau,
                    const rep::Irrep& xi);

/// n(xi) = dim Hom_0M(V_tau, V_xi) = dim(xi)/dim(tau); the division is exact
/// for genuine xi of the covered groups, and a failure signals a xi outside
/// that scope.
long n_xi(const rep::Irrep& xi, const smallk::SmallKType& tau);

/// The shift multiset of q_nu(m) for odd m:
///   4 | m-1 :  prod_{l=0..(m-1)/4} prod_{j<l} (nu+2j+1/2)(nu+2j+3/2)
///   4 | m-3 :  the same product to (m-3)/4, times prod_{k<=(m-3)/4} (nu+2k+1/2)
std::vector<Rat> q_factors(long m);

/// Full closed-form determinant for SL(n,R)~, n >= 3: branch xi to Spin(3),
/// attach prod_k q(j_k) to every positive root of A_(n-1), and apply the
/// global exponent 2/dim(V_tau) (integrality of the resulting
/// multiplicities is asserted).
FactoredPolynomial pxi_type_a(int n, const Vec& xi_weight);

/// Merge externally supplied per-root factor lists (indices into
/// rs.positive_roots()) into a single determinant with scalar 1.
FactoredPolynomial assemble_product(const roots::RootSystem& rs,
                                    const std::map<int, std::vector<Rat>>& per_root_shifts);

/// dim V_tau for the small Spin(n) type of SL(n,R)~.
long small_type_dim(int n);

}  // namespace genps::pxi
