#pragma once

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "genps/pxi.hpp"
#include "genps/rational.hpp"
#include "genps/root_system.hpp"
#include "genps/small_k.hpp"

namespace genps::analysis {

/// nu in the complexified dual of a, split into exact real and imaginary
/// coordinate vectors (epsilon basis).
struct NuParameter {
    Vec re;
    Vec im;

    static NuParameter real(Vec r) {
        Vec zero(r.size(), Rat(0));
        return {std::move(r), std::move(zero)};
    }
    static NuParameter imaginary(Vec i) {
        Vec zero(i.size(), Rat(0));
        return {std::move(zero), std::move(i)};
    }
};

struct CyclicityVerdict {
    bool cyclic = true;
    std::vector<std::pair<roots::Root, std::string>> violated_roots;
};

/// Cyclicity of the small K type inside the closed Langlands chamber.
/// Everything is cyclic except: B_n with s*p1 at 2(nu,a)/(a,a) = 0 and G2
/// with C2*p2 at 2(nu,a)/(a,a) = 1/2, both over short positive roots.
/// Throws DomainError if Re nu lies outside the closed chamber (the
/// characterization says nothing there).
CyclicityVerdict cyclicity(const roots::RootSystem& rs, const smallk::SmallKType& tau,
                           const NuParameter& nu);

struct IrreducibilityVerdict {
    bool irreducible = true;
    std::vector<roots::Root> witnesses;
};

/// Irreducibility of the unitary principal series (Re nu = 0, enforced
/// exactly): reducible only for B_n with s*p1 on the locus where a short
/// root pairs to zero.
IrreducibilityVerdict unitary_irreducible(const roots::RootSystem& rs,
                                          const smallk::SmallKType& tau, const NuParameter& nu);

struct LanglandsDescriptor {
    bool tempered = false;
    std::vector<int> f_set;  // indices of simple roots with Re(nu, alpha) = 0
    NuParameter varsigma;    // component in the span of F (tempered inducing data)
    NuParameter mu;          // component on a_F, strictly dominant there
    bool discrete_series_possible = false;  // never, for modules with a small K type
};

/// Langlands parameters of the unique irreducible quotient: tempered when
/// Re(nu, alpha) = 0 for every root, otherwise the triple determined by
/// F = {alpha simple : Re(nu, alpha) = 0} and the split nu = varsigma + mu.
LanglandsDescriptor langlands_parameters(const roots::RootSystem& rs,
                                         const smallk::SmallKType& tau, const NuParameter& nu);

// --- intertwining operator determinants for SL(n,R)~ -----------------------

/// An affine argument slope*(nu,alpha) + constant with slope +-1.
struct AffineArg {
    int slope = 1;
    Rat constant;
};

/// One quotient Gamma(num)/Gamma(den), both arguments over the same root.
struct GammaQuotient {
    int root_index = 0;
    AffineArg num;
    AffineArg den;
};

/// det A(nu) on the xi-isotypic component, as a product of Gamma quotients
/// raised to 2*dim(xi)/dim(tau) (an even integer).
struct GammaRatioProduct {
    int n = 0;  // SL(n,R)~
    std::vector<roots::Root> roots;
    std::vector<GammaQuotient> factors;
    Rat exponent;
};

GammaRatioProduct intertwining_det(int n, const Vec& xi_weight);

/// Monic linear form (nu,alpha_(root_index)) + constant.
struct LinearForm {
    int root_index = 0;
    Rat constant;

    friend bool operator<(const LinearForm& a, const LinearForm& b) {
        if (a.root_index != b.root_index) return a.root_index < b.root_index;
        return a.constant < b.constant;
    }
    friend bool operator==(const LinearForm& a, const LinearForm& b) {
        return a.root_index == b.root_index && a.constant == b.constant;
    }
};

/// A rational function sign * prod num / prod den of monic linear forms,
/// in lowest terms.
struct ReducedRatio {
    std::map<LinearForm, long> numerator;
    std::map<LinearForm, long> denominator;
    int sign = 1;

    friend bool operator==(const ReducedRatio& a, const ReducedRatio& b) {
        return a.sign == b.sign && a.numerator == b.numerator &&
               a.denominator == b.denominator;
    }
};

/// Exact symbolic reduction of the Gamma product (without the exponent) via
/// Gamma(x+1) = x Gamma(x); every quotient's arguments differ by an integer.
ReducedRatio reduce(const GammaRatioProduct& g);

/// (p(-nu)/p(nu))^power as a ReducedRatio, roots indexed in rs order.
ReducedRatio pxi_ratio(const pxi::FactoredPolynomial& p, const roots::RootSystem& rs, long power);

/// Multiplies all multiplicities (and the sign parity) by k >= 0.
ReducedRatio pow_ratio(const ReducedRatio& r, long k);

/// Exact complex-rational evaluation of a reduced ratio at nu (epsilon
/// coordinates against the given root system).
CRat evaluate_ratio(const ReducedRatio& r, const roots::RootSystem& rs,
                    const std::vector<CRat>& nu);

/// Complex log-gamma (Lanczos approximation, reflection for Re z < 1/2).
std::complex<double> log_gamma(std::complex<double> z);

/// Numeric evaluation of det A(nu) = (prod Gamma quotients)^exponent via
/// log-gamma. Refuses (DomainError) if any Gamma argument lies within 1e-8
/// of a nonpositive integer.
std::complex<double> numeric_gamma_eval(const GammaRatioProduct& g,
                                        const std::vector<std::complex<double>>& nu);

/// The reduced rational form evaluated numerically and raised to the same
/// exponent; reference value for numeric_gamma_eval.
std::complex<double> numeric_reduced_eval(const ReducedRatio& r, const GammaRatioProduct& g,
                                          const std::vector<std::complex<double>>& nu);

}  // namespace genps::analysis
