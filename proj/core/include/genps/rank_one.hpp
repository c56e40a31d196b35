#pragma once

#include <map>
#include <string>
#include <vector>

#include "genps/rational.hpp"
#include "genps/root_system.hpp"

namespace genps::rankone {

/// Polynomial in the commuting symbols h and t with exact coefficients,
/// stored densely by (h-degree, t-degree).
class BivariatePoly {
public:
    BivariatePoly() = default;
    static BivariatePoly constant(Rat c);
    /// a*h + b*t + c
    static BivariatePoly linear(Rat a, Rat b, Rat c);

    BivariatePoly operator*(const BivariatePoly& o) const;
    BivariatePoly operator+(const BivariatePoly& o) const;
    bool operator==(const BivariatePoly& o) const { return c_ == o.c_; }

    /// In-place multiplication by (h + t_sign * t + c0); the hot path of
    /// the q-polynomial builders.
    void mul_linear(int t_sign, const Rat& c0);

    /// Nonzero coefficients keyed by (h-degree, t-degree).
    std::map<std::pair<int, int>, Rat> coeffs() const;
    int total_degree() const;
    std::string str() const;

    /// Substitute h -> nu + h_shift and t -> t_value; returns coefficients of
    /// the resulting univariate polynomial in nu, indexed by degree.
    std::map<int, Rat> substitute(const Rat& h_shift, const Rat& t_value) const;

private:
    void trim();
    std::vector<std::vector<Rat>> c_;  // c_[dh][dt]; trimmed trailing zeros
};

enum class TSign { PlusT, MinusT };   // PlusT holds Q(Zbar^l), MinusT holds Q(Z^l)
enum class RBranch { PlusR, MinusR, Trivial };

/// prod_{j=0}^{l-1} (h + 2j -+ t), expanded.
BivariatePoly q_closed_form(long l, TSign sign);

/// Same polynomial by the recursion Q(Z^l) = (h + 2(l-1) - t) Q(Z^(l-1));
/// an independent code path kept as a self-check against q_closed_form.
BivariatePoly q_recursive(long l, TSign sign);

/// Product of monic linear factors (nu + shift) with a scalar, in one
/// variable (the coroot coordinate of a fixed root).
struct LinearFactors {
    Rat scalar = Rat(1);
    std::vector<Rat> shifts;  // multiset

    long degree() const { return static_cast<long>(shifts.size()); }
    CRat evaluate(const CRat& nu) const;
    std::map<int, Rat> expand() const;  // coefficients by degree
    void sort();
};

/// A rank-one determinant factor: degree l, branch sign, dominant t-weight r.
struct RankOneFactor {
    long degree_l = 0;
    TSign sign = TSign::PlusT;
    Rat r;

    LinearFactors factors() const;
};

/// The rank-one determinant as a factor list:
///   PlusR  : prod_{j=0}^{l-1} (nu + 2j + 1 + r)
///   MinusR : prod_{j=0}^{l-1} (nu + 2j + 1 - r)
///   Trivial: prod_{j=0}^{l-1} (nu + 2j + 1)        (t acts trivially)
LinearFactors p_factor(long l, const Rat& r, RBranch branch);

enum class RhoShiftMode { Shifted, Unshifted };

/// Conversion between the rho-shifted convention (the default here; all the
/// cyclicity and intertwining formulas are stated in it) and the unshifted
/// one. Shifted mode is the identity on factor shifts; unshifted mode adds
/// <rho_phi - rho, phi^vee> = 1 - <rho, phi^vee> to every shift.
LinearFactors translate_factor(const LinearFactors& p, const roots::Root& phi,
                               const roots::RootSystem& rs, RhoShiftMode mode);

}  // namespace genps::rankone
