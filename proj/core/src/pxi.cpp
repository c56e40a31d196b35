#include "genps/pxi.hpp"

#include <algorithm>

namespace genps::pxi {

using roots::RootSystem;

long FactoredPolynomial::total_degree() const {
    long d = 0;
    for (const auto& f : factors_) d += f.mult;
    return d;
}

void FactoredPolynomial::add_factor(const roots::Root& root, Rat shift, long mult) {
    if (mult <= 0) throw std::invalid_argument("factor multiplicity must be positive");
    for (auto& f : factors_) {
        if (f.root.coords == root.coords && f.shift == shift) {
            f.mult += mult;
            return;
        }
    }
    factors_.push_back(Factor{root, std::move(shift), mult});
    canonicalize();
}

void FactoredPolynomial::canonicalize() {
    std::sort(factors_.begin(), factors_.end(), [](const Factor& a, const Factor& b) {
        if (a.root.simple_coeffs != b.root.simple_coeffs)
            return a.root.simple_coeffs < b.root.simple_coeffs;
        return a.shift < b.shift;
    });
}

CRat FactoredPolynomial::evaluate(const std::vector<CRat>& nu) const {
    CRat value{scalar_, Rat(0)};
    for (const auto& f : factors_) {
        if (nu.size() != f.root.coords.size())
            throw std::invalid_argument("evaluate: dimension mismatch");
        CRat pairing;
        for (size_t i = 0; i < nu.size(); ++i)
            pairing = pairing + nu[i] * CRat(Rat(2 * f.root.coords[i] / f.root.norm2));
        CRat factor = pairing + CRat(f.shift);
        for (long k = 0; k < f.mult; ++k) value = value * factor;
    }
    return value;
}

CRat FactoredPolynomial::evaluate(const Vec& nu_re, const Vec& nu_im) const {
    if (nu_re.size() != nu_im.size()) throw std::invalid_argument("evaluate: re/im mismatch");
    std::vector<CRat> nu(nu_re.size());
    for (size_t i = 0; i < nu.size(); ++i) nu[i] = CRat(nu_re[i], nu_im[i]);
    return evaluate(nu);
}

Rat FactoredPolynomial::evaluate_real(const Vec& nu) const {
    CRat v = evaluate(nu, Vec(nu.size(), Rat(0)));
    return v.re;
}

std::map<Vec, std::vector<Rat>, VecLess> FactoredPolynomial::per_root_shifts() const {
    std::map<Vec, std::vector<Rat>, VecLess> out;
    for (const auto& f : factors_) {
        auto& list = out[f.root.coords];
        for (long k = 0; k < f.mult; ++k) list.push_back(f.shift);
    }
    for (auto& [root, shifts] : out)
        std::sort(shifts.begin(), shifts.end(), [](const Rat& a, const Rat& b) { return a < b; });
    return out;
}

bool operator==(const FactoredPolynomial& a, const FactoredPolynomial& b) {
    return a.scalar_ == b.scalar_ && a.per_root_shifts() == b.per_root_shifts();
}

XiSpec make_xi_spec(const roots::LieType& lie_type, const smallk::SmallKType& tau,
                    const rep::Irrep& xi) {
    XiSpec spec{lie_type, tau, xi, n_xi(xi, tau)};
    if (spec.n_xi * tau.dim != rep::weyl_dim(xi))
        throw std::logic_error("n(xi) * dim(tau) != dim(xi)");
    return spec;
}

long n_xi(const rep::Irrep& xi, const smallk::SmallKType& tau) {
    long dx = rep::weyl_dim(xi);
    if (tau.dim <= 0) throw std::invalid_argument("tau has no dimension");
    if (dx % tau.dim != 0)
        throw DomainError(xi.str() + ": dimension " + std::to_string(dx) +
                          " is not a multiple of dim(tau) = " + std::to_string(tau.dim) +
                          "; xi is not genuine or the group is outside the covered list");
    return dx / tau.dim;
}

std::vector<Rat> q_factors(long m) {
    if (m < 1 || m % 2 == 0) throw std::invalid_argument("q_factors expects odd positive m");
    std::vector<Rat> shifts;
    long bound = (m % 4 == 1) ? (m - 1) / 4 : (m - 3) / 4;
    for (long l = 0; l <= bound; ++l) {
        for (long j = 0; j < l; ++j) {
            shifts.push_back(Rat(4 * j + 1, 2));  // 2j + 1/2
            shifts.push_back(Rat(4 * j + 3, 2));  // 2j + 3/2
        }
    }
    if (m % 4 == 3) {
        for (long k = 0; k <= bound; ++k) shifts.push_back(Rat(4 * k + 1, 2));
    }
    std::sort(shifts.begin(), shifts.end(), [](const Rat& a, const Rat& b) { return a < b; });
    return shifts;
}

long small_type_dim(int n) {
    if (n < 3) throw std::invalid_argument("small_type_dim requires n >= 3");
    return n % 2 == 1 ? (1L << (n / 2)) : (1L << (n / 2 - 1));
}

FactoredPolynomial pxi_type_a(int n, const Vec& xi_weight) {
    if (n < 3) throw std::invalid_argument("pxi_type_a requires n >= 3");
    auto xi = rep::Irrep::spin(n, xi_weight);
    auto js = rep::branch_to_spin3(xi);  // rejects non-genuine weights

    std::map<Rat, long> counted;
    for (long j : js)
        for (const auto& s : q_factors(j)) counted[s] += 1;

    long dim_tau = small_type_dim(n);
    FactoredPolynomial out;
    auto rs = RootSystem::build(roots::LieType(roots::Series::A, n - 1));
    for (const auto& [shift, count] : counted) {
        Rat scaled = rat(2 * count, dim_tau);
        if (!is_integer(scaled))
            throw DomainError("non-integer factor multiplicity " + rat_str(scaled) +
                              " after applying the exponent 2/dim(tau)");
        long mult = rat_to_long(scaled);
        if (mult == 0) continue;
        for (const auto& phi : rs.positive_roots()) out.add_factor(phi, shift, mult);
    }
    return out;
}

FactoredPolynomial assemble_product(const RootSystem& rs,
                                    const std::map<int, std::vector<Rat>>& per_root_shifts) {
    FactoredPolynomial out;
    const long n_roots = static_cast<long>(rs.positive_roots().size());
    for (const auto& [index, shifts] : per_root_shifts) {
        if (index < 0 || index >= n_roots)
            throw std::invalid_argument("root index " + std::to_string(index) +
                                        " is not a positive root of " + rs.type().name());
        for (const auto& s : shifts) out.add_factor(rs.positive_roots()[index], s);
    }
    return out;
}

}  // namespace genps::pxi
