#include "genps/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "genps/rep_theory.hpp"

namespace genps::analysis {

using roots::RootSystem;
using roots::Series;
using smallk::Label;

namespace {

void check_dims(const RootSystem& rs, const NuParameter& nu) {
    if (static_cast<int>(nu.re.size()) != rs.ambient_dim() ||
        static_cast<int>(nu.im.size()) != rs.ambient_dim())
        throw std::invalid_argument("nu must have " + std::to_string(rs.ambient_dim()) +
                                    " epsilon coordinates");
}

void check_tau(const RootSystem& rs, const smallk::SmallKType& tau) {
    if (tau.lie_type.series != rs.series() || tau.lie_type.rank != rs.rank())
        throw std::invalid_argument("small K type " + tau.str() + " does not belong to " +
                                    rs.type().name());
}

CRat complex_coroot_pairing(const RootSystem& rs, const NuParameter& nu, const roots::Root& phi) {
    return CRat(rs.pairing(nu.re, phi), rs.pairing(nu.im, phi));
}

}  // namespace

CyclicityVerdict cyclicity(const RootSystem& rs, const smallk::SmallKType& tau,
                           const NuParameter& nu) {
    check_dims(rs, nu);
    check_tau(rs, tau);
    if (!rs.in_closed_langlands_chamber(nu.re))
        throw DomainError("Re nu lies outside the closed Langlands chamber; cyclicity is "
                          "characterized only inside it");

    CyclicityVerdict verdict;
    const bool bn_sp1 = rs.series() == Series::B && tau.label == Label::SP1;
    const bool g2_c2p2 = rs.series() == Series::G && tau.label == Label::C2P2;
    if (!bn_sp1 && !g2_c2p2) return verdict;  // always cyclic

    for (const auto& phi : rs.positive_roots()) {
        if (phi.length_class != roots::LengthClass::Short) continue;
        CRat z = complex_coroot_pairing(rs, nu, phi);
        if (bn_sp1 && z.is_zero()) {
            verdict.violated_roots.emplace_back(phi, "2(nu,a)/(a,a) = 0 on a short root");
        } else if (g2_c2p2 && z == CRat(Rat(1, 2))) {
            verdict.violated_roots.emplace_back(phi, "2(nu,a)/(a,a) = 1/2 on a short root");
        }
    }
    verdict.cyclic = verdict.violated_roots.empty();
    return verdict;
}

IrreducibilityVerdict unitary_irreducible(const RootSystem& rs, const smallk::SmallKType& tau,
                                          const NuParameter& nu) {
    check_dims(rs, nu);
    check_tau(rs, tau);
    if (!is_zero(nu.re))
        throw DomainError("unitary_irreducible requires Re nu = 0 exactly "
                          "(coordinatewise zero real part)");

    IrreducibilityVerdict verdict;
    if (!(rs.series() == Series::B && tau.label == Label::SP1)) return verdict;
    for (const auto& phi : rs.positive_roots()) {
        if (phi.length_class != roots::LengthClass::Short) continue;
        if (rs.pairing(nu.im, phi) == 0) verdict.witnesses.push_back(phi);
    }
    verdict.irreducible = verdict.witnesses.empty();
    return verdict;
}

LanglandsDescriptor langlands_parameters(const RootSystem& rs, const smallk::SmallKType& tau,
                                         const NuParameter& nu) {
    check_dims(rs, nu);
    check_tau(rs, tau);
    if (!rs.in_closed_langlands_chamber(nu.re))
        throw DomainError("Re nu lies outside the closed Langlands chamber");

    LanglandsDescriptor out;
    for (size_t i = 0; i < rs.simple_roots().size(); ++i)
        if (dot(nu.re, rs.simple_roots()[i].coords) == 0) out.f_set.push_back(static_cast<int>(i));

    const int dim = rs.ambient_dim();
    if (out.f_set.size() == rs.simple_roots().size()) {
        out.tempered = true;
        out.varsigma = nu;
        out.mu = NuParameter{Vec(dim, Rat(0)), Vec(dim, Rat(0))};
        return out;
    }

    // varsigma = orthogonal projection of nu onto span{alpha : alpha in F},
    // computed once per component from the Gram system of the F-roots.
    auto project = [&](const Vec& v) {
        const size_t m = out.f_set.size();
        if (m == 0) return Vec(dim, Rat(0));
        std::vector<Vec> sys(m, Vec(m + 1, Rat(0)));
        for (size_t i = 0; i < m; ++i) {
            const Vec& ai = rs.simple_roots()[out.f_set[i]].coords;
            for (size_t j = 0; j < m; ++j)
                sys[i][j] = dot(rs.simple_roots()[out.f_set[j]].coords, ai);
            sys[i][m] = dot(v, ai);
        }
        for (size_t col = 0; col < m; ++col) {
            size_t piv = col;
            while (piv < m && sys[piv][col] == 0) ++piv;
            if (piv == m) throw std::logic_error("singular Gram matrix of simple roots");
            std::swap(sys[col], sys[piv]);
            Rat inv = Rat(1) / sys[col][col];
            for (size_t c = col; c <= m; ++c) sys[col][c] *= inv;
            for (size_t r = 0; r < m; ++r) {
                if (r == col || sys[r][col] == 0) continue;
                Rat f = sys[r][col];
                for (size_t c = col; c <= m; ++c) sys[r][c] -= f * sys[col][c];
            }
        }
        Vec proj(dim, Rat(0));
        for (size_t j = 0; j < m; ++j)
            proj = add(proj, scale(sys[j][m], rs.simple_roots()[out.f_set[j]].coords));
        return proj;
    };

    out.varsigma = NuParameter{project(nu.re), project(nu.im)};
    out.mu = NuParameter{sub(nu.re, out.varsigma.re), sub(nu.im, out.varsigma.im)};
    return out;
}

// --- intertwining determinants ---------------------------------------------

namespace {

// Gamma quotients whose product reduces to q_(-nu)(m)/q_nu(m):
//   4 | m-1 : prod_{l,j<l} G(nu-2j+1/2)/G(nu-2j-3/2) * G(nu+2j+1/2)/G(nu+2j+5/2)
//   4 | m-3 : the same to (m-3)/4, times the degree-one correction
//             G(-nu+2k+3/2)/G(-nu+2k+1/2) * G(nu+2k+1/2)/G(nu+2k+3/2)
// per k <= (m-3)/4. (The arguments of every quotient differ by an integer,
// so the recurrence Gamma(x+1) = x Gamma(x) reduces the product exactly.)
void append_gamma_quotients(std::vector<GammaQuotient>& out, int root_index, long m) {
    long bound = (m % 4 == 1) ? (m - 1) / 4 : (m - 3) / 4;
    for (long l = 0; l <= bound; ++l) {
        for (long j = 0; j < l; ++j) {
            out.push_back({root_index, AffineArg{+1, Rat(-4 * j + 1, 2)},
                           AffineArg{+1, Rat(-4 * j - 3, 2)}});
            out.push_back({root_index, AffineArg{+1, Rat(4 * j + 1, 2)},
                           AffineArg{+1, Rat(4 * j + 5, 2)}});
        }
    }
    if (m % 4 == 3) {
        for (long k = 0; k <= bound; ++k) {
            out.push_back({root_index, AffineArg{-1, Rat(4 * k + 3, 2)},
                           AffineArg{-1, Rat(4 * k + 1, 2)}});
            out.push_back({root_index, AffineArg{+1, Rat(4 * k + 1, 2)},
                           AffineArg{+1, Rat(4 * k + 3, 2)}});
        }
    }
}

void emit_canonical(std::map<LinearForm, long>& side, int& flips, int root_index, int slope,
                    const Rat& constant) {
    if (slope == 1) {
        side[LinearForm{root_index, constant}] += 1;
    } else {
        // (-x + c) = -(x - c)
        side[LinearForm{root_index, Rat(-constant)}] += 1;
        flips ^= 1;
    }
}

void cancel_common(ReducedRatio& r) {
    for (auto it = r.numerator.begin(); it != r.numerator.end();) {
        auto jt = r.denominator.find(it->first);
        if (jt != r.denominator.end()) {
            long c = std::min(it->second, jt->second);
            it->second -= c;
            jt->second -= c;
            if (jt->second == 0) r.denominator.erase(jt);
        }
        it = (it->second == 0) ? r.numerator.erase(it) : std::next(it);
    }
}

}  // namespace

GammaRatioProduct intertwining_det(int n, const Vec& xi_weight) {
    if (n < 3) throw std::invalid_argument("intertwining_det requires n >= 3");
    auto xi = rep::Irrep::spin(n, xi_weight);
    auto js = rep::branch_to_spin3(xi);  // rejects non-genuine weights

    GammaRatioProduct g;
    g.n = n;
    auto rs = RootSystem::build(roots::LieType(Series::A, n - 1));
    g.roots = rs.positive_roots();
    long dim_xi = rep::weyl_dim(xi);
    g.exponent = rat(2 * dim_xi, pxi::small_type_dim(n));
    if (!is_integer(g.exponent))
        throw std::logic_error("intertwining exponent 2 dim(xi)/dim(tau) is not an integer");
    for (size_t r = 0; r < g.roots.size(); ++r)
        for (long m : js) append_gamma_quotients(g.factors, static_cast<int>(r), m);
    return g;
}

ReducedRatio reduce(const GammaRatioProduct& g) {
    ReducedRatio out;
    int flips = 0;
    for (const auto& q : g.factors) {
        if (q.num.slope != q.den.slope)
            throw std::invalid_argument("cannot reduce a quotient with mismatched slopes");
        Rat diff = q.num.constant - q.den.constant;
        if (!is_integer(diff))
            throw std::invalid_argument("cannot reduce: arguments do not differ by an integer");
        long d = rat_to_long(diff);
        if (d >= 0) {
            for (long i = 0; i < d; ++i)
                emit_canonical(out.numerator, flips, q.root_index, q.num.slope,
                               Rat(q.den.constant + i));
        } else {
            for (long i = 0; i < -d; ++i)
                emit_canonical(out.denominator, flips, q.root_index, q.num.slope,
                               Rat(q.num.constant + i));
        }
    }
    out.sign = flips ? -1 : 1;
    cancel_common(out);
    return out;
}

ReducedRatio pxi_ratio(const pxi::FactoredPolynomial& p, const RootSystem& rs, long power) {
    if (power < 0) throw std::invalid_argument("pxi_ratio: negative power");
    ReducedRatio out;
    long flips = 0;
    for (const auto& f : p.factors()) {
        auto idx = rs.find_positive_root(f.root.coords);
        if (!idx) throw std::invalid_argument("factor root is not a positive root");
        long count = f.mult * power;
        // p(-nu): (-x + shift) = -(x - shift)
        out.numerator[LinearForm{*idx, Rat(-f.shift)}] += count;
        flips += count;
        // p(nu): (x + shift)
        out.denominator[LinearForm{*idx, f.shift}] += count;
    }
    out.sign = (flips % 2 == 0) ? 1 : -1;
    cancel_common(out);
    return out;
}

ReducedRatio pow_ratio(const ReducedRatio& r, long k) {
    if (k < 0) throw std::invalid_argument("pow_ratio: negative power");
    ReducedRatio out;
    for (const auto& [f, m] : r.numerator) out.numerator[f] = m * k;
    for (const auto& [f, m] : r.denominator) out.denominator[f] = m * k;
    out.sign = (r.sign == -1 && k % 2 == 1) ? -1 : 1;
    return out;
}

CRat evaluate_ratio(const ReducedRatio& r, const RootSystem& rs, const std::vector<CRat>& nu) {
    auto pairing_at = [&](int root_index) {
        const auto& phi = rs.positive_roots().at(root_index);
        CRat z;
        for (size_t i = 0; i < nu.size(); ++i)
            z = z + nu[i] * CRat(Rat(2 * phi.coords[i] / phi.norm2));
        return z;
    };
    CRat num{Rat(r.sign), Rat(0)}, den{Rat(1), Rat(0)};
    for (const auto& [f, m] : r.numerator) {
        CRat v = pairing_at(f.root_index) + CRat(f.constant);
        for (long i = 0; i < m; ++i) num = num * v;
    }
    for (const auto& [f, m] : r.denominator) {
        CRat v = pairing_at(f.root_index) + CRat(f.constant);
        for (long i = 0; i < m; ++i) den = den * v;
    }
    return num / den;
}

// --- numeric evaluation -----------------------------------------------------

namespace {

using CLd = std::complex<long double>;

// Lanczos with Godfrey's g = 607/128, 15-term coefficient set, evaluated in
// long double. Branch offsets of the complex logarithm cancel once the
// accumulated sum is exponentiated.
CLd log_gamma_ld(CLd z) {
    static const long double coef[15] = {0.99999999999999709182L,
                                         57.156235665862923517L,
                                         -59.597960355475491248L,
                                         14.136097974741747174L,
                                         -0.49191381609762019978L,
                                         0.33994649984811888699e-4L,
                                         0.46523628927048575665e-4L,
                                         -0.98374475304879564677e-4L,
                                         0.15808870322491248884e-3L,
                                         -0.21026444172410488319e-3L,
                                         0.21743961811521264320e-3L,
                                         -0.16431810653676389022e-3L,
                                         0.84418223983852743293e-4L,
                                         -0.26190838401581408670e-4L,
                                         0.36899182659531622704e-5L};
    const long double pi = 3.141592653589793238462643383279502884L;
    const long double g = 607.0L / 128.0L;
    if (z.real() < 0.5L) {
        return std::log(pi / std::sin(pi * z)) - log_gamma_ld(1.0L - z);
    }
    CLd x = coef[0];
    for (int i = 1; i < 15; ++i) x += coef[i] / (z - 1.0L + static_cast<long double>(i));
    CLd t = z + (g - 0.5L);
    return 0.5L * std::log(2.0L * pi) + (z - 0.5L) * std::log(t) - t + std::log(x);
}

}  // namespace

std::complex<double> log_gamma(std::complex<double> z) {
    CLd v = log_gamma_ld(CLd(z.real(), z.imag()));
    return {static_cast<double>(v.real()), static_cast<double>(v.imag())};
}

namespace {

std::complex<double> pairing_numeric(const roots::Root& phi,
                                     const std::vector<std::complex<double>>& nu) {
    std::complex<double> z = 0;
    double n2 = phi.norm2.get_d();
    for (size_t i = 0; i < nu.size(); ++i) z += nu[i] * (2 * phi.coords[i].get_d() / n2);
    return z;
}

void check_pole(const std::complex<double>& arg, const char* where) {
    double nearest = std::round(arg.real());
    if (nearest <= 0 && std::abs(arg - nearest) < 1e-8)
        throw DomainError(std::string("gamma ") + where + " argument within 1e-8 of a "
                          "nonpositive integer pole; refusing to evaluate");
}

}  // namespace

std::complex<double> numeric_gamma_eval(const GammaRatioProduct& g,
                                        const std::vector<std::complex<double>>& nu) {
    CLd log_sum = 0;
    for (const auto& q : g.factors) {
        std::complex<double> x = pairing_numeric(g.roots.at(q.root_index), nu);
        std::complex<double> a = static_cast<double>(q.num.slope) * x + q.num.constant.get_d();
        std::complex<double> b = static_cast<double>(q.den.slope) * x + q.den.constant.get_d();
        check_pole(a, "numerator");
        check_pole(b, "denominator");
        log_sum += log_gamma_ld(CLd(a.real(), a.imag())) - log_gamma_ld(CLd(b.real(), b.imag()));
    }
    CLd value = std::exp(static_cast<long double>(g.exponent.get_d()) * log_sum);
    return {static_cast<double>(value.real()), static_cast<double>(value.imag())};
}

std::complex<double> numeric_reduced_eval(const ReducedRatio& r, const GammaRatioProduct& g,
                                          const std::vector<std::complex<double>>& nu) {
    std::complex<double> value = static_cast<double>(r.sign);
    for (const auto& [f, m] : r.numerator) {
        std::complex<double> v = pairing_numeric(g.roots.at(f.root_index), nu) + f.constant.get_d();
        for (long i = 0; i < m; ++i) value *= v;
    }
    for (const auto& [f, m] : r.denominator) {
        std::complex<double> v = pairing_numeric(g.roots.at(f.root_index), nu) + f.constant.get_d();
        for (long i = 0; i < m; ++i) value /= v;
    }
    return std::pow(value, g.exponent.get_d());
}

}  // namespace genps::analysis
