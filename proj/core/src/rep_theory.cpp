#include "genps/rep_theory.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace genps::rep {

using roots::RootSystem;
using roots::Series;

std::string group_name(GroupKind g, int n) {
    switch (g) {
        case GroupKind::Spin: return "Spin(" + std::to_string(n) + ")";
        case GroupKind::Pin: return "Pin(" + std::to_string(n) + ")";
        case GroupKind::SU: return "SU(" + std::to_string(n) + ")";
        case GroupKind::Sp: return "Sp(" + std::to_string(n) + ")";
    }
    return "?";
}

Irrep Irrep::spin(int n, Vec hw) { return Irrep{GroupKind::Spin, n, std::move(hw), {}}; }
Irrep Irrep::pin(int n, Vec hw, std::optional<int> eps) {
    return Irrep{GroupKind::Pin, n, std::move(hw), eps};
}
Irrep Irrep::su(int n, Vec hw) { return Irrep{GroupKind::SU, n, std::move(hw), {}}; }
Irrep Irrep::sp(int n, Vec hw) { return Irrep{GroupKind::Sp, n, std::move(hw), {}}; }

bool Irrep::genuine() const {
    for (const auto& c : highest_weight) {
        Rat doubled = 2 * c;
        if (!is_integer(doubled) || rat_to_long(doubled) % 2 == 0) return false;
    }
    return !highest_weight.empty();
}

std::string Irrep::str() const {
    std::ostringstream os;
    os << group_name(group, n) << "[" << vec_str(highest_weight) << "]";
    if (pin_epsilon) os << (*pin_epsilon > 0 ? "+" : "-");
    return os.str();
}

bool operator<(const Irrep& a, const Irrep& b) {
    if (a.group != b.group) return a.group < b.group;
    if (a.n != b.n) return a.n < b.n;
    if (a.highest_weight != b.highest_weight)
        return VecLess{}(a.highest_weight, b.highest_weight);
    return a.pin_epsilon < b.pin_epsilon;
}

long BranchingList::total_dim() const {
    long d = 0;
    for (const auto& [ir, m] : constituents) d += m * weyl_dim(ir);
    return d;
}

RootSystem group_root_system(GroupKind g, int n) {
    switch (g) {
        case GroupKind::Spin:
        case GroupKind::Pin:
            if (n < 3) throw std::invalid_argument("Spin/Pin rank requires n >= 3");
            if (n % 2 == 1) return RootSystem::build_classical(Series::B, n / 2);
            return RootSystem::build_classical(Series::D, n / 2);
        case GroupKind::SU:
            if (n < 2) throw std::invalid_argument("SU(n) requires n >= 2");
            return RootSystem::build_classical(Series::A, n - 1);
        case GroupKind::Sp:
            if (n < 2) throw std::invalid_argument("Sp(n) requires n >= 2");
            return RootSystem::build_classical(Series::C, n);
    }
    throw std::logic_error("unreachable");
}

void validate(const Irrep& irrep) {
    auto rs = group_root_system(irrep.group, irrep.n);
    if (static_cast<int>(irrep.highest_weight.size()) != rs.ambient_dim())
        throw std::invalid_argument(irrep.str() + ": highest weight must have " +
                                    std::to_string(rs.ambient_dim()) + " coordinates");
    for (const auto& alpha : rs.simple_roots()) {
        Rat p = rs.pairing(irrep.highest_weight, alpha);
        if (!is_integer(p) || p < 0)
            throw std::invalid_argument(irrep.str() + ": highest weight is not dominant integral");
    }
    if (irrep.group == GroupKind::Spin || irrep.group == GroupKind::Pin) {
        // all coordinates simultaneously integers or half-odd-integers
        bool any_half = false, any_int = false;
        for (const auto& c : irrep.highest_weight) {
            Rat d = 2 * c;
            if (!is_integer(d))
                throw std::invalid_argument(irrep.str() + ": spinor coordinates must lie in Z/2");
            (rat_to_long(d) % 2 != 0 ? any_half : any_int) = true;
        }
        if (any_half && any_int)
            throw std::invalid_argument(irrep.str() + ": mixed integrality class");
    }
    if (irrep.group == GroupKind::Pin) {
        int k = irrep.n / 2;
        if (irrep.n % 2 == 1) {
            if (!irrep.pin_epsilon)
                throw std::invalid_argument(irrep.str() + ": Pin(2k+1) irreps carry a sign");
        } else {
            const Rat& mk = irrep.highest_weight[k - 1];
            if (mk < 0)
                throw std::invalid_argument(irrep.str() + ": Pin(2k) weights use m_k >= 0");
            if (mk != 0 && irrep.pin_epsilon)
                throw std::invalid_argument(irrep.str() +
                                            ": Pin(2k) irreps with m_k != 0 carry no sign");
            if (mk == 0 && !irrep.pin_epsilon)
                throw std::invalid_argument(irrep.str() +
                                            ": Pin(2k) irreps with m_k = 0 carry a sign");
        }
        if (irrep.pin_epsilon && *irrep.pin_epsilon != 1 && *irrep.pin_epsilon != -1)
            throw std::invalid_argument("pin sign must be +1 or -1");
    }
}

long weyl_dim(const Irrep& irrep) {
    validate(irrep);
    auto rs = group_root_system(irrep.group, irrep.n);
    Vec lr = add(irrep.highest_weight, rs.rho());
    Rat d(1);
    for (const auto& alpha : rs.positive_roots())
        d *= dot(lr, alpha.coords) / dot(rs.rho(), alpha.coords);
    long dim = rat_to_long(d);
    // Pin(2k) modules with m_k != 0 are induced from Spin(2k), doubling.
    if (irrep.group == GroupKind::Pin && irrep.n % 2 == 0 &&
        irrep.highest_weight[irrep.n / 2 - 1] != 0)
        dim *= 2;
    return dim;
}

long weyl_dim(const ProductIrrep& irrep) { return weyl_dim(irrep.first) * weyl_dim(irrep.second); }

long spin_dim_closed_form(int n, const Vec& hw) {
    int k = n / 2;
    if (static_cast<int>(hw.size()) != k) throw std::invalid_argument("bad weight length");
    Vec rho(k);
    for (int i = 0; i < k; ++i) rho[i] = (n % 2 == 1) ? Rat(2 * (k - i) - 1, 2) : Rat(k - i - 1);
    Rat d(1);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            Rat xi = hw[i] + rho[i], xj = hw[j] + rho[j];
            d *= (xi * xi - xj * xj) / (rho[i] * rho[i] - rho[j] * rho[j]);
        }
    if (n % 2 == 1)
        for (int i = 0; i < k; ++i) d *= (hw[i] + rho[i]) / rho[i];
    return rat_to_long(d);
}

// ---------------------------------------------------------------------------
// Scaled-integer internals for the Freudenthal and Klimyk recursions.

namespace {

using IVec = std::vector<long>;

struct Scaled {
    long scale = 1;
    std::vector<IVec> pos;     // positive roots
    std::vector<long> pos_ht;  // heights
    std::vector<IVec> simple;
    std::vector<long> simple_norm2;
    IVec rho;
};

long lcm_long(long a, long b) { return a / std::gcd(a, b) * b; }

long common_scale(const RootSystem& rs, const std::vector<Vec>& weights) {
    long s = 1;
    auto absorb = [&s](const Vec& v) {
        for (const auto& c : v) {
            if (!c.get_den().fits_slong_p()) throw std::overflow_error("denominator too large");
            s = lcm_long(s, c.get_den().get_si());
        }
    };
    absorb(rs.rho());
    for (const auto& w : weights) absorb(w);
    return s;
}

IVec scale_vec(const Vec& v, long s) {
    IVec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat_to_long(Rat(v[i] * s));
    return out;
}

Vec unscale_vec(const IVec& v, long s) {
    Vec out(v.size());
    for (size_t i = 0; i < v.size(); ++i) out[i] = rat(v[i], s);
    return out;
}

Scaled make_scaled(const RootSystem& rs, const std::vector<Vec>& weights) {
    Scaled sc;
    sc.scale = common_scale(rs, weights);
    for (const auto& r : rs.positive_roots()) {
        sc.pos.push_back(scale_vec(r.coords, sc.scale));
        sc.pos_ht.push_back(r.height());
    }
    for (const auto& r : rs.simple_roots()) {
        sc.simple.push_back(scale_vec(r.coords, sc.scale));
        const IVec& a = sc.simple.back();
        long n2 = 0;
        for (long x : a) n2 += x * x;
        sc.simple_norm2.push_back(n2);
    }
    sc.rho = scale_vec(rs.rho(), sc.scale);
    return sc;
}

long dotl(const IVec& a, const IVec& b) {
    long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

IVec addl(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

IVec subl(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

bool dominantl(const Scaled& sc, const IVec& v) {
    for (const auto& a : sc.simple)
        if (dotl(v, a) < 0) return false;
    return true;
}

// Reflects v into the dominant chamber; multiplies *sign by the determinant
// of the Weyl element used. Lattice vectors only (integral coroot pairings).
IVec to_dominant(const Scaled& sc, IVec v, int* sign) {
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i < sc.simple.size(); ++i) {
            long d = dotl(v, sc.simple[i]);
            if (d < 0) {
                long c2 = 2 * d;
                if (c2 % sc.simple_norm2[i] != 0)
                    throw std::logic_error("non-integral coroot pairing on lattice vector");
                long c = c2 / sc.simple_norm2[i];
                for (size_t t = 0; t < v.size(); ++t) v[t] -= c * sc.simple[i][t];
                if (sign) *sign = -*sign;
                moved = true;
            }
        }
    }
    return v;
}

bool singular(const Scaled& sc, const IVec& dominant_v) {
    for (const auto& a : sc.simple)
        if (dotl(dominant_v, a) == 0) return true;
    return false;
}

// Multiplicities of the dominant weights of V_lambda (Freudenthal).
std::map<IVec, long> freudenthal_dominant(const Scaled& sc, const IVec& lambda) {
    // The dominant weights of V_lambda are exactly the dominant mu with
    // lambda - mu in the nonnegative root lattice; covers in the dominance
    // order differ by a positive root, so closure under "subtract a positive
    // root, keep dominant" starting from lambda reaches all of them.
    std::map<IVec, long> depth{{lambda, 0}};
    std::queue<IVec> q;
    q.push(lambda);
    while (!q.empty()) {
        IVec mu = q.front();
        q.pop();
        long d = depth[mu];
        for (size_t r = 0; r < sc.pos.size(); ++r) {
            IVec nu = subl(mu, sc.pos[r]);
            if (!dominantl(sc, nu)) continue;
            if (depth.emplace(nu, d + sc.pos_ht[r]).second) q.push(nu);
        }
    }
    std::vector<IVec> order;
    order.reserve(depth.size());
    for (const auto& [v, d] : depth) order.push_back(v);
    std::sort(order.begin(), order.end(), [&](const IVec& a, const IVec& b) {
        if (depth[a] != depth[b]) return depth[a] < depth[b];
        return a < b;
    });

    IVec lr = addl(lambda, sc.rho);
    long lr2 = dotl(lr, lr);
    std::map<IVec, long> mult;
    for (const IVec& nu : order) {
        if (nu == lambda) {
            mult[nu] = 1;
            continue;
        }
        long num = 0;
        for (const auto& alpha : sc.pos) {
            IVec w = addl(nu, alpha);
            while (true) {
                IVec wd = to_dominant(sc, w, nullptr);
                auto it = mult.find(wd);
                if (it == mult.end()) break;  // alpha-strings are contiguous
                num += it->second * dotl(w, alpha);
                w = addl(w, alpha);
            }
        }
        IVec nr = addl(nu, sc.rho);
        long den = lr2 - dotl(nr, nr);
        if (den <= 0) throw std::logic_error("freudenthal: nonpositive denominator");
        if ((2 * num) % den != 0) throw std::logic_error("freudenthal: non-integral multiplicity");
        long m = 2 * num / den;
        if (m > 0) mult[nu] = m;
    }
    return mult;
}

std::set<IVec> orbitl(const Scaled& sc, const IVec& v) {
    std::set<IVec> orbit{v};
    std::vector<IVec> frontier{v};
    while (!frontier.empty()) {
        std::vector<IVec> next;
        for (const auto& x : frontier) {
            for (size_t i = 0; i < sc.simple.size(); ++i) {
                long c2 = 2 * dotl(x, sc.simple[i]);
                if (c2 % sc.simple_norm2[i] != 0)
                    throw std::logic_error("non-integral coroot pairing on lattice vector");
                long c = c2 / sc.simple_norm2[i];
                IVec y = x;
                for (size_t t = 0; t < y.size(); ++t) y[t] -= c * sc.simple[i][t];
                if (orbit.insert(y).second) next.push_back(std::move(y));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

}  // namespace

std::map<Vec, long, VecLess> freudenthal_multiplicities(const Irrep& irrep, long dim_cap) {
    validate(irrep);
    GroupKind g = irrep.group == GroupKind::Pin ? GroupKind::Spin : irrep.group;
    long dim = weyl_dim(Irrep{g, irrep.n, irrep.highest_weight, {}});
    if (dim > dim_cap)
        throw DomainError("dimension " + std::to_string(dim) + " exceeds cap " +
                          std::to_string(dim_cap));
    auto rs = group_root_system(g, irrep.n);
    auto sc = make_scaled(rs, {irrep.highest_weight});
    IVec lambda = scale_vec(irrep.highest_weight, sc.scale);
    auto dom = freudenthal_dominant(sc, lambda);

    std::map<Vec, long, VecLess> out;
    long total = 0;
    for (const auto& [nu, m] : dom) {
        for (const auto& w : orbitl(sc, nu)) {
            out.emplace(unscale_vec(w, sc.scale), m);
            total += m;
        }
    }
    if (total != dim) throw std::logic_error("freudenthal: weight count disagrees with weyl_dim");
    return out;
}

BranchingList tensor_decompose(const Irrep& a, const Irrep& b, long dim_cap) {
    validate(a);
    validate(b);
    if (a.group != b.group || a.n != b.n)
        throw std::invalid_argument("tensor_decompose: group mismatch");
    if (a.group == GroupKind::Pin)
        throw std::invalid_argument("tensor_decompose: restrict Pin modules to Spin first");
    long da = weyl_dim(a), db = weyl_dim(b);
    if (da > dim_cap / db)
        throw DomainError("tensor product dimension exceeds cap");

    const Irrep& small = (db <= da) ? b : a;
    const Irrep& big = (db <= da) ? a : b;
    auto wts = freudenthal_multiplicities(small, dim_cap);

    auto rs = group_root_system(a.group, a.n);
    std::vector<Vec> basis{big.highest_weight};
    for (const auto& [w, m] : wts) basis.push_back(w);
    auto sc = make_scaled(rs, basis);
    IVec lam = scale_vec(big.highest_weight, sc.scale);

    std::map<IVec, long> acc;
    for (const auto& [w, m] : wts) {
        IVec x = addl(addl(lam, scale_vec(w, sc.scale)), sc.rho);
        int sign = 1;
        IVec xd = to_dominant(sc, std::move(x), &sign);
        if (singular(sc, xd)) continue;
        acc[subl(xd, sc.rho)] += sign * m;
    }

    BranchingList out;
    long total = 0;
    for (const auto& [v, m] : acc) {
        if (m == 0) continue;
        if (m < 0) throw std::logic_error("klimyk: negative multiplicity");
        Irrep c{a.group, a.n, unscale_vec(v, sc.scale), {}};
        total += m * weyl_dim(c);
        out.constituents.emplace_back(std::move(c), m);
    }
    std::sort(out.constituents.begin(), out.constituents.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    if (total != da * db) throw std::logic_error("klimyk: dimension not conserved");
    return out;
}

std::vector<long> branch_to_spin3(const Irrep& irrep) {
    if (irrep.group != GroupKind::Spin)
        throw std::invalid_argument("branch_to_spin3 expects a Spin(n) irrep");
    validate(irrep);
    if (irrep.n < 3) throw std::invalid_argument("branch_to_spin3 requires n >= 3");
    if (!irrep.genuine())
        throw DomainError(irrep.str() +
                          ": not genuine (integer weight); Spin(3) spinor chains require "
                          "half-odd-integer coordinates");

    // doubled coordinates; all entries odd
    IVec start(irrep.highest_weight.size());
    for (size_t i = 0; i < start.size(); ++i)
        start[i] = rat_to_long(Rat(2 * irrep.highest_weight[i]));

    std::map<IVec, long> cur{{start, 1}};
    for (int m = irrep.n; m > 3; --m) {
        std::map<IVec, long> next;
        int k = m / 2;
        int tgt_len = (m - 1) / 2;
        for (const auto& [lam, mult] : cur) {
            std::vector<IVec> partial{{}};
            for (int i = 0; i < tgt_len; ++i) {
                long hi, lo;
                if (m % 2 == 1) {
                    // Spin(2k+1) -> Spin(2k): lam_1 >= mu_1 >= ... >= lam_k >= |mu_k|
                    hi = lam[i];
                    lo = (i + 1 < k) ? lam[i + 1] : -lam[k - 1];
                } else {
                    // Spin(2k) -> Spin(2k-1): lam_1 >= mu_1 >= ... >= mu_{k-1} >= |lam_k|
                    hi = lam[i];
                    lo = (i + 1 < k - 1) ? lam[i + 1] : std::abs(lam[k - 1]);
                }
                std::vector<IVec> grown;
                for (const auto& p : partial) {
                    for (long v = lo; v <= hi; v += 2) {
                        IVec q = p;
                        q.push_back(v);
                        grown.push_back(std::move(q));
                    }
                }
                partial = std::move(grown);
            }
            for (auto& mu : partial) next[mu] += mult;
        }
        cur = std::move(next);
    }

    std::vector<long> js;
    for (const auto& [mu, mult] : cur)
        for (long i = 0; i < mult; ++i) js.push_back(mu[0]);
    std::sort(js.begin(), js.end());
    return js;
}

BranchingList pin_restrict(const Irrep& pin_irrep) {
    if (pin_irrep.group != GroupKind::Pin)
        throw std::invalid_argument("pin_restrict expects a Pin(n) irrep");
    if (pin_irrep.n < 3)
        throw DomainError("Pin(n) classification is stated for n = 2k+1 or n = 2k >= 4");
    validate(pin_irrep);
    int n = pin_irrep.n;
    BranchingList out;
    if (n % 2 == 1) {
        out.constituents.emplace_back(Irrep::spin(n, pin_irrep.highest_weight), 1);
        return out;
    }
    int k = n / 2;
    if (pin_irrep.highest_weight[k - 1] != 0) {
        Vec flipped = pin_irrep.highest_weight;
        flipped[k - 1] = -flipped[k - 1];
        out.constituents.emplace_back(Irrep::spin(n, pin_irrep.highest_weight), 1);
        out.constituents.emplace_back(Irrep::spin(n, std::move(flipped)), 1);
    } else {
        out.constituents.emplace_back(Irrep::spin(n, pin_irrep.highest_weight), 1);
    }
    return out;
}

}  // namespace genps::rep
