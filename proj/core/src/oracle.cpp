#include "genps/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <sstream>

#include "genps/rep_theory.hpp"

namespace genps::oracle {

namespace {

CRat cr(long re, long im = 0) { return CRat(Rat(re), Rat(im)); }

Mat2 neg(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

}  // namespace

const std::array<Mat2, 8>& zero_m_elements() {
    static const std::array<Mat2, 8> elems = [] {
        Mat2 id{cr(1), cr(0), cr(0), cr(1)};
        Mat2 diag{cr(0, 1), cr(0), cr(0), cr(0, -1)};
        Mat2 rot{cr(0), cr(1), cr(-1), cr(0)};
        Mat2 swap{cr(0), cr(0, 1), cr(0, 1), cr(0)};
        return std::array<Mat2, 8>{id,  diag,      rot,      swap,
                                   neg(id), neg(diag), neg(rot), neg(swap)};
    }();
    return elems;
}

bool zero_m_is_quaternion_group() {
    const auto& g = zero_m_elements();
    // closure
    for (const auto& x : g) {
        if (x.det() != cr(1)) return false;
        for (const auto& y : g) {
            Mat2 p = x * y;
            if (std::none_of(g.begin(), g.end(), [&](const Mat2& z) { return z == p; }))
                return false;
        }
    }
    // exactly one element of order two (-Id), the Q8 signature among order-8 groups
    int order_two = 0;
    Mat2 id = g[0];
    for (const auto& x : g) {
        if (x == id) continue;
        if (x * x == id) ++order_two;
    }
    return order_two == 1;
}

std::vector<int> zero_m_ad_signs_on_t() {
    Mat2 t{CRat(Rat(0), Rat(1, 2)), cr(0), cr(0), CRat(Rat(0), Rat(-1, 2))};
    std::vector<int> signs;
    for (const auto& g : zero_m_elements()) {
        Mat2 conj = g * t * g.inv_unimodular();
        if (conj == t) {
            signs.push_back(+1);
        } else if (conj == neg(t)) {
            signs.push_back(-1);
        } else {
            throw std::logic_error("Ad(0M) does not act by +-1 on t");
        }
    }
    return signs;
}

Su2Model::Su2Model(int p) : p_(p) {
    if (p < 0) throw std::invalid_argument("Su2Model: negative symmetric power");
}

std::vector<std::vector<CRat>> Su2Model::action(const Mat2& g) const {
    const int n = dim();
    Mat2 h = g.inv_unimodular();  // f(g^{-1} v)
    std::vector<std::vector<CRat>> m(n, std::vector<CRat>(n, cr(0)));
    for (int a = 0; a <= p_; ++a) {
        // (h.a x + h.b y)^a (h.c x + h.d y)^(p-a), expanded by convolution
        std::vector<CRat> first{cr(1)};
        for (int i = 0; i < a; ++i) {
            std::vector<CRat> next(first.size() + 1, cr(0));
            for (size_t s = 0; s < first.size(); ++s) {
                next[s + 1] = next[s + 1] + first[s] * h.a;  // extra x
                next[s] = next[s] + first[s] * h.b;          // extra y
            }
            first = std::move(next);
        }
        std::vector<CRat> second{cr(1)};
        for (int i = 0; i < p_ - a; ++i) {
            std::vector<CRat> next(second.size() + 1, cr(0));
            for (size_t s = 0; s < second.size(); ++s) {
                next[s + 1] = next[s + 1] + second[s] * h.c;
                next[s] = next[s] + second[s] * h.d;
            }
            second = std::move(next);
        }
        for (size_t i = 0; i < first.size(); ++i)
            for (size_t j = 0; j < second.size(); ++j) {
                int s = static_cast<int>(i + j);  // x-degree of the product term
                m[s][a] = m[s][a] + first[i] * second[j];
            }
    }
    return m;
}

namespace {

// Exact row reduction; returns a row-echelon basis of the row space.
std::vector<std::vector<CRat>> row_space_basis(std::vector<std::vector<CRat>> rows) {
    size_t rank = 0;
    size_t cols = rows.empty() ? 0 : rows[0].size();
    for (size_t col = 0; col < cols && rank < rows.size(); ++col) {
        size_t piv = rank;
        while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[rank], rows[piv]);
        CRat inv = CRat(Rat(1)) / rows[rank][col];
        for (auto& x : rows[rank]) x = x * inv;
        for (size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][col].is_zero()) continue;
            CRat f = rows[r][col];
            for (size_t c = 0; c < cols; ++c) rows[r][c] = rows[r][c] - f * rows[rank][c];
        }
        ++rank;
    }
    rows.resize(rank);
    return rows;
}

}  // namespace

std::vector<std::vector<CRat>> invariant_basis(int p) {
    Su2Model model(p);
    const int n = model.dim();
    std::vector<std::vector<CRat>> avg(n, std::vector<CRat>(n));
    for (const auto& g : zero_m_elements()) {
        auto m = model.action(g);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) avg[i][j] = avg[i][j] + m[i][j];
    }
    CRat eighth{Rat(1, 8), Rat(0)};
    for (auto& row : avg)
        for (auto& x : row) x = x * eighth;
    // columns of the averaging projector span the fixed space
    std::vector<std::vector<CRat>> cols(n, std::vector<CRat>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cols[j][i] = avg[i][j];
    return row_space_basis(std::move(cols));
}

InvariantsReport invariants_dim(int p) {
    if (p < 0 || p % 2 != 0)
        throw std::invalid_argument("invariants_dim expects an even symmetric power");
    static std::mutex memo_mutex;
    static std::map<int, InvariantsReport> memo;
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        if (auto it = memo.find(p); it != memo.end()) return it->second;
    }
    Su2Model model(p);
    InvariantsReport rep;

    auto basis = invariant_basis(p);
    rep.l = static_cast<long>(basis.size());

    // independent count by character averaging
    CRat chi_sum;
    for (const auto& g : zero_m_elements()) {
        auto m = model.action(g);
        for (int i = 0; i < model.dim(); ++i) chi_sum = chi_sum + m[i][i];
    }
    if (chi_sum.im != 0) throw std::logic_error("character sum has an imaginary part");
    Rat avg = chi_sum.re / 8;
    rep.l_character = rat_to_long(avg);
    if (rep.l != rep.l_character)
        throw std::logic_error("fixed-space dimension disagrees with the character count");

    // supports of the span give the dominant weights, one per constituent
    std::set<int> support;
    for (const auto& v : basis)
        for (int a = 0; a <= p; ++a)
            if (!v[a].is_zero()) support.insert(a);
    for (int a : support) {
        if (2 * a < p) continue;
        if (!support.count(p - a)) throw std::logic_error("invariant support not symmetric");
        rep.dominant_weights.push_back(model.weight(a));
    }
    std::sort(rep.dominant_weights.begin(), rep.dominant_weights.end(),
              [](const Rat& x, const Rat& y) { return x < y; });
    if (static_cast<long>(rep.dominant_weights.size()) != rep.l)
        throw std::logic_error("constituent count disagrees with the invariant dimension");
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(p, rep);
    }
    return rep;
}

std::vector<Rat> genuine_weight_list(int p) {
    if (p < 1 || p % 2 != 1)
        throw std::invalid_argument("genuine_weight_list expects an odd symmetric power");
    Su2Model model(p);

    // every group element must act within the weight pairs {a, p-a}
    std::vector<std::vector<std::vector<CRat>>> actions;
    for (const auto& g : zero_m_elements()) actions.push_back(model.action(g));
    for (const auto& m : actions) {
        for (int a = 0; a <= p; ++a)
            for (int s = 0; s <= p; ++s)
                if (!m[s][a].is_zero() && s != a && s != p - a)
                    throw std::logic_error("group action does not preserve the weight pairs");
    }

    std::vector<Rat> weights;
    for (int a = p / 2 + 1; a <= p; ++a) {
        // character of the 2-dim constituent span{x^a y^(p-a), x^(p-a) y^a}
        // must match the defining representation of the group (its unique
        // genuine 2-dim irreducible)
        for (size_t gi = 0; gi < actions.size(); ++gi) {
            CRat chi = actions[gi][a][a] + actions[gi][p - a][p - a];
            CRat expect = zero_m_elements()[gi].trace();
            if (chi != expect)
                throw std::logic_error("constituent is not the genuine 2-dim type");
        }
        weights.push_back(model.weight(a));
    }
    std::sort(weights.begin(), weights.end(), [](const Rat& x, const Rat& y) { return x < y; });
    return weights;
}

std::vector<int> gamma_candidates(int p) {
    std::vector<int> out;
    for (int q : {p - 1, p + 1}) {
        if (q < 0) continue;
        // containment V_(p/2) < V_(q/2) (x) V_(1/2), certified by Klimyk
        auto bl = rep::tensor_decompose(rep::Irrep::spin(3, Vec{rat(q, 2)}),
                                        rep::Irrep::spin(3, Vec{Rat(1, 2)}));
        bool contains = false;
        for (const auto& [c, m] : bl.constituents)
            contains |= (c.highest_weight == Vec{rat(p, 2)});
        if (!contains) continue;
        if (invariants_dim(q).l >= 1) out.push_back(q);
    }
    return out;
}

ComparisonReport verify_weight_comparison(int p_max) {
    if (p_max < 3) throw std::invalid_argument("verify_weight_comparison expects p_max >= 3");
    ComparisonReport report;
    report.pass = true;
    for (int p = 1; p <= p_max; p += 2) {
        ComparisonEntry e;
        e.p = p;
        e.xi_weights = genuine_weight_list(p);
        for (int q : gamma_candidates(p)) {
            auto inv = invariants_dim(q);
            e.gamma_weights.insert(e.gamma_weights.end(), inv.dominant_weights.begin(),
                                   inv.dominant_weights.end());
        }
        std::sort(e.gamma_weights.begin(), e.gamma_weights.end(),
                  [](const Rat& x, const Rat& y) { return x < y; });

        // greedy matching on the sorted multisets: prefer delta - 1/2
        std::multiset<Rat> pool(e.gamma_weights.begin(), e.gamma_weights.end());
        bool ok = true;
        for (const auto& x : e.xi_weights) {
            Rat down = x - Rat(1, 2), up = x + Rat(1, 2);
            if (auto it = pool.find(down); it != pool.end()) {
                pool.erase(it);
                e.signs.push_back(-1);
            } else if (auto it2 = pool.find(up); it2 != pool.end()) {
                pool.erase(it2);
                e.signs.push_back(+1);
            } else {
                ok = false;
                break;
            }
        }
        e.matched = ok && pool.empty();
        if (!e.matched) {
            std::ostringstream os;
            os << "unmatched at p=" << p << "; leftover gamma weights:";
            for (const auto& r : pool) os << " " << rat_str(r);
            e.detail = os.str();
            report.pass = false;
        }
        report.entries.push_back(std::move(e));
    }
    return report;
}

MultiplicityReport verify_multiplicity_identity(int p_max) {
    if (p_max < 3) throw std::invalid_argument("verify_multiplicity_identity expects p_max >= 3");
    MultiplicityReport report;
    report.pass = true;
    for (int p = 1; p <= p_max; p += 2) {
        MultiplicityEntry e;
        e.p = p;
        e.n_xi = static_cast<long>(genuine_weight_list(p).size());
        for (int q : gamma_candidates(p)) {
            e.gamma_degrees.push_back(q);
            e.sum_l += invariants_dim(q).l;
        }
        // rank-one dimension identity: n(xi) = dim(xi)/dim(tau) = (p+1)/2
        e.matched = (e.n_xi == e.sum_l) && (e.n_xi == (p + 1) / 2);
        report.pass &= e.matched;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace genps::oracle
