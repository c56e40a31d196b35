#include "genps/rank_one.hpp"

#include <algorithm>
#include <sstream>

namespace genps::rankone {

void BivariatePoly::trim() {
    for (auto& row : c_) {
        while (!row.empty() && row.back() == 0) row.pop_back();
    }
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BivariatePoly BivariatePoly::constant(Rat c) {
    BivariatePoly p;
    p.c_ = {{std::move(c)}};
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::linear(Rat a, Rat b, Rat c) {
    BivariatePoly p;
    p.c_ = {{std::move(c), std::move(b)}, {std::move(a)}};
    p.trim();
    return p;
}

BivariatePoly BivariatePoly::operator*(const BivariatePoly& o) const {
    if (c_.empty() || o.c_.empty()) return {};
    BivariatePoly out;
    size_t max_t = 0, max_ot = 0;
    for (const auto& row : c_) max_t = std::max(max_t, row.size());
    for (const auto& row : o.c_) max_ot = std::max(max_ot, row.size());
    out.c_.assign(c_.size() + o.c_.size() - 1,
                  std::vector<Rat>(max_t + max_ot - 1, Rat(0)));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t it = 0; it < c_[i].size(); ++it) {
            if (c_[i][it] == 0) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                for (size_t jt = 0; jt < o.c_[j].size(); ++jt)
                    out.c_[i + j][it + jt] += c_[i][it] * o.c_[j][jt];
        }
    out.trim();
    return out;
}

BivariatePoly BivariatePoly::operator+(const BivariatePoly& o) const {
    BivariatePoly out = *this;
    if (out.c_.size() < o.c_.size()) out.c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) {
        if (out.c_[i].size() < o.c_[i].size()) out.c_[i].resize(o.c_[i].size(), Rat(0));
        for (size_t t = 0; t < o.c_[i].size(); ++t) out.c_[i][t] += o.c_[i][t];
    }
    out.trim();
    return out;
}

void BivariatePoly::mul_linear(int t_sign, const Rat& c0) {
    if (c_.empty()) return;  // zero polynomial
    const size_t old_rows = c_.size();
    c_.resize(old_rows + 1);
    // R[i][t] = c0*S[i][t] + t_sign*S[i][t-1] + S[i-1][t]; rows processed
    // top-down and columns right-to-left so every read sees the old values.
    for (size_t i = old_rows + 1; i-- > 0;) {
        auto& row = c_[i];
        const std::vector<Rat>* below = (i > 0) ? &c_[i - 1] : nullptr;
        size_t cols = row.size() + 1;
        if (below) cols = std::max(cols, below->size());
        row.resize(cols, Rat(0));
        for (size_t t = cols; t-- > 0;) {
            Rat v = c0 * row[t];
            if (t > 0) {
                if (t_sign > 0)
                    v += row[t - 1];
                else
                    v -= row[t - 1];
            }
            if (below && t < below->size()) v += (*below)[t];
            row[t] = std::move(v);
        }
    }
    trim();
}

std::map<std::pair<int, int>, Rat> BivariatePoly::coeffs() const {
    std::map<std::pair<int, int>, Rat> out;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t t = 0; t < c_[i].size(); ++t)
            if (c_[i][t] != 0) out[{static_cast<int>(i), static_cast<int>(t)}] = c_[i][t];
    return out;
}

int BivariatePoly::total_degree() const {
    int d = 0;
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t t = 0; t < c_[i].size(); ++t)
            if (c_[i][t] != 0) d = std::max(d, static_cast<int>(i + t));
    return d;
}

std::string BivariatePoly::str() const {
    auto m = coeffs();
    if (m.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : m) {
        if (!first) os << " + ";
        first = false;
        os << rat_str(c);
        if (k.first) os << "*h^" << k.first;
        if (k.second) os << "*t^" << k.second;
    }
    return os.str();
}

std::map<int, Rat> BivariatePoly::substitute(const Rat& h_shift, const Rat& t_value) const {
    std::map<int, Rat> out;
    for (const auto& [k, c] : coeffs()) {
        // t^dt -> t_value^dt; h^dh -> (nu + h_shift)^dh by binomial expansion
        Rat tpow(1);
        for (int i = 0; i < k.second; ++i) tpow *= t_value;
        Rat coef = c * tpow;
        Rat binom(1);
        Rat spow(1);
        for (int i = k.first; i >= 0; --i) {
            // coefficient of nu^i: C(dh, i) * h_shift^(dh-i)
            out[i] += coef * binom * spow;
            if (i > 0) {
                binom = binom * i / (k.first - i + 1);
                spow *= h_shift;
            }
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

BivariatePoly q_closed_form(long l, TSign sign) {
    if (l < 0) throw std::invalid_argument("q_closed_form: negative degree");
    int t_sign = sign == TSign::PlusT ? 1 : -1;
    BivariatePoly p = BivariatePoly::constant(Rat(1));
    for (long j = 0; j < l; ++j) p.mul_linear(t_sign, Rat(2 * j));
    return p;
}

BivariatePoly q_recursive(long l, TSign sign) {
    if (l < 0) throw std::invalid_argument("q_recursive: negative degree");
    if (l == 0) return BivariatePoly::constant(Rat(1));
    BivariatePoly p = q_recursive(l - 1, sign);
    p.mul_linear(sign == TSign::PlusT ? 1 : -1, Rat(2 * (l - 1)));
    return p;
}

CRat LinearFactors::evaluate(const CRat& nu) const {
    CRat v{scalar, Rat(0)};
    for (const auto& s : shifts) v = v * (nu + CRat(s));
    return v;
}

std::map<int, Rat> LinearFactors::expand() const {
    std::map<int, Rat> out{{0, scalar}};
    for (const auto& s : shifts) {
        std::map<int, Rat> next;
        for (const auto& [d, c] : out) {
            next[d + 1] += c;
            next[d] += c * s;
        }
        out = std::move(next);
    }
    for (auto it = out.begin(); it != out.end();)
        it = (it->second == 0) ? out.erase(it) : std::next(it);
    return out;
}

void LinearFactors::sort() {
    std::sort(shifts.begin(), shifts.end(), [](const Rat& a, const Rat& b) { return a < b; });
}

LinearFactors RankOneFactor::factors() const {
    return p_factor(degree_l, r, sign == TSign::PlusT ? RBranch::PlusR : RBranch::MinusR);
}

LinearFactors p_factor(long l, const Rat& r, RBranch branch) {
    if (l < 0) throw std::invalid_argument("p_factor: negative degree");
    if (r < 0) throw std::invalid_argument("p_factor: r must be nonnegative");
    LinearFactors out;
    for (long j = 0; j < l; ++j) {
        Rat shift(2 * j + 1);
        if (branch == RBranch::PlusR) shift += r;
        if (branch == RBranch::MinusR) shift -= r;
        out.shifts.push_back(std::move(shift));
    }
    out.sort();
    return out;
}

LinearFactors translate_factor(const LinearFactors& p, const roots::Root& phi,
                               const roots::RootSystem& rs, RhoShiftMode mode) {
    if (mode == RhoShiftMode::Shifted) return p;
    // rho_phi = phi/2 for the split rank-one subalgebra, so the offset is
    // <rho_phi - rho, phi^vee> = 1 - <rho, phi^vee>.
    Rat offset = 1 - rs.pairing(rs.rho(), phi);
    LinearFactors out;
    out.scalar = p.scalar;
    for (const auto& s : p.shifts) out.shifts.push_back(Rat(s + offset));
    out.sort();
    return out;
}

}  // namespace genps::rankone
