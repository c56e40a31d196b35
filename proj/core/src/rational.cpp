#include "genps/rational.hpp"

#include <sstream>

namespace genps {

Rat parse_rat(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    Rat q;
    if (q.set_str(s, 10) != 0) {
        throw std::invalid_argument("malformed rational literal: '" + s + "'");
    }
    q.canonicalize();
    return q;
}

std::string rat_str(const Rat& q) { return q.get_str(); }

bool is_integer(const Rat& q) { return q.get_den() == 1; }

long rat_to_long(const Rat& q) {
    if (!is_integer(q)) throw std::invalid_argument("rational " + rat_str(q) + " is not an integer");
    if (!q.get_num().fits_slong_p()) throw std::overflow_error("integer out of long range");
    return q.get_num().get_si();
}

CRat operator/(const CRat& a, const CRat& b) {
    Rat n2 = b.norm2();
    if (n2 == 0) throw std::invalid_argument("division by zero Gaussian rational");
    CRat num = a * b.conj();
    return {Rat(num.re / n2), Rat(num.im / n2)};
}

std::string crat_str(const CRat& z) {
    std::ostringstream os;
    os << rat_str(z.re);
    if (z.im != 0) os << (z.im > 0 ? "+" : "") << rat_str(z.im) << "i";
    return os.str();
}

Rat dot(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Vec add(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("add: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

Vec sub(const Vec& a, const Vec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("sub: dimension mismatch");
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

Vec scale(const Rat& c, const Vec& a) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

bool is_zero(const Vec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

bool VecLess::operator()(const Vec& a, const Vec& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0;
    }
    return false;
}

std::string vec_str(const Vec& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) os << ",";
        os << rat_str(v[i]);
    }
    return os.str();
}

Vec parse_vec(const std::string& s) {
    Vec out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, ',')) out.push_back(parse_rat(cur));
    if (out.empty()) throw std::invalid_argument("empty vector literal");
    return out;
}

}  // namespace genps
