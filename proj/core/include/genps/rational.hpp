#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace genps {

/// Exact rational scalar. All root-system and polynomial arithmetic in this
/// library is carried out over Rat; no floating point enters except in the
/// numeric gamma evaluator.
using Rat = mpq_class;

/// Error for inputs outside the mathematical domain of an operation
/// (e.g. type C_n in the small-K pipeline, a non-genuine weight where a
/// genuine one is required). The CLI maps this to exit code 1.
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
    Rat q(num, den);
    q.canonicalize();
    return q;
}

/// Parses "p", "-p", "p/q". Throws std::invalid_argument on malformed input.
Rat parse_rat(const std::string& s);

/// Canonical "p" or "p/q" form (as emitted in JSON).
std::string rat_str(const Rat& q);

bool is_integer(const Rat& q);

/// Exact conversion to long; throws if not an integer or out of range.
long rat_to_long(const Rat& q);

/// Gaussian rational a + bi. Enough arithmetic for the Q8 oracle matrices
/// and for evaluating factored polynomials at complex rational points.
struct CRat {
    Rat re;
    Rat im;

    CRat() : re(0), im(0) {}
    CRat(Rat r) : re(std::move(r)), im(0) {}  // NOLINT(google-explicit-constructor)
    CRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}

    bool is_zero() const { return re == 0 && im == 0; }
    CRat conj() const { return {re, Rat(-im)}; }
    /// |z|^2 as a rational.
    Rat norm2() const { return Rat(re * re + im * im); }

    friend CRat operator+(const CRat& a, const CRat& b) {
        return {Rat(a.re + b.re), Rat(a.im + b.im)};
    }
    friend CRat operator-(const CRat& a, const CRat& b) {
        return {Rat(a.re - b.re), Rat(a.im - b.im)};
    }
    friend CRat operator-(const CRat& a) { return {Rat(-a.re), Rat(-a.im)}; }
    friend CRat operator*(const CRat& a, const CRat& b) {
        return {Rat(a.re * b.re - a.im * b.im), Rat(a.re * b.im + a.im * b.re)};
    }
    friend CRat operator/(const CRat& a, const CRat& b);
    friend bool operator==(const CRat& a, const CRat& b) {
        return a.re == b.re && a.im == b.im;
    }
    friend bool operator!=(const CRat& a, const CRat& b) { return !(a == b); }
};

std::string crat_str(const CRat& z);

/// Dense rational coordinate vector (epsilon-basis coordinates throughout).
using Vec = std::vector<Rat>;

Rat dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& c, const Vec& a);
bool is_zero(const Vec& a);

/// Lexicographic order usable as a std::map/std::set comparator.
struct VecLess {
    bool operator()(const Vec& a, const Vec& b) const;
};

std::string vec_str(const Vec& v);

/// Parses "a,b,c" with rational entries.
Vec parse_vec(const std::string& s);

}  // namespace genps
