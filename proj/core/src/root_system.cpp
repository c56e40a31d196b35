#include "genps/root_system.hpp"

#include <algorithm>
#include <map>

namespace genps::roots {

std::string series_name(Series s) {
    switch (s) {
        case Series::A: return "A";
        case Series::B: return "B";
        case Series::C: return "C";
        case Series::D: return "D";
        case Series::E: return "E";
        case Series::F: return "F";
        case Series::G: return "G";
    }
    return "?";
}

static void check_rank(Series s, int r) {
    bool ok = false;
    switch (s) {
        case Series::A: ok = r >= 1; break;
        case Series::B: ok = r >= 2; break;
        case Series::C: ok = r >= 2; break;
        case Series::D: ok = r >= 3; break;
        case Series::E: ok = r == 6 || r == 7 || r == 8; break;
        case Series::F: ok = r == 4; break;
        case Series::G: ok = r == 2; break;
    }
    if (!ok) {
        throw std::invalid_argument("invalid rank " + std::to_string(r) + " for series " +
                                    series_name(s));
    }
}

LieType::LieType(Series s, int r) : series(s), rank(r) { check_rank(s, r); }

bool LieType::simply_laced() const {
    return series == Series::A || series == Series::D || series == Series::E;
}

std::string LieType::name() const { return series_name(series) + std::to_string(rank); }

LieType parse_lie_type(const std::string& series, int rank) {
    std::string s = series;
    std::transform(s.begin(), s.end(), s.begin(), ::toupper);
    // Accept both "E6" style and plain "E" + rank.
    if (s.size() == 2 && std::isdigit(static_cast<unsigned char>(s[1]))) {
        int embedded = s[1] - '0';
        if (rank != 0 && rank != embedded)
            throw std::invalid_argument("rank conflicts with series name " + series);
        rank = embedded;
        s = s.substr(0, 1);
    }
    if (s.size() != 1) throw std::invalid_argument("unknown series '" + series + "'");
    Series ser;
    switch (s[0]) {
        case 'A': ser = Series::A; break;
        case 'B': ser = Series::B; break;
        case 'C': ser = Series::C; break;
        case 'D': ser = Series::D; break;
        case 'E': ser = Series::E; break;
        case 'F': ser = Series::F; break;
        case 'G': ser = Series::G; break;
        default: throw std::invalid_argument("unknown series '" + series + "'");
    }
    if (rank == 0 && ser == Series::F) rank = 4;
    if (rank == 0 && ser == Series::G) rank = 2;
    return LieType(ser, rank);
}

Rat coroot_pairing(const Vec& nu, const Root& phi) {
    return Rat(2 * dot(nu, phi.coords) / phi.norm2);
}

Rat RootSystem::pairing(const Weight& nu, const Root& phi) const {
    if (nu.basis == WeightBasis::Epsilon) return coroot_pairing(nu.coords, phi);
    return coroot_pairing(to_epsilon(nu).coords, phi);
}

namespace {

Vec unit(int dim, int i, Rat v = Rat(1)) {
    Vec e(dim, Rat(0));
    e[i] = std::move(v);
    return e;
}

std::vector<Vec> simple_root_coords(Series s, int n, int& ambient) {
    std::vector<Vec> simple;
    switch (s) {
        case Series::A: {
            ambient = n + 1;
            for (int i = 0; i < n; ++i) {
                Vec v(ambient, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                simple.push_back(v);
            }
            break;
        }
        case Series::B: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(ambient, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                simple.push_back(v);
            }
            simple.push_back(unit(ambient, n - 1));
            break;
        }
        case Series::C: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(ambient, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                simple.push_back(v);
            }
            simple.push_back(unit(ambient, n - 1, Rat(2)));
            break;
        }
        case Series::D: {
            ambient = n;
            for (int i = 0; i + 1 < n; ++i) {
                Vec v(ambient, Rat(0));
                v[i] = 1;
                v[i + 1] = -1;
                simple.push_back(v);
            }
            Vec v(ambient, Rat(0));
            v[n - 2] = 1;
            v[n - 1] = 1;
            simple.push_back(v);
            break;
        }
        case Series::E: {
            // Bourbaki numbering inside R^8; E6/E7 take the first 6/7 roots.
            ambient = 8;
            Vec a1(8, Rat(-1, 2));
            a1[0] = Rat(1, 2);
            a1[7] = Rat(1, 2);
            for (int i = 1; i <= 6; ++i) a1[i] = Rat(-1, 2);
            Vec a2(8, Rat(0));
            a2[0] = 1;
            a2[1] = 1;
            simple.push_back(a1);
            simple.push_back(a2);
            for (int i = 0; i + 2 < n; ++i) {
                Vec v(8, Rat(0));
                v[i] = -1;
                v[i + 1] = 1;
                simple.push_back(v);
            }
            break;
        }
        case Series::F: {
            ambient = 4;
            Vec a1(4, Rat(0)), a2(4, Rat(0));
            a1[1] = 1;
            a1[2] = -1;
            a2[2] = 1;
            a2[3] = -1;
            Vec a3 = unit(4, 3);
            Vec a4(4, Rat(-1, 2));
            a4[0] = Rat(1, 2);
            simple = {a1, a2, a3, a4};
            break;
        }
        case Series::G: {
            // Bourbaki realization in the plane x1+x2+x3 = 0 of R^3:
            // alpha1 = e1 - e2 (short), alpha2 = -2 e1 + e2 + e3 (long).
            ambient = 3;
            Vec a1(3, Rat(0)), a2(3, Rat(0));
            a1[0] = 1;
            a1[1] = -1;
            a2[0] = -2;
            a2[1] = 1;
            a2[2] = 1;
            simple = {a1, a2};
            break;
        }
    }
    return simple;
}

}  // namespace

RootSystem RootSystem::build(const LieType& type) {
    return build_classical(type.series, type.rank);
}

RootSystem RootSystem::build_classical(Series series, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    bool degenerate = (series == Series::B && rank == 1) || (series == Series::D && rank == 2);
    if (!degenerate) check_rank(series, rank);

    RootSystem rs;
    rs.series_ = series;
    rs.rank_ = rank;

    std::vector<Vec> simple_coords;
    if (series == Series::B && rank == 1) {
        rs.ambient_ = 1;
        simple_coords = {Vec{Rat(1)}};
    } else if (series == Series::D && rank == 2) {
        rs.ambient_ = 2;
        simple_coords = {Vec{Rat(1), Rat(-1)}, Vec{Rat(1), Rat(1)}};
    } else {
        simple_coords = simple_root_coords(series, rank, rs.ambient_);
    }

    const int n = static_cast<int>(simple_coords.size());

    // Positive roots by closure from the simple roots. phi + alpha_i is a
    // root iff p - <phi, alpha_i^vee> >= 1 where p is the depth of the
    // alpha_i-string below phi.
    std::map<Vec, std::vector<long>, VecLess> known;
    for (int i = 0; i < n; ++i) {
        std::vector<long> c(n, 0);
        c[i] = 1;
        known.emplace(simple_coords[i], c);
    }
    auto norm2_of = [](const Vec& v) { return dot(v, v); };
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<Vec, std::vector<long>>> additions;
        for (const auto& [phi, coeffs] : known) {
            for (int i = 0; i < n; ++i) {
                const Vec& alpha = simple_coords[i];
                Vec cand = add(phi, alpha);
                if (known.count(cand)) continue;
                // depth of the alpha-string below phi
                long p = 0;
                Vec down = sub(phi, alpha);
                while (known.count(down)) {
                    ++p;
                    down = sub(down, alpha);
                }
                Rat pair = 2 * dot(phi, alpha) / norm2_of(alpha);
                if (Rat(p) - pair >= 1) {
                    std::vector<long> cc = coeffs;
                    cc[i] += 1;
                    additions.emplace_back(std::move(cand), std::move(cc));
                }
            }
        }
        for (auto& [v, c] : additions) {
            if (known.emplace(std::move(v), std::move(c)).second) grew = true;
        }
    }

    Rat max_norm2(0);
    for (const auto& [v, c] : known) max_norm2 = std::max(max_norm2, Rat(dot(v, v)));

    for (const auto& [v, c] : known) {
        Root r;
        r.coords = v;
        r.simple_coeffs = c;
        r.norm2 = dot(v, v);
        r.length_class = (r.norm2 == max_norm2) ? LengthClass::Long : LengthClass::Short;
        rs.positive_.push_back(std::move(r));
    }
    std::sort(rs.positive_.begin(), rs.positive_.end(), [](const Root& a, const Root& b) {
        if (a.height() != b.height()) return a.height() < b.height();
        return VecLess{}(a.coords, b.coords);
    });

    for (int i = 0; i < n; ++i) {
        auto it = std::find_if(rs.positive_.begin(), rs.positive_.end(),
                               [&](const Root& r) { return r.coords == simple_coords[i]; });
        rs.simple_.push_back(*it);
    }

    rs.cartan_.assign(n, std::vector<long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rs.cartan_[i][j] = rat_to_long(coroot_pairing(rs.simple_[i].coords, rs.simple_[j]));

    rs.rho_.assign(rs.ambient_, Rat(0));
    for (const auto& r : rs.positive_) rs.rho_ = add(rs.rho_, r.coords);
    rs.rho_ = scale(Rat(1, 2), rs.rho_);
    return rs;
}

Vec RootSystem::simple_reflection(const Root& phi, const Vec& w) const {
    if (static_cast<int>(w.size()) != ambient_)
        throw std::invalid_argument("reflection: dimension mismatch");
    Rat c = coroot_pairing(w, phi);
    return sub(w, scale(c, phi.coords));
}

std::set<Vec, VecLess> RootSystem::weyl_orbit(const Vec& w) const {
    std::set<Vec, VecLess> orbit{w};
    std::vector<Vec> frontier{w};
    while (!frontier.empty()) {
        std::vector<Vec> next;
        for (const auto& v : frontier) {
            for (const auto& alpha : simple_) {
                Vec r = simple_reflection(alpha, v);
                if (orbit.insert(r).second) next.push_back(std::move(r));
            }
        }
        frontier = std::move(next);
    }
    return orbit;
}

bool RootSystem::in_closed_langlands_chamber(const Vec& nu_real) const {
    for (const auto& alpha : simple_)
        if (dot(nu_real, alpha.coords) < 0) return false;
    return true;
}

Weight RootSystem::to_fundamental(const Weight& w) const {
    if (w.basis == WeightBasis::Fundamental) return w;
    Weight out;
    out.basis = WeightBasis::Fundamental;
    for (const auto& alpha : simple_) out.coords.push_back(coroot_pairing(w.coords, alpha));
    return out;
}

Weight RootSystem::to_epsilon(const Weight& w) const {
    if (w.basis == WeightBasis::Epsilon) return w;
    const int n = static_cast<int>(simple_.size());
    if (static_cast<int>(w.coords.size()) != n)
        throw std::invalid_argument("fundamental coords must have length rank");
    // Solve sum_j y_j <alpha_j, alpha_i^vee> = c_i, then w = sum y_j alpha_j.
    // The representative lies in the span of the simple roots.
    std::vector<Vec> m(n, Vec(n + 1, Rat(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) m[i][j] = coroot_pairing(simple_[j].coords, simple_[i]);
        m[i][n] = w.coords[i];
    }
    // Gaussian elimination, exact.
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::logic_error("singular Cartan pairing matrix");
        std::swap(m[col], m[piv]);
        Rat inv = Rat(1) / m[col][col];
        for (int c = col; c <= n; ++c) m[col][c] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0) continue;
            Rat f = m[r][col];
            for (int c = col; c <= n; ++c) m[r][c] -= f * m[col][c];
        }
    }
    Vec eps(ambient_, Rat(0));
    for (int j = 0; j < n; ++j) eps = add(eps, scale(m[j][n], simple_[j].coords));
    return Weight{eps, WeightBasis::Epsilon};
}

std::optional<int> RootSystem::find_positive_root(const Vec& coords) const {
    for (size_t i = 0; i < positive_.size(); ++i)
        if (positive_[i].coords == coords) return static_cast<int>(i);
    return std::nullopt;
}

bool RootSystem::has_short_roots() const {
    for (const auto& r : positive_)
        if (r.length_class == LengthClass::Short) return true;
    return false;
}

}  // namespace genps::roots
