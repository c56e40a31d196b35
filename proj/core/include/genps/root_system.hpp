#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "genps/rational.hpp"

namespace genps::roots {

enum class Series { A, B, C, D, E, F, G };

std::string series_name(Series s);

/// A simple Lie type (series + rank). Rank bounds follow the classical
/// tables: A >= 1, B >= 2, C >= 2, D >= 3, E in {6,7,8}, F = 4, G = 2.
struct LieType {
    Series series;
    int rank;

    LieType(Series s, int r);

    /// C_n is constructible but excluded from the small-K pipeline
    /// (its genuine small K types are one dimensional).
    bool small_k_supported() const { return series != Series::C; }
    bool simply_laced() const;
    std::string name() const;

    friend bool operator==(const LieType& a, const LieType& b) {
        return a.series == b.series && a.rank == b.rank;
    }
};

/// Parses "A".."G" / "E6" / "g2" style series names combined with --rank.
LieType parse_lie_type(const std::string& series, int rank);

enum class LengthClass { Long, Short };

struct Root {
    Vec coords;                     // epsilon-basis coordinates
    LengthClass length_class = LengthClass::Long;
    std::vector<long> simple_coeffs;  // expansion over the simple roots
    Rat norm2;                      // (phi, phi)

    long height() const {
        long h = 0;
        for (long c : simple_coeffs) h += c;
        return h;
    }
};

enum class WeightBasis { Epsilon, Fundamental };

struct Weight {
    Vec coords;
    WeightBasis basis = WeightBasis::Epsilon;
};

/// 2(nu, phi) / (phi, phi), both in epsilon coordinates.
Rat coroot_pairing(const Vec& nu, const Root& phi);

class RootSystem {
public:
    static RootSystem build(const LieType& type);

    /// Classical root data for (series, rank) without the LieType rank gate;
    /// admits the degenerate cases B1 (Spin(3)) and D2 (Spin(4)) needed by
    /// the orthogonal-group representation arithmetic.
    static RootSystem build_classical(Series series, int rank);

    /// Throws for the degenerate systems (B1, D2), which have no LieType.
    LieType type() const { return LieType(series_, rank_); }
    Series series() const { return series_; }
    int rank() const { return rank_; }
    int ambient_dim() const { return ambient_; }
    const std::vector<Root>& simple_roots() const { return simple_; }
    const std::vector<Root>& positive_roots() const { return positive_; }
    const std::vector<std::vector<long>>& cartan_matrix() const { return cartan_; }
    const Vec& rho() const { return rho_; }

    Rat pairing(const Vec& nu, const Root& phi) const { return coroot_pairing(nu, phi); }
    Rat pairing(const Weight& nu, const Root& phi) const;

    /// w - <w, phi^vee> phi. Involutive; works for any root phi.
    Vec simple_reflection(const Root& phi, const Vec& w) const;

    /// Full orbit under the Weyl group, computed by closure over the simple
    /// reflections (the group itself is never enumerated).
    std::set<Vec, VecLess> weyl_orbit(const Vec& w) const;

    /// (nu, alpha) >= 0 for every positive root; checked on the simple ones.
    bool in_closed_langlands_chamber(const Vec& nu_real) const;

    Weight to_fundamental(const Weight& w) const;
    Weight to_epsilon(const Weight& w) const;

    /// Index of a positive root with the given coordinates, if present.
    std::optional<int> find_positive_root(const Vec& coords) const;

    bool is_long(const Root& phi) const { return phi.length_class == LengthClass::Long; }
    bool has_short_roots() const;

private:
    RootSystem() = default;

    Series series_ = Series::A;
    int rank_ = 0;
    int ambient_ = 0;
    std::vector<Root> simple_;
    std::vector<Root> positive_;
    std::vector<std::vector<long>> cartan_;
    Vec rho_;
};

}  // namespace genps::roots
