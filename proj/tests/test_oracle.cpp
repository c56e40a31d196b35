#include "doctest.h"

#include <algorithm>

#include "genps/oracle.hpp"

using namespace genps;
using namespace genps::oracle;

namespace {

std::vector<Rat> rats(std::initializer_list<Rat> xs) { return std::vector<Rat>(xs); }

// rank of the invariant basis restricted to the columns of one weight pair
int pair_rank(const std::vector<std::vector<CRat>>& basis, int a, int b) {
    std::vector<std::pair<CRat, CRat>> rows;
    for (const auto& v : basis) {
        if (v[a].is_zero() && v[b].is_zero()) continue;
        rows.emplace_back(v[a], v[b]);
    }
    if (rows.empty()) return 0;
    for (size_t i = 1; i < rows.size(); ++i) {
        // proportional to the first row?
        CRat cross = rows[0].first * rows[i].second - rows[0].second * rows[i].first;
        if (!cross.is_zero()) return 2;
    }
    return 1;
}

}  // namespace

TEST_CASE("the explicit order-8 group") {
    const auto& g = zero_m_elements();
    CHECK(g.size() == 8);
    CHECK(zero_m_is_quaternion_group());
    for (const auto& x : g) CHECK(x.det() == CRat(Rat(1)));

    SUBCASE("conjugation acts on t by exactly +-1, four of each") {
        auto signs = zero_m_ad_signs_on_t();
        REQUIRE(signs.size() == 8);
        CHECK(std::count(signs.begin(), signs.end(), +1) == 4);
        CHECK(std::count(signs.begin(), signs.end(), -1) == 4);
    }
}

TEST_CASE("invariant dimensions and weights of the harmonic constituents") {
    SUBCASE("trivial representation") {
        auto r = invariants_dim(0);
        CHECK(r.l == 1);
        CHECK(r.dominant_weights == rats({Rat(0)}));
    }
    SUBCASE("3-dim constituent does not occur: l = 0") {
        // averaging the 8 group elements on Sym^2 kills everything
        auto r = invariants_dim(2);
        CHECK(r.l == 0);
        CHECK(r.dominant_weights.empty());
    }
    SUBCASE("5-dim constituent: two invariants, weights {0, 2}") {
        auto r = invariants_dim(4);
        CHECK(r.l == 2);
        CHECK(r.dominant_weights == rats({Rat(0), Rat(2)}));
    }
    SUBCASE("7-dim constituent: one invariant, weight {2}") {
        auto r = invariants_dim(6);
        CHECK(r.l == 1);
        CHECK(r.dominant_weights == rats({Rat(2)}));
    }
    SUBCASE("9-dim constituent: weights {0, 2, 4}") {
        auto r = invariants_dim(8);
        CHECK(r.l == 3);
        CHECK(r.dominant_weights == rats({Rat(0), Rat(2), Rat(4)}));
    }
    SUBCASE("character count equals the row-reduction count for p <= 20") {
        for (int p = 0; p <= 20; p += 2) {
            auto r = invariants_dim(p);
            CHECK(r.l == r.l_character);
        }
    }
    SUBCASE("each constituent meets the invariants in exactly one line") {
        for (int p = 4; p <= 16; p += 2) {
            auto basis = invariant_basis(p);
            auto rep = invariants_dim(p);
            for (const auto& w : rep.dominant_weights) {
                int a = static_cast<int>(rat_to_long(Rat(2 * w + p)) / 2);
                CHECK(pair_rank(basis, a, p - a) == 1);
            }
        }
    }
    SUBCASE("odd p rejected") { CHECK_THROWS_AS(invariants_dim(3), std::invalid_argument); }
}

TEST_CASE("genuine weight lists") {
    CHECK(genuine_weight_list(1) == rats({Rat(1, 2)}));
    CHECK(genuine_weight_list(5) == rats({Rat(1, 2), Rat(3, 2), Rat(5, 2)}));
    auto w21 = genuine_weight_list(21);
    CHECK(w21.size() == 11);  // n(xi) = dim/2
    CHECK(w21.front() == Rat(1, 2));
    CHECK(w21.back() == Rat(21, 2));
    CHECK_THROWS_AS(genuine_weight_list(4), std::invalid_argument);
}

TEST_CASE("weight comparison oracle") {
    auto report = verify_weight_comparison(21);
    CHECK(report.pass);
    REQUIRE(report.entries.size() == 11);

    SUBCASE("p = 3: xi weights {1/2, 3/2} against gamma weights {0, 2}") {
        const auto& e = report.entries[1];
        CHECK(e.p == 3);
        CHECK(e.xi_weights == rats({Rat(1, 2), Rat(3, 2)}));
        CHECK(e.gamma_weights == rats({Rat(0), Rat(2)}));
        CHECK(e.signs == std::vector<int>{-1, +1});
    }
    SUBCASE("p = 5: gamma union {0, 2} and {2}, matched as (0, 2, 2)") {
        const auto& e = report.entries[2];
        CHECK(e.p == 5);
        CHECK(e.xi_weights == rats({Rat(1, 2), Rat(3, 2), Rat(5, 2)}));
        CHECK(e.gamma_weights == rats({Rat(0), Rat(2), Rat(2)}));
        CHECK(e.signs == std::vector<int>{-1, +1, -1});
    }
    SUBCASE("p = 1: trivial gamma") {
        const auto& e = report.entries[0];
        CHECK(e.xi_weights == rats({Rat(1, 2)}));
        CHECK(e.gamma_weights == rats({Rat(0)}));
    }
}

TEST_CASE("multiplicity identity oracle") {
    auto report = verify_multiplicity_identity(21);
    CHECK(report.pass);
    for (const auto& e : report.entries) {
        CHECK(e.n_xi == (e.p + 1) / 2);
        CHECK(e.n_xi == e.sum_l);
    }
    SUBCASE("p = 3: single gamma of highest weight 2 (Sym^4)") {
        const auto& e = report.entries[1];
        CHECK(e.gamma_degrees == std::vector<int>{4});
        CHECK(e.sum_l == 2);
    }
    SUBCASE("p = 5: gammas of Sym degree 4 and 6 contributing 2 + 1") {
        const auto& e = report.entries[2];
        CHECK(e.gamma_degrees == std::vector<int>{4, 6});
        CHECK(e.sum_l == 3);
    }
    SUBCASE("p = 1: only the trivial gamma") {
        const auto& e = report.entries[0];
        CHECK(e.gamma_degrees == std::vector<int>{0});
        CHECK(e.sum_l == 1);
    }
}
