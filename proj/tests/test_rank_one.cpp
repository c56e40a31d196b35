#include "doctest.h"

#include "genps/rank_one.hpp"

using namespace genps;
using namespace genps::rankone;

namespace {

BivariatePoly lin(long a, long b, long c) {
    return BivariatePoly::linear(Rat(a), Rat(b), Rat(c));
}

}  // namespace

TEST_CASE("closed-form Q polynomials") {
    SUBCASE("l = 0 is the constant 1") {
        CHECK(q_closed_form(0, TSign::PlusT) == BivariatePoly::constant(Rat(1)));
        CHECK(q_closed_form(0, TSign::MinusT) == BivariatePoly::constant(Rat(1)));
    }
    SUBCASE("l = 1: h -+ t") {
        CHECK(q_closed_form(1, TSign::MinusT) == lin(1, -1, 0));
        CHECK(q_closed_form(1, TSign::PlusT) == lin(1, 1, 0));
    }
    SUBCASE("l = 3, PlusT: (h+t)(h+2+t)(h+4+t)") {
        auto expect = lin(1, 1, 0) * lin(1, 1, 2) * lin(1, 1, 4);
        CHECK(q_closed_form(3, TSign::PlusT) == expect);
    }
    SUBCASE("degree is l") {
        CHECK(q_closed_form(7, TSign::MinusT).total_degree() == 7);
    }
}

TEST_CASE("recursion route") {
    SUBCASE("l = 2, MinusT: (h-t)(h+2-t)") {
        CHECK(q_recursive(2, TSign::MinusT) == lin(1, -1, 0) * lin(1, -1, 2));
    }
    SUBCASE("l = 0") { CHECK(q_recursive(0, TSign::PlusT) == BivariatePoly::constant(Rat(1))); }
    SUBCASE("matches the closed form coefficientwise up to l = 50") {
        for (long l = 0; l <= 50; ++l) {
            CHECK(q_recursive(l, TSign::PlusT) == q_closed_form(l, TSign::PlusT));
            CHECK(q_recursive(l, TSign::MinusT) == q_closed_form(l, TSign::MinusT));
        }
    }
}

TEST_CASE("rank-one p factors") {
    SUBCASE("l = 2, r = 1/2, PlusR: (nu+3/2)(nu+7/2)") {
        auto f = p_factor(2, Rat(1, 2), RBranch::PlusR);
        CHECK(f.shifts == std::vector<Rat>{Rat(3, 2), Rat(7, 2)});
    }
    SUBCASE("l = 1, trivial action: (nu+1)") {
        auto f = p_factor(1, Rat(0), RBranch::Trivial);
        CHECK(f.shifts == std::vector<Rat>{Rat(1)});
    }
    SUBCASE("l = 0: empty product") {
        for (auto b : {RBranch::PlusR, RBranch::MinusR, RBranch::Trivial})
            CHECK(p_factor(0, Rat(1, 2), b).shifts.empty());
    }
    SUBCASE("degree is exactly l") {
        for (long l = 0; l <= 12; ++l) CHECK(p_factor(l, Rat(3, 2), RBranch::MinusR).degree() == l);
    }
    SUBCASE("r = 0 collapses both branches onto the trivial one") {
        for (long l = 0; l <= 6; ++l) {
            auto t = p_factor(l, Rat(0), RBranch::Trivial);
            CHECK(p_factor(l, Rat(0), RBranch::PlusR).shifts == t.shifts);
            CHECK(p_factor(l, Rat(0), RBranch::MinusR).shifts == t.shifts);
        }
    }
    SUBCASE("PlusR * MinusR product is even in r") {
        // build the negated-r product by hand (p_factor itself requires r >= 0)
        for (Rat r : {Rat(1, 2), Rat(1), Rat(3, 2)}) {
            for (long l : {1L, 2L, 5L}) {
                LinearFactors plus_neg, minus_neg;
                for (long j = 0; j < l; ++j) {
                    plus_neg.shifts.push_back(Rat(2 * j + 1) - r);
                    minus_neg.shifts.push_back(Rat(2 * j + 1) + r);
                }
                auto prod_pos = p_factor(l, r, RBranch::PlusR).expand();
                auto prod_pos2 = p_factor(l, r, RBranch::MinusR).expand();
                std::map<int, Rat> lhs, rhs;
                // multiply expansions
                auto mul = [](const std::map<int, Rat>& a, const std::map<int, Rat>& b) {
                    std::map<int, Rat> out;
                    for (const auto& [da, ca] : a)
                        for (const auto& [db, cb] : b) out[da + db] += ca * cb;
                    return out;
                };
                lhs = mul(prod_pos, prod_pos2);
                rhs = mul(plus_neg.expand(), minus_neg.expand());
                CHECK(lhs == rhs);
            }
        }
    }
    SUBCASE("negative r rejected") {
        CHECK_THROWS_AS(p_factor(1, Rat(-1, 2), RBranch::PlusR), std::invalid_argument);
    }
    SUBCASE("negative degree rejected") {
        CHECK_THROWS_AS(p_factor(-1, Rat(1, 2), RBranch::PlusR), std::invalid_argument);
        CHECK_THROWS_AS(q_closed_form(-2, TSign::PlusT), std::invalid_argument);
    }
}

TEST_CASE("specialization consistency: p_factor vs Q with h -> nu+1, t -> r") {
    for (long l = 0; l <= 20; ++l) {
        for (Rat r : {Rat(1, 2), Rat(1), Rat(3, 2)}) {
            auto plus = p_factor(l, r, RBranch::PlusR).expand();
            CHECK(plus == q_closed_form(l, TSign::PlusT).substitute(Rat(1), r));
            auto minus = p_factor(l, r, RBranch::MinusR).expand();
            CHECK(minus == q_closed_form(l, TSign::MinusT).substitute(Rat(1), r));
        }
    }
}

TEST_CASE("translation between rho conventions") {
    auto a2 = roots::RootSystem::build(roots::LieType(roots::Series::A, 2));
    LinearFactors p = p_factor(2, Rat(1, 2), RBranch::PlusR);

    SUBCASE("shifted mode is the identity for every root") {
        for (const auto& phi : a2.positive_roots()) {
            CHECK(translate_factor(p, phi, a2, RhoShiftMode::Shifted).shifts == p.shifts);
        }
    }
    SUBCASE("unshifted mode is the identity on simple roots") {
        for (const auto& alpha : a2.simple_roots()) {
            CHECK(translate_factor(p, alpha, a2, RhoShiftMode::Unshifted).shifts == p.shifts);
        }
    }
    SUBCASE("unshifted mode on the A2 highest root applies offset -1") {
        const auto& theta = a2.positive_roots().back();
        REQUIRE(theta.height() == 2);
        auto shifted = translate_factor(p, theta, a2, RhoShiftMode::Unshifted);
        REQUIRE(shifted.shifts.size() == p.shifts.size());
        for (size_t i = 0; i < p.shifts.size(); ++i)
            CHECK(shifted.shifts[i] == p.shifts[i] - 1);
    }
}
