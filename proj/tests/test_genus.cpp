#include <doctest.h>

#include "adele/errors.hpp"
#include "adele/genus.hpp"
#include "adele/volume.hpp"
#include "support.hpp"

using namespace adele;

TEST_CASE("theta on the specified examples") {
    CHECK(theta({}) == 1);
    CHECK(theta({3, 3}) == 4);
    CHECK(theta({4, 6, 5}) == 16);
    CHECK_THROWS_AS(theta({1}), Error);
}

TEST_CASE("pr_bound on the specified examples") {
    CHECK(pr_bound(Rat(1), 2) == Int(1) + int_pow(10ul, 33));
    CHECK(pr_bound(Rat(1), 29) == 2);
    // V -> 0+: the bound collapses to 1
    CHECK(pr_bound(Rat(1, int_pow(10ul, 40)), 2) == 1);
    CHECK(pr_bound(Rat(1, int_pow(10ul, 40)), 50) == 1);
    CHECK_THROWS_AS(pr_bound(Rat(0), 2), Error);
}

TEST_CASE("pr_bound is monotone in the volume") {
    Int prev = 0;
    for (long num : {1, 2, 5, 11, 24, 100}) {
        Int cur = pr_bound(Rat(num, 7), 2);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("lambda_budget on the specified examples") {
    Rat v(5, 7);
    LambdaBudget b = lambda_budget(v, 3, Int(1));
    CHECK(b.coarse == Rat(int_pow(10ul, 33)) * v);
    CHECK(b.refined.contains_rat(b.coarse)); // disc = 1: both bounds coincide

    // refined <= coarse always
    LambdaBudget c = lambda_budget(v, 3, Int(49));
    CHECK(c.refined.hi() < Real::of_rat(c.coarse, 128, MPFR_RNDD));
    // d odd: exact integer disc power 49^4 = 5764801
    CHECK(c.refined.contains_rat(c.coarse / 5764801));

    // the 1/12 quaternion example over Q: budget = 10^33 / 12 exactly
    LambdaBudget q = lambda_budget(Rat(1, 12), 2, Int(1));
    Rat expected(int_pow(10ul, 33), 12);
    expected.canonicalize();
    CHECK(q.coarse == expected);

    CHECK_THROWS_AS(lambda_budget(v, 2, std::nullopt), Error); // MissingFieldDiscriminant
}

TEST_CASE("isobound on the specified examples") {
    IsoBound b = isobound(Rat(8));
    CHECK(b.alpha == 1);
    CHECK(b.bound == 1);
    b = isobound(Rat(9));
    CHECK(b.alpha == 2);
    CHECK(b.bound == 4);
    b = isobound(Rat(243));
    CHECK(b.alpha == 5);
    CHECK(b.bound == 32);
    // real-valued budgets floor through 3^alpha <= N
    b = isobound(Rat(242, 1) + Rat(9, 10));
    CHECK(b.alpha == 4);
    CHECK(b.bound == 16);
    CHECK_THROWS_AS(isobound(Rat(1, 2)), Error);
}

TEST_CASE("dmax_construct on the specified examples") {
    auto two = dmax_construct(2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].invariant == QmodZ::of(1, 3));
    CHECK(two[1].invariant == QmodZ::of(2, 3));

    auto three = dmax_construct(3);
    REQUIRE(three.size() == 3);
    for (const auto& pl : three) CHECK(pl.invariant == QmodZ::of(1, 3));

    CHECK_THROWS_AS(dmax_construct(1), Error); // AlphaTooSmall

    for (unsigned alpha = 2; alpha <= 9; ++alpha) {
        auto places = dmax_construct(alpha);
        REQUIRE(places.size() == alpha);
        BrauerClass c = dmax_as_class(places);
        CHECK(validate(c).empty());
        // lambda product 3^alpha via the volume module's factor at (2, 3, 3)
        Rat lam = 1;
        for (std::size_t i = 0; i < places.size(); ++i) lam *= lambda_factor(Int(2), 3, 3);
        CHECK(lam == Rat(int_pow(3ul, alpha)));
        CHECK(theta(std::vector<unsigned>(alpha, 3)) == int_pow(2ul, alpha));
    }
}

TEST_CASE("brute force theta maximizer on the specified examples") {
    for (long n = 1; n <= 8; ++n) {
        ThetaSearchResult r = brute_force_theta_max(Rat(n));
        CHECK(r.best_theta == 1); // only quaternionic configurations fit
    }
    ThetaSearchResult nine = brute_force_theta_max(Rat(9));
    CHECK(nine.best_theta == 4);
    CHECK(nine.best_nd == 3);
    CHECK(nine.best_degrees == std::vector<unsigned>{3, 3});
    CHECK(nine.best_lambda_product == Rat(9));

    ThetaSearchResult eightyone = brute_force_theta_max(Rat(81));
    CHECK(eightyone.best_theta == 16);
    CHECK(eightyone.best_degrees == std::vector<unsigned>{3, 3, 3, 3});
}

TEST_CASE("the oracle never exceeds the isobound and attains it at powers of 3") {
    for (unsigned alpha = 2; alpha <= 8; ++alpha) {
        Rat n(int_pow(3ul, alpha));
        ThetaSearchResult r = brute_force_theta_max(n);
        IsoBound b = isobound(n);
        CHECK(r.best_theta == b.bound); // D_max is realized
    }
    for (long n : {2, 5, 10, 30, 100, 250, 700, 2000, 6561}) {
        ThetaSearchResult r = brute_force_theta_max(Rat(n));
        IsoBound b = isobound(Rat(n));
        CHECK(r.best_theta <= b.bound);
    }
}

TEST_CASE("the oracle respects reciprocity realizability") {
    // a single ramified place can never satisfy reciprocity, and three
    // quaternionic places cannot cancel in Q/Z; the best configurations are
    // always realizable, so {3,3} beats any cubic singleton
    ThetaSearchResult r = brute_force_theta_max(Rat(3));
    // a lone {3} has lambda 3 <= 3 and theta 2 but is not realizable
    CHECK(r.best_theta == 1);
    CHECK(r.best_nd == 1);
    CHECK(r.best_degrees.empty());
}

TEST_CASE("genus_report picks the tightest consistent branch") {
    // small volume, d <= 28: the isobound branch wins
    GenusBoundReport r = genus_report(Rat(1, 1000), 2, Int(1), {2, 2});
    CHECK(r.theta == 1);
    CHECK(r.details == std::vector<unsigned>{1, 1});
    CHECK(r.branch == "isobound");
    CHECK(r.bound == isobound(Rat(int_pow(10ul, 33)) / 1000).bound);

    // d > 28: the 1+V branch
    GenusBoundReport big = genus_report(Rat(3), 29, std::nullopt, {});
    CHECK(big.branch == "d>28");
    CHECK(big.bound == 4);
    CHECK(big.theta == 1);

    // theta records the configuration product
    GenusBoundReport cfg = genus_report(Rat(1), 3, Int(1), {3, 3, 3});
    CHECK(cfg.theta == 8);
    CHECK(cfg.details == std::vector<unsigned>{2, 2, 2});
}

TEST_CASE("search space guards") {
    CHECK_THROWS_AS(brute_force_theta_max(Rat(int_pow(3ul, 11))), Error);
    CHECK_THROWS_AS(brute_force_theta_max(Rat(9), 30), Error);
    CHECK_THROWS_AS(brute_force_theta_max(Rat(9), 8, 2, 15), Error);
    CHECK_THROWS_AS(brute_force_theta_max(Rat(1, 2)), Error);
}
