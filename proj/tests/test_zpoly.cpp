#include <doctest.h>

#include <random>

#include "adele/errors.hpp"
#include "adele/zpoly.hpp"
#include "support.hpp"

using namespace adele;
using testing::poly;
using testing::sylvester_resultant;

TEST_CASE("resultant matches the Sylvester-Bareiss oracle") {
    // fixed cases first
    CHECK(resultant(poly({-1, 1}), poly({1, 1})) == sylvester_resultant(poly({-1, 1}), poly({1, 1})));
    CHECK(resultant(poly({-2, 0, 0, 1}), poly({0, 0, 3})) ==
          sylvester_resultant(poly({-2, 0, 0, 1}), poly({0, 0, 3})));

    std::mt19937_64 rng(20260810);
    std::uniform_int_distribution<int> deg(1, 7);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int iter = 0; iter < 300; ++iter) {
        auto rand_poly = [&] {
            int n = deg(rng);
            std::vector<Int> c(n + 1);
            for (int i = 0; i <= n; ++i) c[i] = coeff(rng);
            return ZPoly(std::move(c));
        };
        ZPoly a = rand_poly(), b = rand_poly();
        if (a.is_zero() || b.is_zero()) continue;
        CHECK(resultant(a, b) == sylvester_resultant(a, b));
    }
}

TEST_CASE("poly_discriminant on the specified examples") {
    CHECK(poly_discriminant(poly({1, 0, 1})) == -4);    // b^2 - 4c
    CHECK(poly_discriminant(poly({-2, 0, 0, 1})) == -108);

    // x^8 - 799: magnitude 8^8 * 799^7, sign fixed by the oracle
    std::vector<Int> c(9, Int(0));
    c[0] = -799;
    c[8] = 1;
    ZPoly f(std::move(c));
    Int expect_mag = int_pow(8ul, 8) * int_pow(799ul, 7);
    Int d = poly_discriminant(f);
    CHECK(abs(d) == expect_mag);
    Int oracle = sylvester_resultant(f, f.derivative());
    // disc = (-1)^(n(n-1)/2) res / lc with n = 8
    CHECK(d == oracle);
}

TEST_CASE("discriminant via oracle on random monic polynomials") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> deg(2, 6);
    std::uniform_int_distribution<long> coeff(-9, 9);
    for (int iter = 0; iter < 100; ++iter) {
        int n = deg(rng);
        std::vector<Int> c(n + 1);
        for (int i = 0; i < n; ++i) c[i] = coeff(rng);
        c[n] = 1;
        ZPoly f(std::move(c));
        Int expected = sylvester_resultant(f, f.derivative());
        long e = (long)n * (n - 1) / 2;
        if (e & 1) expected = -expected;
        CHECK(poly_discriminant(f) == expected);
    }
}

TEST_CASE("signature on the specified examples") {
    CHECK(signature_of(poly({1, 0, 1})) == std::pair(0, 1));
    CHECK(signature_of(poly({-2, 0, 0, 1})) == std::pair(1, 1));

    std::vector<Int> c(9, Int(0));
    c[0] = -799;
    c[8] = 1;
    CHECK(signature_of(ZPoly(std::move(c))) == std::pair(2, 3));

    std::vector<Int> c2(9, Int(0));
    c2[0] = -12784;
    c2[8] = 1;
    CHECK(signature_of(ZPoly(std::move(c2))) == std::pair(2, 3));
}

TEST_CASE("signature rejects non-squarefree input") {
    ZPoly sq = poly({1, 2, 1}); // (x+1)^2
    CHECK_THROWS_AS(signature_of(sq), Error);
    CHECK(!is_squarefree(sq));
    CHECK(is_squarefree(poly({1, 0, 1})));
}

TEST_CASE("r1 + 2 r2 = deg on 100 random squarefree polynomials") {
    std::mt19937_64 rng(42);
    for (int iter = 0; iter < 100; ++iter) {
        ZPoly f = testing::random_squarefree_poly(rng, 8);
        auto [r1, r2] = signature_of(f);
        CHECK(r1 >= 0);
        CHECK(r2 >= 0);
        CHECK(r1 + 2 * r2 == f.degree());
    }
}

TEST_CASE("Sturm count agrees with integer-root counting on split polynomials") {
    // products of distinct linear factors have all-real known roots
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> nroots(1, 5);
    std::uniform_int_distribution<long> root(-6, 6);
    for (int iter = 0; iter < 50; ++iter) {
        int k = nroots(rng);
        std::vector<long> roots;
        while ((int)roots.size() < k) {
            long r = root(rng);
            if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
        }
        ZPoly f = poly({1});
        for (long r : roots) f = f * poly({-r, 1});
        CHECK(count_real_roots(f) == (int)roots.size());
    }
}
