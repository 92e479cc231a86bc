#include <doctest.h>

#include <random>
#include <set>

#include "adele/equivalence.hpp"
#include "adele/errors.hpp"
#include "adele/orders.hpp"
#include "support.hpp"

using namespace adele;

namespace {

OrderData random_order(std::mt19937_64& rng, const std::vector<Place>& pool, const std::string& field) {
    BrauerClass ambient = testing::random_class(rng, field, pool, 4, 2);
    std::map<Place, OrderData::Deviation> devs;
    std::uniform_int_distribution<int> count(0, 3), level(0, 4);
    std::vector<Place> shuffled = pool;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    int want = count(rng);
    for (int i = 0; i < want && i < (int)shuffled.size(); ++i)
        devs.emplace(shuffled[i],
                     OrderData::Deviation{(unsigned)level(rng), "t" + std::to_string(i)});
    return make_order(std::move(ambient), std::move(devs));
}

} // namespace

TEST_CASE("level ideal and maximality") {
    BrauerClass amb{"Q", {}};
    amb.inv.emplace(Place::finite(2, 0), QmodZ::of(1, 2));
    amb.inv.emplace(Place::finite(3, 0), QmodZ::of(1, 2));

    OrderData maximal = make_order(amb, {});
    CHECK(level_ideal(maximal).is_trivial());
    CHECK(is_maximal(maximal));

    OrderData dev = make_order(amb, {{Place::finite(5, 0), {2, "loc"}}});
    LevelIdeal ideal = level_ideal(dev);
    CHECK(ideal.exponents == std::map<Place, unsigned>{{Place::finite(5, 0), 2u}});
    CHECK(!is_maximal(dev));

    // zero exponents are pruned at construction
    OrderData pruned = make_order(amb, {{Place::finite(5, 0), {0, "x"}}});
    CHECK(is_maximal(pruned));
    // deviations at Ram_f of the ambient class are permitted
    OrderData at_ram = make_order(amb, {{Place::finite(2, 0), {1, "r"}}});
    CHECK(level_ideal(at_ram).exponents.size() == 1);
    // non-finite deviation places are rejected
    CHECK_THROWS_AS(make_order(amb, {{Place::real(0), {1, "x"}}}), Error);
}

TEST_CASE("order transport relabels deviations and preserves level data") {
    NumberFieldSpec k1 = testing::make_dsp1(), k2 = testing::make_dsp2();
    PlaceBijectionData phi = build_place_matching(k1, k2, 400);

    std::vector<Place> pool;
    for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull}) {
        PrimeSplitting s = splitting_type(k1, p);
        for (std::uint32_t slot = 0; slot < s.degrees.size(); ++slot)
            pool.push_back(Place::finite(p, slot));
    }

    std::mt19937_64 rng(606);
    for (int iter = 0; iter < 100; ++iter) {
        OrderData order = random_order(rng, pool, "K1");
        BrauerClass image = transport(order.ambient, phi);
        OrderData moved = transport_order(order, phi, image);
        CHECK(level_ideal(moved) == transport_level_ideal(level_ideal(order), phi));
        CHECK(is_maximal(moved) == is_maximal(order));
        // labels and exponents ride along unchanged
        for (const auto& [place, devn] : order.deviations) {
            Place target = Place::finite(place.p, phi.map_slot(place.p, place.index));
            CHECK(moved.deviations.at(target) == devn);
        }
        // round trip
        OrderData back = transport_order(moved, phi.inverse(), order.ambient);
        CHECK(back == order);
    }
}

TEST_CASE("order transport rejects class mismatches and unmatched places") {
    NumberFieldSpec k1 = testing::make_dsp1(), k2 = testing::make_dsp2();
    PlaceBijectionData phi = build_place_matching(k1, k2, 100);
    BrauerClass amb{"K1", {}};
    amb.inv.emplace(Place::finite(3, 0), QmodZ::of(1, 2));
    amb.inv.emplace(Place::finite(5, 0), QmodZ::of(1, 2));
    OrderData order = make_order(amb, {});

    BrauerClass wrong{"K2", {}};
    wrong.inv.emplace(Place::finite(3, 0), QmodZ::of(1, 2));
    wrong.inv.emplace(Place::finite(7, 0), QmodZ::of(1, 2));
    CHECK_THROWS_AS(transport_order(order, phi, wrong), Error);

    OrderData far = make_order(amb, {{Place::finite(997, 0), {1, "x"}}});
    CHECK_THROWS_AS(transport_order(far, phi, transport(amb, phi)), Error);
}

TEST_CASE("tree vertices normalize to the reduced form") {
    TreeVertex std2 = standard_vertex(2);
    CHECK(std2 == TreeVertex{2, 0, 0, Int(0)});
    // content stripping
    CHECK(tree_vertex(2, 1, 1, Int(0)) == std2);
    CHECK(tree_vertex(3, 2, 3, Int(9)) == tree_vertex(3, 1, 2, Int(3)));
    CHECK_THROWS_AS(tree_vertex(4, 0, 0, Int(0)), Error);  // composite p
    CHECK_THROWS_AS(tree_vertex(2, 0, 2, Int(4)), Error);  // b out of range
    CHECK_THROWS_AS(tree_vertex(2, 0, 2, Int(-1)), Error);
}

TEST_CASE("tree distance on the specified examples") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        TreeVertex origin = standard_vertex(p);
        CHECK(tree_distance(origin, origin) == 0);
        for (unsigned n = 1; n <= 6; ++n) {
            TreeVertex diag = tree_vertex(p, 0, n, Int(0)); // class of diag(1, p^n)
            CHECK(tree_distance(origin, diag) == n);
            CHECK(tree_distance(diag, origin) == n);
        }
    }
    CHECK_THROWS_AS(tree_distance(standard_vertex(2), standard_vertex(3)), Error);
}

TEST_CASE("neighbor counts are p + 1 and sit at distance one") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        TreeVertex origin = standard_vertex(p);
        std::vector<TreeVertex> nbrs = tree_neighbors(origin);
        CHECK(nbrs.size() == p + 1);
        std::set<TreeVertex> unique(nbrs.begin(), nbrs.end());
        CHECK(unique.size() == p + 1);
        for (const TreeVertex& v : nbrs) {
            CHECK(tree_distance(origin, v) == 1);
            CHECK(tree_distance(v, origin) == 1);
            // returned vertices are already reduced
            CHECK(v == tree_vertex(v.p, v.a, v.n, v.b));
        }
    }
}

namespace {

TreeVertex random_vertex(std::mt19937_64& rng, std::uint64_t p) {
    std::uniform_int_distribution<unsigned> exp(0, 5);
    unsigned a = exp(rng), n = exp(rng);
    Int pn = int_pow(p, n);
    Int b = 0;
    if (pn > 1) {
        std::uniform_int_distribution<unsigned long> pick(0, mpz_get_ui(pn.get_mpz_t()) - 1);
        b = (long)pick(rng);
    }
    return tree_vertex(p, a, n, b);
}

} // namespace

TEST_CASE("tree distance is a metric on 200 random triples") {
    std::mt19937_64 rng(7777);
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        for (int iter = 0; iter < 200; ++iter) {
            TreeVertex x = random_vertex(rng, p), y = random_vertex(rng, p), z = random_vertex(rng, p);
            unsigned dxy = tree_distance(x, y), dyx = tree_distance(y, x);
            CHECK(dxy == dyx);                       // symmetry
            CHECK((dxy == 0) == (x == y));           // identity of indiscernibles
            unsigned dxz = tree_distance(x, z), dyz = tree_distance(y, z);
            CHECK(dxz <= dxy + dyz);                 // triangle inequality
        }
    }
}

TEST_CASE("balls of radius up to 3 have tree-exact sizes") {
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        std::set<TreeVertex> ball{standard_vertex(p)};
        std::vector<TreeVertex> frontier{standard_vertex(p)};
        std::size_t expected = 1, power = 1;
        for (unsigned r = 1; r <= 3; ++r) {
            std::vector<TreeVertex> next;
            for (const TreeVertex& v : frontier)
                for (const TreeVertex& w : tree_neighbors(v))
                    if (ball.insert(w).second) next.push_back(w);
            expected += (p + 1) * power;
            power *= p;
            CHECK(ball.size() == expected);
            // every frontier vertex is at distance exactly r
            for (const TreeVertex& w : next) CHECK(tree_distance(standard_vertex(p), w) == r);
            frontier = std::move(next);
        }
    }
}

TEST_CASE("adjacent maximal orders intersect in level one") {
    // the basis-change elementary divisors realize O1/(O1 cap O2) = Z_p/p for
    // neighboring vertices; the level exponent of the intersection order is
    // exactly the tree distance
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        TreeVertex origin = standard_vertex(p);
        for (const TreeVertex& v : tree_neighbors(origin)) {
            unsigned e = tree_distance(origin, v);
            REQUIRE(e == 1);
            BrauerClass amb = trivial_class("Qp_model");
            OrderData eichler = make_order(amb, {{Place::finite(p, 0), {e, "intersection"}}});
            CHECK(level_ideal(eichler).exponents.at(Place::finite(p, 0)) == 1);
            CHECK(!is_maximal(eichler));
        }
    }
}
