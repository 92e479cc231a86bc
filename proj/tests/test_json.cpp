#include <doctest.h>

#include <random>

#include "adele/errors.hpp"
#include "adele/json_io.hpp"
#include "support.hpp"

using namespace adele;

TEST_CASE("field specs round-trip through the documented schema") {
    NumberFieldSpec qi = testing::make_Qi();
    json j = to_json(qi);
    CHECK(j["label"] == "Qi");
    CHECK(j["minpoly"] == json::array({"1", "0", "1"}));
    CHECK(j["field_discriminant"] == "-4");
    CHECK(j["ramified"]["2"] == json::array({json::array({2, 1})}));

    NumberFieldSpec back = field_from_json(j);
    CHECK(back.label() == qi.label());
    CHECK(back.minpoly() == qi.minpoly());
    CHECK(back.field_discriminant() == qi.field_discriminant());
    CHECK(back.supplied_ramified() == qi.supplied_ramified());
    CHECK(to_json(back).dump() == j.dump()); // canonical re-serialization is stable
}

TEST_CASE("classes, orders and vertices round-trip byte-for-byte") {
    std::mt19937_64 rng(11);
    std::vector<Place> pool;
    for (std::uint64_t p : {5ull, 7ull, 11ull, 13ull, 17ull}) {
        pool.push_back(Place::finite(p, 0));
        pool.push_back(Place::finite(p, 1));
    }
    for (int iter = 0; iter < 50; ++iter) {
        BrauerClass c = testing::random_class(rng, "K", pool, 5, 2);
        std::string bytes = to_json(c).dump();
        BrauerClass back = class_from_json(json::parse(bytes));
        CHECK(back == c);
        CHECK(to_json(back).dump() == bytes);
    }

    BrauerClass amb{"K", {}};
    amb.inv.emplace(Place::finite(5, 0), QmodZ::of(1, 2));
    amb.inv.emplace(Place::finite(7, 1), QmodZ::of(1, 2));
    OrderData order = make_order(amb, {{Place::finite(11, 0), {3, "token"}}});
    std::string bytes = to_json(order).dump();
    OrderData oback = order_from_json(json::parse(bytes));
    CHECK(oback == order);
    CHECK(to_json(oback).dump() == bytes);

    TreeVertex v = tree_vertex(5, 2, 3, Int(117));
    std::string vb = to_json(v).dump();
    CHECK(tree_vertex_from_json(json::parse(vb)) == v);
    CHECK(to_json(tree_vertex_from_json(json::parse(vb))).dump() == vb);
}

TEST_CASE("verdicts and matchings round-trip") {
    NumberFieldSpec k1 = testing::make_dsp1(), k2 = testing::make_dsp2();
    EquivalenceVerdict v = check_local_equivalence(k1, k2, 300);
    std::string bytes = to_json(v).dump();
    EquivalenceVerdict back = verdict_from_json(json::parse(bytes));
    CHECK(to_json(back).dump() == bytes);
    CHECK(back.bound == v.bound);
    CHECK(back.skipped_primes == v.skipped_primes);

    EquivalenceVerdict r = check_gcd_equivalence(testing::make_cubic2(), testing::make_Q(), 50);
    bytes = to_json(r).dump();
    back = verdict_from_json(json::parse(bytes));
    CHECK(back.refuted());
    CHECK(back.prime == r.prime);
    CHECK(to_json(back).dump() == bytes);

    PlaceBijectionData phi = build_place_matching(k1, k2, 300);
    bytes = to_json(phi).dump();
    PlaceBijectionData pback = matching_from_json(json::parse(bytes));
    CHECK(to_json(pback).dump() == bytes);
    CHECK(pback.verified_bound == phi.verified_bound);
    CHECK(pback.skipped_primes == phi.skipped_primes);
    CHECK(pback.real_map == phi.real_map);
}

TEST_CASE("zetas and volume inputs survive serialization with valid enclosures") {
    NumberFieldSpec q = testing::make_Q();
    ZetaEstimate z = zeta_partial(q, 2, 5000);
    json j = to_json(z);
    ZetaEstimate back = zeta_from_json(j, 128);
    // full-precision decimals parse back bit for bit
    CHECK(back.value == z.value);
    CHECK(back.error_bound == z.error_bound);
    CHECK(back.enclosure().contains_rat(Rat(Int("16449340668"), Int("10000000000")))); // pi^2/6

    VolumeInput in;
    in.field_degree = 1;
    in.abs_disc = 1;
    in.n = 1;
    in.d = 2;
    in.ram = {{2, 2}, {3, 2}};
    in.zeta = {z};
    std::string bytes = to_json(in).dump();
    VolumeInput iback = volume_input_from_json(json::parse(bytes));
    CHECK(to_json(iback).dump() == bytes);
    VolumeResult res = volume_sl_n_d(iback);
    CHECK(res.enclosure().contains_rat(Rat(1, 12)));
}

TEST_CASE("malformed documents are rejected with InvalidInput") {
    CHECK_THROWS_AS(place_from_json(json::parse("{\"p\": 7}")), Error);
    CHECK_THROWS_AS(class_from_json(json::parse("{\"field\": \"K\"}")), Error);
    CHECK_THROWS_AS(field_from_json(json::parse("{\"label\": \"K\", \"minpoly\": []}")), Error);
    CHECK_THROWS_AS(class_from_json(json::parse(
                        "{\"field\":\"K\",\"inv\":[{\"place\":{\"p\":5,\"slot\":0},\"num\":1,\"den\":2},"
                        "{\"place\":{\"p\":5,\"slot\":0},\"num\":1,\"den\":2}]}")),
                    Error); // duplicate place
}
