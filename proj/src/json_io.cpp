#include "adele/json_io.hpp"

#include "adele/errors.hpp"

namespace adele {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(errc::invalid_input, "JSON: " + what); }

const json& need(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing key \"") + key + "\"");
    return *it;
}

std::uint64_t as_u64(const json& j, const char* what) {
    if (!j.is_number_unsigned()) bad(std::string(what) + " must be a nonnegative integer");
    return j.get<std::uint64_t>();
}

std::string as_str(const json& j, const char* what) {
    if (!j.is_string()) bad(std::string(what) + " must be a string");
    return j.get<std::string>();
}

} // namespace

json to_json(const Place& place) {
    switch (place.kind) {
    case Place::Kind::finite: return json{{"p", place.p}, {"slot", place.index}};
    case Place::Kind::real: return json{{"arch", "real"}, {"index", place.index}};
    case Place::Kind::complex: return json{{"arch", "complex"}, {"index", place.index}};
    }
    bad("unreachable place kind");
}

Place place_from_json(const json& j) {
    if (!j.is_object()) bad("place must be an object");
    if (j.contains("p"))
        return Place::finite(as_u64(need(j, "p"), "p"), (std::uint32_t)as_u64(need(j, "slot"), "slot"));
    std::string kind = as_str(need(j, "arch"), "arch");
    std::uint32_t index = (std::uint32_t)as_u64(need(j, "index"), "index");
    if (kind == "real") return Place::real(index);
    if (kind == "complex") return Place::complex(index);
    bad("arch must be \"real\" or \"complex\"");
}

json to_json(const NumberFieldSpec& field) {
    json j;
    j["label"] = field.label();
    json coeffs = json::array();
    for (const Int& c : field.minpoly().coeffs()) coeffs.push_back(c.get_str());
    j["minpoly"] = std::move(coeffs);
    if (field.field_discriminant()) j["field_discriminant"] = field.field_discriminant()->get_str();
    if (!field.supplied_ramified().empty()) {
        json ram = json::object();
        for (const auto& [p, pairs] : field.supplied_ramified()) {
            json entry = json::array();
            for (const auto& [e, f] : pairs) entry.push_back(json::array({e, f}));
            ram[std::to_string(p)] = std::move(entry);
        }
        j["ramified"] = std::move(ram);
    }
    return j;
}

NumberFieldSpec field_from_json(const json& j) {
    std::string label = as_str(need(j, "label"), "label");
    const json& mp = need(j, "minpoly");
    if (!mp.is_array() || mp.empty()) bad("minpoly must be a nonempty array");
    std::vector<Int> coeffs;
    for (const json& c : mp) coeffs.push_back(parse_int(as_str(c, "minpoly coefficient")));
    std::optional<Int> disc;
    if (j.contains("field_discriminant"))
        disc = parse_int(as_str(j["field_discriminant"], "field_discriminant"));
    std::map<std::uint64_t, RamPairs> ram;
    if (j.contains("ramified")) {
        for (const auto& [key, val] : j["ramified"].items()) {
            std::uint64_t p = std::stoull(key);
            RamPairs pairs;
            if (!val.is_array()) bad("ramified entry must be an array of [e, f] pairs");
            for (const json& pr : val) {
                if (!pr.is_array() || pr.size() != 2) bad("ramified pair must be [e, f]");
                pairs.emplace_back((unsigned)as_u64(pr[0], "e"), (unsigned)as_u64(pr[1], "f"));
            }
            ram.emplace(p, std::move(pairs));
        }
    }
    return NumberFieldSpec(std::move(label), ZPoly(std::move(coeffs)), std::move(disc), std::move(ram));
}

json to_json(const BrauerClass& c) {
    json inv = json::array();
    for (const auto& [place, q] : c.inv)
        inv.push_back(json{{"place", to_json(place)}, {"num", q.num}, {"den", q.den}});
    return json{{"field", c.field}, {"inv", std::move(inv)}};
}

BrauerClass class_from_json(const json& j) {
    BrauerClass c;
    c.field = as_str(need(j, "field"), "field");
    const json& inv = need(j, "inv");
    if (!inv.is_array()) bad("inv must be an array");
    for (const json& entry : inv) {
        Place place = place_from_json(need(entry, "place"));
        std::int64_t num = need(entry, "num").get<std::int64_t>();
        std::int64_t den = need(entry, "den").get<std::int64_t>();
        if (!c.inv.emplace(place, QmodZ::of(num, den)).second)
            bad("duplicate place " + place.str() + " in class");
    }
    return c;
}

json to_json(const EquivalenceVerdict& v) {
    if (v.refuted()) {
        json j{{"kind", "refuted"}, {"reason", v.reason}};
        if (v.prime) j["prime"] = *v.prime;
        return j;
    }
    return json{{"kind", "consistent_up_to"}, {"bound", v.bound}, {"skipped", v.skipped_primes}};
}

EquivalenceVerdict verdict_from_json(const json& j) {
    EquivalenceVerdict v;
    std::string kind = as_str(need(j, "kind"), "kind");
    if (kind == "refuted") {
        v.kind = EquivalenceVerdict::Kind::Refuted;
        v.reason = as_str(need(j, "reason"), "reason");
        if (j.contains("prime")) v.prime = as_u64(j["prime"], "prime");
    } else if (kind == "consistent_up_to") {
        v.kind = EquivalenceVerdict::Kind::ConsistentUpTo;
        v.bound = as_u64(need(j, "bound"), "bound");
        for (const json& p : need(j, "skipped")) v.skipped_primes.push_back(as_u64(p, "skipped prime"));
    } else {
        bad("unknown verdict kind " + kind);
    }
    return v;
}

json to_json(const PlaceBijectionData& phi) {
    json perms = json::object();
    for (const auto& [p, perm] : phi.perms) perms[std::to_string(p)] = perm;
    return json{{"left", phi.left_field},
                {"right", phi.right_field},
                {"verified_bound", phi.verified_bound},
                {"skipped", phi.skipped_primes},
                {"perms", std::move(perms)},
                {"real", phi.real_map},
                {"complex", phi.complex_map}};
}

PlaceBijectionData matching_from_json(const json& j) {
    PlaceBijectionData phi;
    phi.left_field = as_str(need(j, "left"), "left");
    phi.right_field = as_str(need(j, "right"), "right");
    phi.verified_bound = as_u64(need(j, "verified_bound"), "verified_bound");
    for (const json& p : need(j, "skipped")) phi.skipped_primes.push_back(as_u64(p, "skipped prime"));
    for (const auto& [key, val] : need(j, "perms").items()) {
        std::vector<std::uint32_t> perm;
        for (const json& s : val) perm.push_back((std::uint32_t)as_u64(s, "slot"));
        phi.perms.emplace(std::stoull(key), std::move(perm));
    }
    for (const json& s : need(j, "real")) phi.real_map.push_back((std::uint32_t)as_u64(s, "real index"));
    for (const json& s : need(j, "complex"))
        phi.complex_map.push_back((std::uint32_t)as_u64(s, "complex index"));
    return phi;
}

json to_json(const OrderData& order) {
    json dev = json::array();
    for (const auto& [place, d] : order.deviations)
        dev.push_back(json{{"place", to_json(place)}, {"e", d.level}, {"label", d.label}});
    return json{{"class", to_json(order.ambient)}, {"dev", std::move(dev)}};
}

OrderData order_from_json(const json& j) {
    BrauerClass ambient = class_from_json(need(j, "class"));
    std::map<Place, OrderData::Deviation> devs;
    for (const json& entry : need(j, "dev")) {
        Place place = place_from_json(need(entry, "place"));
        OrderData::Deviation d;
        d.level = (unsigned)as_u64(need(entry, "e"), "e");
        d.label = as_str(need(entry, "label"), "label");
        if (!devs.emplace(place, std::move(d)).second) bad("duplicate deviation at " + place.str());
    }
    return make_order(std::move(ambient), std::move(devs));
}

json to_json(const LevelIdeal& ideal) {
    json entries = json::array();
    for (const auto& [place, e] : ideal.exponents)
        entries.push_back(json{{"place", to_json(place)}, {"e", e}});
    return json{{"exponents", std::move(entries)}};
}

json to_json(const TreeVertex& v) {
    return json{{"p", v.p}, {"a", v.a}, {"n", v.n}, {"b", v.b.get_str()}};
}

TreeVertex tree_vertex_from_json(const json& j) {
    return tree_vertex(as_u64(need(j, "p"), "p"), (unsigned)as_u64(need(j, "a"), "a"),
                       (unsigned)as_u64(need(j, "n"), "n"), parse_int(as_str(need(j, "b"), "b")));
}

json to_json(const ZetaEstimate& z) {
    return json{{"s", z.s},
                {"prime_bound", z.prime_bound},
                {"value", z.value.to_string()},
                {"error_bound", z.error_bound.to_string()}};
}

ZetaEstimate zeta_from_json(const json& j, mpfr_prec_t prec) {
    // Canonical documents carry enough decimal digits that the parse below
    // recovers the serialized value bit for bit; the stated error bound
    // travels verbatim (rounded up if the precision cannot hold it).
    ZetaEstimate z;
    z.s = (unsigned)as_u64(need(j, "s"), "s");
    z.prime_bound = as_u64(need(j, "prime_bound"), "prime_bound");
    z.value = Real::of_str(as_str(need(j, "value"), "value"), prec, MPFR_RNDN);
    z.error_bound = Real::of_str(as_str(need(j, "error_bound"), "error_bound"), prec, MPFR_RNDU);
    return z;
}

json to_json(const VolumeInput& in) {
    json ram = json::array();
    for (const RamDatum& r : in.ram) ram.push_back(json{{"q", r.q}, {"d_v", r.d_v}});
    json zeta = json::array();
    for (const ZetaEstimate& z : in.zeta) zeta.push_back(to_json(z));
    return json{{"field_degree", in.field_degree}, {"abs_disc", in.abs_disc.get_str()},
                {"n", in.n},                       {"d", in.d},
                {"ram", std::move(ram)},           {"zeta", std::move(zeta)},
                {"precision_bits", (std::int64_t)in.precision_bits}};
}

VolumeInput volume_input_from_json(const json& j) {
    VolumeInput in;
    in.field_degree = (unsigned)as_u64(need(j, "field_degree"), "field_degree");
    in.abs_disc = parse_int(as_str(need(j, "abs_disc"), "abs_disc"));
    in.n = (unsigned)as_u64(need(j, "n"), "n");
    in.d = (unsigned)as_u64(need(j, "d"), "d");
    in.precision_bits = (mpfr_prec_t)as_u64(need(j, "precision_bits"), "precision_bits");
    for (const json& r : need(j, "ram"))
        in.ram.push_back(RamDatum{as_u64(need(r, "q"), "q"), (unsigned)as_u64(need(r, "d_v"), "d_v")});
    for (const json& z : need(j, "zeta")) in.zeta.push_back(zeta_from_json(z, in.precision_bits));
    return in;
}

json to_json(const VolumeResult& r) {
    auto iv = [](const Interval& x) { return json::array({x.lo().to_string(), x.hi().to_string()}); };
    return json{{"value", r.value.to_string()},
                {"error_bound", r.error_bound.to_string()},
                {"breakdown",
                 json{{"disc_power", iv(r.disc_power)},
                      {"archimedean", iv(r.archimedean)},
                      {"zeta_product", iv(r.zeta_product)},
                      {"lambda_product", r.lambda_product.get_str()}}}};
}

json to_json(const ArchDecomposition& d) {
    return json{{"nd", d.nd},
                {"complex_copies", d.complex_copies},
                {"real_copies", d.real_copies},
                {"quaternionic_copies", d.quaternionic_copies},
                {"quaternionic_compact", d.quaternionic_compact}};
}

json to_json(const IsoBound& b) { return json{{"alpha", b.alpha}, {"bound", b.bound.get_str()}}; }

json to_json(const GenusBoundReport& r) {
    return json{{"theta", r.theta.get_str()},   {"details", r.details},
                {"bound", r.bound.get_str()},   {"branch", r.branch},
                {"alpha", r.alpha},             {"budget", r.budget.to_string()}};
}

json to_json(const ThetaSearchResult& r) {
    return json{{"best_theta", r.best_theta.get_str()},
                {"best_nd", r.best_nd},
                {"best_degrees", r.best_degrees},
                {"best_lambda_product", r.best_lambda_product.get_str()},
                {"configurations_checked", r.configurations_checked}};
}

} // namespace adele
