// adelelab: number fields as local data, Brauer classes and their transport,
// orders and level ideals, Bruhat-Tits tree queries, volumes and genus bounds.
#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "adele/equivalence.hpp"
#include "adele/errors.hpp"
#include "adele/genus.hpp"
#include "adele/json_io.hpp"
#include "adele/orders.hpp"
#include "adele/volume.hpp"

using namespace adele;

namespace {

struct Config {
    std::string workspace_path = "adele_workspace.json";
    bool json_output = false;
    mpfr_prec_t precision_bits = 128;
    std::uint64_t prime_bound = 100000;
    std::uint64_t witness_ceiling = 1000000;
};

// Label-keyed store of field specs and verified matchings, persisted as one
// JSON document.
class Workspace {
public:
    explicit Workspace(std::string path) : path_(std::move(path)) {
        std::ifstream in(path_);
        if (!in) return;
        json doc = json::parse(in);
        if (doc.contains("fields"))
            for (const auto& [label, j] : doc["fields"].items()) fields_.emplace(label, j);
        if (doc.contains("matchings"))
            for (const auto& [key, j] : doc["matchings"].items()) matchings_.emplace(key, j);
        if (doc.contains("config")) config_ = doc["config"];
    }

    void save() const {
        json doc;
        doc["fields"] = json::object();
        for (const auto& [label, j] : fields_) doc["fields"][label] = j;
        doc["matchings"] = json::object();
        for (const auto& [key, j] : matchings_) doc["matchings"][key] = j;
        if (!config_.empty()) doc["config"] = config_;
        std::ofstream out(path_);
        if (!out) fail(errc::invalid_input, "cannot write workspace " + path_);
        out << doc.dump(2) << "\n";
    }

    // stored defaults for flags the invocation leaves unset
    std::uint64_t config_u64(const char* key, std::uint64_t fallback) const {
        auto it = config_.find(key);
        if (it == config_.end() || !it->is_number_unsigned()) return fallback;
        std::uint64_t v = it->get<std::uint64_t>();
        return v > 0 ? v : fallback;
    }

    void put_field(const NumberFieldSpec& field) { fields_[field.label()] = to_json(field); }

    NumberFieldSpec field(const std::string& label) const {
        auto it = fields_.find(label);
        if (it == fields_.end())
            fail(errc::invalid_input, "no field labeled \"" + label + "\" in the workspace");
        return field_from_json(it->second);
    }

    void put_matching(const PlaceBijectionData& phi) {
        matchings_[phi.left_field + "|" + phi.right_field] = to_json(phi);
    }

    std::optional<PlaceBijectionData> matching(const std::string& left, const std::string& right) const {
        auto it = matchings_.find(left + "|" + right);
        if (it != matchings_.end()) return matching_from_json(it->second);
        it = matchings_.find(right + "|" + left);
        if (it != matchings_.end()) return matching_from_json(it->second).inverse();
        return std::nullopt;
    }

private:
    std::string path_;
    std::map<std::string, json> fields_;
    std::map<std::string, json> matchings_;
    json config_ = json::object();
};

json load_json_arg(const std::string& arg) {
    if (!arg.empty() && (arg[0] == '{' || arg[0] == '[')) return json::parse(arg);
    std::ifstream in(arg);
    if (!in) fail(errc::invalid_input, "cannot open " + arg);
    return json::parse(in);
}

void emit(const Config& cfg, const json& machine, const std::string& human) {
    if (cfg.json_output)
        std::cout << machine.dump() << "\n";
    else
        std::cout << human;
}

std::string verdict_human(const EquivalenceVerdict& v) {
    std::ostringstream os;
    if (v.refuted()) {
        os << "Refuted";
        if (v.prime) os << "(" << *v.prime << ")";
        os << ": " << v.reason << "\n";
    } else {
        os << "ConsistentUpTo(" << v.bound << ")";
        if (!v.skipped_primes.empty()) {
            os << ", skipped";
            for (std::uint64_t p : v.skipped_primes) os << " " << p;
        }
        os << "\n";
    }
    return os.str();
}

std::string table_row(const std::string& key, const std::string& value) {
    std::ostringstream os;
    os << "  " << std::left << std::setw(18) << key << value << "\n";
    return os.str();
}

PlaceBijectionData obtain_matching(Workspace& ws, const std::string& left, const std::string& right,
                                   std::uint64_t bound) {
    if (auto cached = ws.matching(left, right); cached && cached->verified_bound >= bound)
        return *cached;
    PlaceBijectionData phi = build_place_matching(ws.field(left), ws.field(right), bound);
    ws.put_matching(phi);
    ws.save();
    return phi;
}

std::vector<RamDatum> parse_ram_list(const std::string& spec) {
    std::vector<RamDatum> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos) fail(errc::invalid_input, "ram entry needs q:d_v, got " + item);
        out.push_back(RamDatum{std::stoull(item.substr(0, colon)),
                               (unsigned)std::stoul(item.substr(colon + 1))});
    }
    return out;
}

std::vector<unsigned> parse_unsigned_list(const std::string& spec) {
    std::vector<unsigned> out;
    if (spec.empty()) return out;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back((unsigned)std::stoul(item));
    return out;
}

Int field_abs_disc(const NumberFieldSpec& field) {
    if (!field.field_discriminant())
        fail(errc::missing_field_discriminant,
             "field " + field.label() + " carries no field_discriminant");
    return abs(*field.field_discriminant());
}

VolumeInput build_volume_input(Workspace& ws, const Config& cfg, const std::string& label, unsigned n,
                               unsigned d, const std::string& ram_spec) {
    NumberFieldSpec field = ws.field(label);
    VolumeInput in;
    in.field_degree = (unsigned)field.degree();
    in.abs_disc = field_abs_disc(field);
    in.n = n;
    in.d = d;
    in.ram = parse_ram_list(ram_spec);
    in.precision_bits = cfg.precision_bits;
    unsigned nd = n * d;
    for (unsigned s = 2; s <= nd; ++s)
        in.zeta.push_back(zeta_partial(field, s, cfg.prime_bound, cfg.precision_bits));
    return in;
}

std::string volume_human(const VolumeResult& r) {
    std::ostringstream os;
    os << "volume breakdown\n";
    os << table_row("disc_power",
                    "[" + r.disc_power.lo().to_string() + ", " + r.disc_power.hi().to_string() + "]");
    os << table_row("archimedean",
                    "[" + r.archimedean.lo().to_string() + ", " + r.archimedean.hi().to_string() + "]");
    os << table_row("zeta_product", "[" + r.zeta_product.lo().to_string() + ", " +
                                        r.zeta_product.hi().to_string() + "]");
    os << table_row("lambda_product", r.lambda_product.get_str());
    os << table_row("value", r.value.to_string());
    os << table_row("error_bound", r.error_bound.to_string());
    return os.str();
}

int run(int argc, char** argv) {
    Config cfg;
    CLI::App app{"computations on locally equivalent number fields"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after subcommand names too
    app.add_option("--workspace", cfg.workspace_path, "workspace JSON path");
    app.add_flag("--json", cfg.json_output, "machine-readable JSON output");
    app.add_option("--precision-bits", cfg.precision_bits, "working precision in bits");
    app.add_option("--prime-bound", cfg.prime_bound, "default prime sweep bound");

    // field add | show
    auto* field_cmd = app.add_subcommand("field", "field spec management");
    field_cmd->require_subcommand(1);
    std::string field_arg, field_label;
    auto* field_add = field_cmd->add_subcommand("add", "add a field from JSON");
    field_add->add_option("spec", field_arg, "JSON file or inline document")->required();
    auto* field_show = field_cmd->add_subcommand("show", "show a stored field");
    field_show->add_option("label", field_label, "field label")->required();

    // split <field> <p>
    std::string split_label;
    std::uint64_t split_p = 0;
    auto* split_cmd = app.add_subcommand("split", "splitting type of a prime");
    split_cmd->add_option("field", split_label)->required();
    split_cmd->add_option("p", split_p)->required();

    // equiv / gcd-equiv / match
    std::string eq_left, eq_right;
    std::uint64_t eq_bound = 0;
    auto add_pair_cmd = [&](const char* name, const char* desc) {
        auto* c = app.add_subcommand(name, desc);
        c->add_option("left", eq_left)->required();
        c->add_option("right", eq_right)->required();
        c->add_option("--bound", eq_bound, "prime bound (default --prime-bound)");
        return c;
    };
    auto* equiv_cmd = add_pair_cmd("equiv", "scan for local equivalence");
    auto* gcd_cmd = add_pair_cmd("gcd-equiv", "scan for locally GCD equivalence");
    bool want_witness = false;
    std::uint64_t witness_ceiling_flag = 0;
    gcd_cmd->add_flag("--witness", want_witness, "construct the witness algebra on refutation");
    gcd_cmd->add_option("--witness-ceiling", witness_ceiling_flag, "auxiliary prime search ceiling");
    auto* match_cmd = add_pair_cmd("match", "build the canonical place matching");

    // brauer ...
    auto* brauer_cmd = app.add_subcommand("brauer", "Brauer class operations");
    brauer_cmd->require_subcommand(1);
    std::string class_a, class_b, br_field, br_left, br_right;
    unsigned archtype_n = 1;
    auto* br_validate = brauer_cmd->add_subcommand("validate", "check a class document");
    br_validate->add_option("class", class_a)->required();
    auto* br_tensor = brauer_cmd->add_subcommand("tensor", "tensor product of two classes");
    br_tensor->add_option("a", class_a)->required();
    br_tensor->add_option("b", class_b)->required();
    auto* br_inverse = brauer_cmd->add_subcommand("inverse", "inverse class");
    br_inverse->add_option("class", class_a)->required();
    auto* br_degree = brauer_cmd->add_subcommand("degree", "division algebra degree");
    br_degree->add_option("class", class_a)->required();
    auto* br_restrict = brauer_cmd->add_subcommand("restrict", "restrict a class over Q to a field");
    br_restrict->add_option("class", class_a)->required();
    br_restrict->add_option("field", br_field)->required();
    br_restrict->add_option("--bound", eq_bound, "prime bound");
    auto* br_transport = brauer_cmd->add_subcommand("transport", "transport along a matching");
    br_transport->add_option("class", class_a)->required();
    br_transport->add_option("left", br_left)->required();
    br_transport->add_option("right", br_right)->required();
    br_transport->add_option("--bound", eq_bound, "matching bound");
    auto* br_archtype = brauer_cmd->add_subcommand("archtype", "archimedean group decomposition");
    br_archtype->add_option("class", class_a)->required();
    br_archtype->add_option("field", br_field)->required();
    br_archtype->add_option("--n", archtype_n, "matrix size")->required();

    // order ...
    auto* order_cmd = app.add_subcommand("order", "order and level ideal operations");
    order_cmd->require_subcommand(1);
    std::string order_arg, ord_left, ord_right;
    auto* ord_level = order_cmd->add_subcommand("level", "level ideal of an order");
    ord_level->add_option("order", order_arg)->required();
    auto* ord_maximal = order_cmd->add_subcommand("maximal", "maximality test");
    ord_maximal->add_option("order", order_arg)->required();
    auto* ord_transport = order_cmd->add_subcommand("transport", "transport an order");
    ord_transport->add_option("order", order_arg)->required();
    ord_transport->add_option("left", ord_left)->required();
    ord_transport->add_option("right", ord_right)->required();
    ord_transport->add_option("--bound", eq_bound, "matching bound");

    // tree ...
    auto* tree_cmd = app.add_subcommand("tree", "Bruhat-Tits tree queries");
    tree_cmd->require_subcommand(1);
    std::string vert_a, vert_b;
    auto* tree_dist = tree_cmd->add_subcommand("dist", "distance between two vertices");
    tree_dist->add_option("u", vert_a)->required();
    tree_dist->add_option("v", vert_b)->required();
    auto* tree_nbrs = tree_cmd->add_subcommand("neighbors", "the p+1 neighbors of a vertex");
    tree_nbrs->add_option("u", vert_a)->required();

    // volume ...
    auto* volume_cmd = app.add_subcommand("volume", "volume formulas");
    volume_cmd->require_subcommand(1);
    std::string vol_field, vol_ram;
    unsigned vol_n = 1, vol_d = 1;
    unsigned long cf_ext = 1;
    auto* vol_sl = volume_cmd->add_subcommand("sl", "volume for SL_n of a division algebra");
    vol_sl->add_option("--field", vol_field)->required();
    vol_sl->add_option("--n", vol_n)->required();
    vol_sl->add_option("--d", vol_d)->required();
    vol_sl->add_option("--ram", vol_ram, "comma list q:d_v");
    auto* vol_cf = volume_cmd->add_subcommand("cf", "Chinburg-Friedman covolume");
    vol_cf->add_option("--field", vol_field)->required();
    vol_cf->add_option("--ext-degree", cf_ext, "degree of the class field extension")->required();

    // genus ...
    auto* genus_cmd = app.add_subcommand("genus", "genus bound machinery");
    genus_cmd->require_subcommand(1);
    std::string genus_dv, genus_volume, genus_disc, genus_budget;
    unsigned genus_d = 2, genus_alpha = 2, genus_places = 16, genus_dmin = 2, genus_dmax = 8;
    auto* gen_theta = genus_cmd->add_subcommand("theta", "product of totients of local degrees");
    gen_theta->add_option("--dv", genus_dv, "comma list of local degrees")->required();
    auto* gen_bound = genus_cmd->add_subcommand("bound", "effective bound report");
    gen_bound->add_option("--volume", genus_volume, "V as a decimal or fraction")->required();
    gen_bound->add_option("--d", genus_d, "division algebra degree")->required();
    gen_bound->add_option("--disc", genus_disc, "|D_K| (decimal), refines the budget");
    gen_bound->add_option("--dv", genus_dv, "local degrees of a known ramification configuration");
    auto* gen_budget = genus_cmd->add_subcommand("budget", "lambda budget from the volume");
    gen_budget->add_option("--volume", genus_volume)->required();
    gen_budget->add_option("--d", genus_d)->required();
    gen_budget->add_option("--disc", genus_disc, "|D_K| (decimal)");
    auto* gen_isobound = genus_cmd->add_subcommand("isobound", "theta bound from a lambda budget");
    gen_isobound->add_option("budget", genus_budget, "N as a decimal or fraction")->required();
    auto* gen_dmax = genus_cmd->add_subcommand("dmax", "maximizer construction at a given alpha");
    gen_dmax->add_option("alpha", genus_alpha)->required();
    auto* gen_search = genus_cmd->add_subcommand("search", "brute-force theta maximizer");
    gen_search->add_option("--budget", genus_budget)->required();
    gen_search->add_option("--max-places", genus_places);
    gen_search->add_option("--d-min", genus_dmin);
    gen_search->add_option("--d-max", genus_dmax);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2; // usage errors exit 2
    }

    Workspace ws(cfg.workspace_path);
    // workspace config backs any flag the invocation left unset
    if (!app.count("--precision-bits"))
        cfg.precision_bits = (mpfr_prec_t)ws.config_u64("precision_bits", cfg.precision_bits);
    if (!app.count("--prime-bound")) cfg.prime_bound = ws.config_u64("prime_bound", cfg.prime_bound);
    cfg.witness_ceiling = ws.config_u64("witness_ceiling", cfg.witness_ceiling);
    if (witness_ceiling_flag > 0) cfg.witness_ceiling = witness_ceiling_flag;
    if (eq_bound == 0) eq_bound = cfg.prime_bound;

    if (field_add->parsed()) {
        NumberFieldSpec field = field_from_json(load_json_arg(field_arg));
        ws.put_field(field);
        ws.save();
        auto [r1, r2] = field.signature();
        std::ostringstream os;
        os << "added " << field.label() << "\n"
           << table_row("degree", std::to_string(field.degree()))
           << table_row("signature", "(" + std::to_string(r1) + "," + std::to_string(r2) + ")")
           << table_row("poly_disc", field.poly_disc().get_str());
        emit(cfg, to_json(field), os.str());
        return 0;
    }
    if (field_show->parsed()) {
        NumberFieldSpec field = ws.field(field_label);
        auto [r1, r2] = field.signature();
        std::ostringstream os;
        os << field.label() << "\n"
           << table_row("degree", std::to_string(field.degree()))
           << table_row("signature", "(" + std::to_string(r1) + "," + std::to_string(r2) + ")")
           << table_row("poly_disc", field.poly_disc().get_str())
           << table_row("field_disc", field.field_discriminant() ? field.field_discriminant()->get_str()
                                                                 : std::string("(not supplied)"));
        emit(cfg, to_json(field), os.str());
        return 0;
    }
    if (split_cmd->parsed()) {
        PrimeSplitting s = splitting_type(ws.field(split_label), split_p);
        const char* status = s.status == PrimeSplitting::Status::Unramified ? "Unramified"
                             : s.status == PrimeSplitting::Status::RamifiedUserSupplied
                                 ? "RamifiedUserSupplied"
                                 : "Undetermined";
        json j{{"p", s.p}, {"status", status}, {"degrees", s.degrees}};
        std::ostringstream os;
        os << status << " degrees {";
        for (std::size_t i = 0; i < s.degrees.size(); ++i) os << (i ? "," : "") << s.degrees[i];
        os << "}\n";
        emit(cfg, j, os.str());
        return 0;
    }
    if (equiv_cmd->parsed() || gcd_cmd->parsed()) {
        NumberFieldSpec left = ws.field(eq_left), right = ws.field(eq_right);
        EquivalenceVerdict v = equiv_cmd->parsed() ? check_local_equivalence(left, right, eq_bound)
                                                   : check_gcd_equivalence(left, right, eq_bound);
        if (want_witness && v.refuted() && v.prime) {
            // the witness needs the larger gcd on the left
            unsigned gl = residue_degree_gcd(left, *v.prime).value_or(0);
            unsigned gr = residue_degree_gcd(right, *v.prime).value_or(0);
            BrauerClass w = gl > gr ? gcd_witness_algebra(left, right, *v.prime, cfg.witness_ceiling)
                                    : gcd_witness_algebra(right, left, *v.prime, cfg.witness_ceiling);
            json j{{"verdict", to_json(v)}, {"witness", to_json(w)}};
            emit(cfg, j, verdict_human(v) + "witness: " + to_json(w).dump() + "\n");
            return 0;
        }
        emit(cfg, to_json(v), verdict_human(v));
        return 0;
    }
    if (match_cmd->parsed()) {
        PlaceBijectionData phi = build_place_matching(ws.field(eq_left), ws.field(eq_right), eq_bound);
        ws.put_matching(phi);
        ws.save();
        std::ostringstream os;
        os << "matching " << phi.left_field << " -> " << phi.right_field << "\n"
           << table_row("verified_bound", std::to_string(phi.verified_bound))
           << table_row("skipped", std::to_string(phi.skipped_primes.size()) + " primes")
           << table_row("real places", std::to_string(phi.real_map.size()))
           << table_row("complex places", std::to_string(phi.complex_map.size()));
        emit(cfg, to_json(phi), os.str());
        return 0;
    }
    if (br_validate->parsed()) {
        BrauerClass c = class_from_json(load_json_arg(class_a));
        std::vector<std::string> bad = validate(c);
        json j{{"ok", bad.empty()}, {"violations", bad}};
        std::ostringstream os;
        if (bad.empty())
            os << "ok\n";
        else
            for (const std::string& b : bad) os << "violation: " << b << "\n";
        emit(cfg, j, os.str());
        return 0;
    }
    if (br_tensor->parsed()) {
        BrauerClass c = tensor(class_from_json(load_json_arg(class_a)),
                               class_from_json(load_json_arg(class_b)));
        emit(cfg, to_json(c), to_json(c).dump(2) + "\n");
        return 0;
    }
    if (br_inverse->parsed()) {
        BrauerClass c = inverse(class_from_json(load_json_arg(class_a)));
        emit(cfg, to_json(c), to_json(c).dump(2) + "\n");
        return 0;
    }
    if (br_degree->parsed()) {
        Int d = division_algebra_degree(class_from_json(load_json_arg(class_a)));
        emit(cfg, json{{"degree", d.get_str()}}, d.get_str() + "\n");
        return 0;
    }
    if (br_restrict->parsed()) {
        BrauerClass c =
            restrict_from_Q(class_from_json(load_json_arg(class_a)), ws.field(br_field), eq_bound);
        emit(cfg, to_json(c), to_json(c).dump(2) + "\n");
        return 0;
    }
    if (br_transport->parsed()) {
        PlaceBijectionData phi = obtain_matching(ws, br_left, br_right, eq_bound);
        BrauerClass c = transport(class_from_json(load_json_arg(class_a)), phi);
        emit(cfg, to_json(c), to_json(c).dump(2) + "\n");
        return 0;
    }
    if (br_archtype->parsed()) {
        BrauerClass c = class_from_json(load_json_arg(class_a));
        ArchDecomposition d = archimedean_group_type(c, archtype_n, ws.field(br_field).signature());
        std::ostringstream os;
        os << "SL(" << d.nd << ",C)^" << d.complex_copies << " x SL(" << d.nd << ",R)^"
           << d.real_copies << " x SL(" << d.nd / 2 << ",H)^" << d.quaternionic_copies;
        if (d.quaternionic_compact && d.quaternionic_copies) os << " (H factors compact)";
        os << "\n";
        emit(cfg, to_json(d), os.str());
        return 0;
    }
    if (ord_level->parsed()) {
        LevelIdeal ideal = level_ideal(order_from_json(load_json_arg(order_arg)));
        std::ostringstream os;
        if (ideal.is_trivial()) os << "trivial level ideal\n";
        for (const auto& [place, e] : ideal.exponents)
            os << table_row(place.str(), "exponent " + std::to_string(e));
        emit(cfg, to_json(ideal), os.str());
        return 0;
    }
    if (ord_maximal->parsed()) {
        bool m = is_maximal(order_from_json(load_json_arg(order_arg)));
        emit(cfg, json{{"maximal", m}}, std::string(m ? "maximal\n" : "not maximal\n"));
        return 0;
    }
    if (ord_transport->parsed()) {
        OrderData order = order_from_json(load_json_arg(order_arg));
        PlaceBijectionData phi = obtain_matching(ws, ord_left, ord_right, eq_bound);
        OrderData moved = transport_order(order, phi, transport(order.ambient, phi));
        emit(cfg, to_json(moved), to_json(moved).dump(2) + "\n");
        return 0;
    }
    if (tree_dist->parsed()) {
        unsigned d = tree_distance(tree_vertex_from_json(load_json_arg(vert_a)),
                                   tree_vertex_from_json(load_json_arg(vert_b)));
        emit(cfg, json{{"distance", d}}, std::to_string(d) + "\n");
        return 0;
    }
    if (tree_nbrs->parsed()) {
        std::vector<TreeVertex> nbrs = tree_neighbors(tree_vertex_from_json(load_json_arg(vert_a)));
        json arr = json::array();
        std::ostringstream os;
        for (const TreeVertex& v : nbrs) {
            arr.push_back(to_json(v));
            os << to_json(v).dump() << "\n";
        }
        emit(cfg, arr, os.str());
        return 0;
    }
    if (vol_sl->parsed()) {
        VolumeInput in = build_volume_input(ws, cfg, vol_field, vol_n, vol_d, vol_ram);
        VolumeResult r = volume_sl_n_d(in);
        emit(cfg, to_json(r), volume_human(r));
        return 0;
    }
    if (vol_cf->parsed()) {
        NumberFieldSpec field = ws.field(vol_field);
        ZetaEstimate z = zeta_partial(field, 2, cfg.prime_bound, cfg.precision_bits);
        VolumeResult r = covolume_cf(field_abs_disc(field), z, cf_ext, cfg.precision_bits);
        emit(cfg, to_json(r), volume_human(r));
        return 0;
    }
    if (gen_theta->parsed()) {
        Int t = theta(parse_unsigned_list(genus_dv));
        emit(cfg, json{{"theta", t.get_str()}}, t.get_str() + "\n");
        return 0;
    }
    if (gen_bound->parsed()) {
        Rat v = parse_decimal(genus_volume);
        std::optional<Int> disc;
        if (!genus_disc.empty()) disc = parse_int(genus_disc);
        GenusBoundReport report =
            genus_report(v, genus_d, disc, parse_unsigned_list(genus_dv), cfg.precision_bits);
        std::ostringstream os;
        os << table_row("theta", report.theta.get_str())
           << table_row("bound", report.bound.get_str()) << table_row("branch", report.branch)
           << table_row("alpha", std::to_string(report.alpha))
           << table_row("budget", report.budget.to_string());
        emit(cfg, to_json(report), os.str());
        return 0;
    }
    if (gen_budget->parsed()) {
        Rat v = parse_decimal(genus_volume);
        std::optional<Int> disc;
        if (!genus_disc.empty()) disc = parse_int(genus_disc);
        LambdaBudget b = lambda_budget(v, genus_d, disc, cfg.precision_bits);
        IsoBound iso = isobound(b.coarse);
        json j{{"coarse", b.coarse.get_str()},
               {"refined", json::array({b.refined.lo().to_string(), b.refined.hi().to_string()})},
               {"alpha", iso.alpha},
               {"theta_bound", iso.bound.get_str()}};
        std::ostringstream os;
        os << table_row("coarse", b.coarse.get_str())
           << table_row("refined hi", b.refined.hi().to_string())
           << table_row("alpha", std::to_string(iso.alpha))
           << table_row("theta_bound", iso.bound.get_str());
        emit(cfg, j, os.str());
        return 0;
    }
    if (gen_isobound->parsed()) {
        IsoBound b = isobound(parse_decimal(genus_budget));
        emit(cfg, to_json(b),
             table_row("alpha", std::to_string(b.alpha)) + table_row("bound", b.bound.get_str()));
        return 0;
    }
    if (gen_dmax->parsed()) {
        auto places = dmax_construct(genus_alpha);
        BrauerClass c = dmax_as_class(places);
        std::ostringstream os;
        for (const auto& pl : places)
            os << table_row("(2," + std::to_string(pl.slot) + ")", pl.invariant.str());
        emit(cfg, to_json(c), os.str());
        return 0;
    }
    if (gen_search->parsed()) {
        ThetaSearchResult r =
            brute_force_theta_max(parse_decimal(genus_budget), genus_places, genus_dmin, genus_dmax);
        std::ostringstream os;
        os << table_row("best_theta", r.best_theta.get_str())
           << table_row("nd", std::to_string(r.best_nd));
        std::string degs;
        for (unsigned d : r.best_degrees) degs += (degs.empty() ? "" : ",") + std::to_string(d);
        os << table_row("degrees", "{" + degs + "}")
           << table_row("lambda_product", r.best_lambda_product.get_str())
           << table_row("configs", std::to_string(r.configurations_checked));
        emit(cfg, to_json(r), os.str());
        return 0;
    }
    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        std::cerr << "InvalidInput: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
