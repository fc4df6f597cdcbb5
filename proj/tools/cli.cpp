#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "gwx/errors.hpp"
#include "gwx/hodge.hpp"

namespace gwx::cli {

using ojson = nlohmann::ordered_json;

namespace {

InvariantKind parse_kind(const std::string& s) {
    if (s == "gw") return InvariantKind::GW;
    if (s == "ugw") return InvariantKind::uGW;
    if (s == "gv") return InvariantKind::GV;
    throw ParseError("unknown kind '" + s + "' (expected gw, ugw or gv)");
}

int parse_genus_key(const std::string& key) {
    if (key.empty() || key.size() > 6 || key.find_first_not_of("0123456789") != std::string::npos ||
        (key.size() > 1 && key[0] == '0')) {
        throw ParseError("genus key '" + key + "' is not a non-negative decimal integer");
    }
    return std::stoi(key);
}

void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> allowed, const char* where) {
    for (const auto& [key, _] : obj.items()) {
        bool known = false;
        for (const char* a : allowed) known = known || key == a;
        if (!known) throw ParseError(std::string("unexpected key '") + key + "' in " + where);
    }
    for (const char* a : allowed) {
        if (!obj.contains(a)) throw ParseError(std::string("missing key '") + a + "' in " + where);
    }
}

}  // namespace

GenusTable parse_table(const std::string& text, bool fill_missing) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("table document must be a JSON object");
    require_keys(doc, {"class", "kind", "g_max", "values"}, "table");

    const auto& cls = doc["class"];
    if (!cls.is_object()) throw ParseError("'class' must be an object");
    require_keys(cls, {"c1_dot_beta", "primitive"}, "class");
    if (!cls["c1_dot_beta"].is_number_integer()) throw ParseError("'c1_dot_beta' must be an integer");
    if (!cls["primitive"].is_boolean()) throw ParseError("'primitive' must be a boolean");
    if (!doc["kind"].is_string()) throw ParseError("'kind' must be a string");
    if (!doc["g_max"].is_number_integer() || doc["g_max"].get<long long>() < 0 ||
        doc["g_max"].get<long long>() > 1000) {
        throw ParseError("'g_max' must be an integer in [0, 1000]");
    }
    if (!doc["values"].is_object()) throw ParseError("'values' must be an object");

    GenusTable t;
    t.kind = parse_kind(doc["kind"].get<std::string>());
    t.c = cls["c1_dot_beta"].get<int>();
    t.primitive = cls["primitive"].get<bool>();
    t.g_max = doc["g_max"].get<int>();
    for (const auto& [key, value] : doc["values"].items()) {
        const int g = parse_genus_key(key);
        if (g > t.g_max) throw ParseError("genus " + key + " exceeds g_max");
        if (!value.is_string()) throw ParseError("value at genus " + key + " must be a \"p/q\" string");
        t.values.emplace(g, Rat::parse(value.get<std::string>()));
    }
    for (int g = 0; g <= t.g_max; ++g) {
        if (t.values.contains(g)) continue;
        if (!fill_missing) throw MissingGenus("genus " + std::to_string(g) + " missing below g_max");
        t.values.emplace(g, Rat(0));
    }
    return t;
}

ojson table_to_json(const GenusTable& t) {
    ojson doc;
    doc["class"] = ojson{{"c1_dot_beta", t.c}, {"primitive", t.primitive}};
    doc["kind"] = to_string(t.kind);
    doc["g_max"] = t.g_max;
    ojson values = ojson::object();
    for (const auto& [g, v] : t.values) values[std::to_string(g)] = v.to_fraction_string();
    doc["values"] = std::move(values);
    return doc;
}

std::string serialize_table(const GenusTable& t) { return table_to_json(t).dump(2) + "\n"; }

namespace {

struct Emitted {
    std::string body;
    int status = kExitOk;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string table_text(const GenusTable& t) {
    std::ostringstream os;
    os << "kind " << to_string(t.kind) << ", c1.beta " << t.c << ", primitive "
       << (t.primitive ? "yes" : "no") << ", g_max " << t.g_max << '\n';
    for (const auto& [g, v] : t.values) os << "  g=" << g << ": " << v << '\n';
    return os.str();
}

ojson report_json(const GVReport& r) {
    ojson doc;
    doc["table"] = table_to_json(r.table);
    doc["integral"] = r.integral;
    doc["non_integral_genera"] = r.non_integral_genera;
    doc["largest_nonzero_genus"] =
        r.largest_nonzero_genus ? ojson(*r.largest_nonzero_genus) : ojson(nullptr);
    doc["truncation_caveat"] = r.truncation_caveat;
    return doc;
}

std::string report_text(const GVReport& r) {
    std::ostringstream os;
    os << table_text(r.table);
    os << "integral: " << (r.integral ? "yes" : "no");
    if (!r.integral) {
        os << " (non-integral at genus";
        for (int g : r.non_integral_genera) os << ' ' << g;
        os << ')';
    }
    os << "\nlargest nonzero genus: ";
    if (r.largest_nonzero_genus) os << *r.largest_nonzero_genus;
    else os << "none";
    os << "\nnote: " << r.truncation_caveat << '\n';
    return os.str();
}

GenusTable restrict_to_order(GenusTable t, const std::optional<int>& order) {
    if (!order) return t;
    const int g_eff = std::min(t.g_max, *order / 2 - 1);
    if (g_eff < 0) throw PreconditionViolation("order " + std::to_string(*order) + " covers no genus");
    t.g_max = g_eff;
    std::erase_if(t.values, [&](const auto& kv) { return kv.first > g_eff; });
    return t;
}

Emitted run_transform(const JobConfig& cfg, std::ostream& err) {
    if (!cfg.direction) throw PreconditionViolation("transform requires --direction");
    if (!cfg.input_path) throw PreconditionViolation("transform requires --input");
    const Direction dir = *cfg.direction;
    const bool inverse = dir == Direction::GwToUgw || dir == Direction::GwToGv;
    GenusTable in = restrict_to_order(parse_table(read_file(*cfg.input_path), !inverse), cfg.order);

    const InvariantKind want = dir == Direction::UgwToGw ? InvariantKind::uGW
                               : dir == Direction::GvToGw ? InvariantKind::GV
                                                          : InvariantKind::GW;
    if (in.kind != want) {
        throw KindMismatch("input kind '" + to_string(in.kind) + "' does not match direction (needs '" +
                           to_string(want) + "')");
    }

    Emitted e;
    GenusTable out;
    switch (dir) {
        case Direction::GwToUgw: out = ugw_from_gw(in); break;
        case Direction::UgwToGw: out = gw_from_ugw(in); break;
        case Direction::GvToGw: out = gw_from_gv(in); break;
        case Direction::GwToGv: {
            const GVReport r = gv_from_gw(in);
            out = r.table;
            if (!r.integral) {
                e.status = kExitCheckFailed;
                err << "check failed: GV invariants are not integral at genus";
                for (int g : r.non_integral_genera) err << ' ' << g;
                err << '\n';
            }
            break;
        }
    }
    e.body = cfg.output_format == OutputFormat::Json ? serialize_table(out) : table_text(out);
    return e;
}

Emitted run_check_integrality(const JobConfig& cfg, std::ostream& err) {
    if (!cfg.input_path) throw PreconditionViolation("check-integrality requires --input");
    GenusTable in = parse_table(read_file(*cfg.input_path), false);
    in = restrict_to_order(std::move(in), cfg.order);
    GVReport r;
    if (in.kind == InvariantKind::GW) r = gv_from_gw(in);
    else if (in.kind == InvariantKind::GV) r = inspect_gv(in);
    else throw KindMismatch("check-integrality takes a gw or gv table");
    Emitted e;
    e.body = cfg.output_format == OutputFormat::Json ? report_json(r).dump(2) + "\n" : report_text(r);
    if (!r.integral) {
        e.status = kExitCheckFailed;
        err << "check failed: non-integral GV invariants\n";
    }
    return e;
}

ojson identity_json(const std::string& name, const IdentityReport& r) {
    ojson doc;
    doc["name"] = name;
    doc["passed"] = r.passed;
    doc["cells"] = r.cells.size();
    doc["order"] = r.order;
    doc["note"] = r.note;
    if (r.first_failure) {
        const auto& f = *r.first_failure;
        doc["first_failure"] = ojson{{"g0", f.g0}, {"n", f.n}, {"c", f.c}, {"detail", f.detail}};
    } else {
        doc["first_failure"] = nullptr;
    }
    return doc;
}

ojson check_json(const std::string& name, const CheckReport& r) {
    ojson doc;
    doc["name"] = name;
    doc["passed"] = r.passed;
    doc["cells"] = r.cases;
    doc["first_failure"] = r.failing_genus ? ojson{{"genus", *r.failing_genus}, {"detail", r.detail}}
                                           : ojson(nullptr);
    return doc;
}

Emitted run_verify(const JobConfig& cfg, std::ostream& err) {
    const int order = cfg.order.value_or(12);
    if (order < 1) throw PreconditionViolation("verify-identities requires --order >= 1");
    ojson checks = ojson::array();
    checks.push_back(identity_json("raw_sum_equals_sine_power", verify_raw_equals_closed(3, 4, -2, 6, order)));
    checks.push_back(identity_json("eq_sum_closed_form", verify_eq_sum_grid(-6, 0, -6, 12, order)));
    checks.push_back(check_json("i_function_truncation", verify_i_truncation(order - 1)));
    checks.push_back(check_json("i_function_ratio", verify_i_ratio(order - 1)));

    bool all = true;
    for (const auto& c : checks) all = all && c["passed"].get<bool>();
    Emitted e;
    if (cfg.output_format == OutputFormat::Json) {
        ojson doc{{"order", order}, {"passed", all}, {"checks", checks}};
        e.body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const auto& c : checks) {
            os << (c["passed"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << " ("
               << c["cells"].get<std::size_t>() << " cells)";
            if (!c["first_failure"].is_null()) os << ": " << c["first_failure"].dump();
            os << '\n';
        }
        e.body = os.str();
    }
    if (!all) {
        e.status = kExitCheckFailed;
        err << "check failed: identity mismatch\n";
    }
    return e;
}

Emitted run_mu(const JobConfig& cfg) {
    const int order = cfg.order.value_or(12);
    int lo = 1;
    int hi = (order - 1) / 2;
    if (cfg.single_genus) {
        if (*cfg.single_genus < 1) throw PreconditionViolation("mu: --g must be at least 1");
        lo = hi = *cfg.single_genus;
    }
    ojson rows = ojson::array();
    std::ostringstream text;
    for (int g = lo; g <= hi; ++g) {
        const MuValue m = mu_g0(g);
        const Rat m1 = mu_g1(g);
        rows.push_back(ojson{{"genus", g},
                             {"mu_g0", ojson{{"z", m.z_coeff.to_fraction_string()},
                                             {"H", m.h_coeff.to_fraction_string()},
                                             {"c1", m.c1_coeff.to_fraction_string()},
                                             {"scalar", m.scalar.to_fraction_string()}}},
                             {"mu_g1", m1.to_fraction_string()}});
        text << "g=" << g << ": mu_g0 = " << m.to_zlaurent(3, 0).to_string() << "  [z coefficient " << m.z_coeff
             << "]; mu_g1 = " << m1 << '\n';
    }
    Emitted e;
    e.body = cfg.output_format == OutputFormat::Json ? ojson{{"mu", rows}}.dump(2) + "\n" : text.str();
    return e;
}

Emitted run_expand_sine(const JobConfig& cfg) {
    const int order = cfg.order.value_or(12);
    if (order < 0) throw PreconditionViolation("expand-sine requires --order >= 0");
    const RatSeries s = sine_factor(cfg.genus, cfg.c, order);
    const long exponent = 2L * cfg.genus - 2 + cfg.c;
    Emitted e;
    if (cfg.output_format == OutputFormat::Json) {
        ojson coeffs = ojson::object();
        for (int k = 0; k < order; ++k) {
            const Rat v = s.coeff(k);
            if (!v.is_zero()) coeffs[std::to_string(k)] = v.to_fraction_string();
        }
        ojson doc{{"g", cfg.genus}, {"c", cfg.c}, {"exponent", exponent}, {"order", order}, {"coefficients", coeffs}};
        e.body = doc.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "(sin(u/2)/(u/2))^" << exponent << " + O(u^" << order << ")\n";
        for (int k = 0; k < order; ++k) {
            const Rat v = s.coeff(k);
            if (!v.is_zero()) os << "u^" << k << ": " << v << '\n';
        }
        e.body = os.str();
    }
    return e;
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
    Emitted e;
    try {
        if (config.order && *config.order < 0) throw PreconditionViolation("--order must be non-negative");
        switch (config.command) {
            case Command::Transform: e = run_transform(config, err); break;
            case Command::CheckIntegrality: e = run_check_integrality(config, err); break;
            case Command::VerifyIdentities: e = run_verify(config, err); break;
            case Command::Mu: e = run_mu(config); break;
            case Command::ExpandSine: e = run_expand_sine(config); break;
        }
    } catch (const Error& ex) {
        err << "error: " << ex.what() << '\n';
        return kExitUsage;
    }
    if (config.output_path) {
        std::ofstream f(*config.output_path, std::ios::binary);
        if (!f) {
            err << "error: cannot write '" << *config.output_path << "'\n";
            return kExitUsage;
        }
        f << e.body;
    } else {
        out << e.body;
    }
    return e.status;
}

int main_entry(int argc, char** argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact GW / uGW / GV transforms for threefold curve classes"};
    app.require_subcommand(1);

    JobConfig cfg;
    std::string format = "json";
    std::string direction;
    std::optional<int> order;
    std::optional<std::string> output;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--order", order, "truncation order in u (exclusive)");
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--output", output, "write the report to this path");
    };

    auto* transform = app.add_subcommand("transform", "convert an invariant table");
    transform->add_option("--input", cfg.input_path, "table file")->required();
    transform->add_option("--direction", direction, "gw-to-ugw | ugw-to-gw | gw-to-gv | gv-to-gw")
        ->required()
        ->check(CLI::IsMember({"gw-to-ugw", "ugw-to-gw", "gw-to-gv", "gv-to-gw"}));
    add_common(transform);

    auto* check = app.add_subcommand("check-integrality", "extract GV invariants and check integrality");
    check->add_option("--input", cfg.input_path, "table file")->required();
    add_common(check);

    auto* verify = app.add_subcommand("verify-identities", "run the internal exact identity suite");
    add_common(verify);

    auto* mu = app.add_subcommand("mu", "print the vertex constants mu_{g,0} and mu_{g,1}");
    mu->add_option("--g", cfg.single_genus, "single genus (default: all with 2g < order)");
    add_common(mu);

    auto* sine = app.add_subcommand("expand-sine", "expand (sin(u/2)/(u/2))^(2g-2+c)");
    sine->add_option("--g", cfg.genus, "genus")->required();
    sine->add_option("--c", cfg.c, "c1(X).beta")->required();
    add_common(sine);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (transform->parsed()) {
        cfg.command = Command::Transform;
        static const std::map<std::string, Direction> dirs{{"gw-to-ugw", Direction::GwToUgw},
                                                           {"ugw-to-gw", Direction::UgwToGw},
                                                           {"gw-to-gv", Direction::GwToGv},
                                                           {"gv-to-gw", Direction::GvToGw}};
        cfg.direction = dirs.at(direction);
    } else if (check->parsed()) {
        cfg.command = Command::CheckIntegrality;
    } else if (verify->parsed()) {
        cfg.command = Command::VerifyIdentities;
    } else if (mu->parsed()) {
        cfg.command = Command::Mu;
    } else {
        cfg.command = Command::ExpandSine;
    }
    cfg.order = order;
    cfg.output_path = output;
    cfg.output_format = format == "text" ? OutputFormat::Text : OutputFormat::Json;
    return run(cfg, out, err);
}

}  // namespace gwx::cli
