#include "quartic/serialize.hpp"

#include <ostream>

namespace quartic {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(Errc::ParseError, what); }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) {
        schema_error(std::string("missing field '") + name + "'");
    }
    return j.at(name);
}

std::string string_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_string()) {
        schema_error(std::string("field '") + name + "' must be a string");
    }
    return v.get<std::string>();
}

int int_field(const Json& j, const char* name) {
    const Json& v = field(j, name);
    if (!v.is_number_integer()) {
        schema_error(std::string("field '") + name + "' must be an integer");
    }
    return v.get<int>();
}

Integer integer_from(const Json& v) {
    if (!v.is_string()) {
        schema_error("integers are encoded as decimal strings");
    }
    return parse_integer(v.get<std::string>());
}

Rational rational_from(const Json& v) {
    if (!v.is_string()) {
        schema_error("rationals are encoded as strings");
    }
    return Rational::parse(v.get<std::string>());
}

Json point_to_json(const CurvePoint& p) {
    if (p.is_infinity()) {
        return nullptr;
    }
    return Json{{"X", p.x().str()}, {"Y", p.y().str()}};
}

CurvePoint point_from_json(const Json& j) {
    if (j.is_null()) {
        return CurvePoint::infinity();
    }
    return CurvePoint::affine(rational_from(field(j, "X")), rational_from(field(j, "Y")));
}

Variant variant_from(const Json& j) { return parse_variant(string_field(j, "variant")); }

}  // namespace

Json to_json(const QuarticSolution& sol) {
    Json terms = Json::array();
    for (const auto& t : sol.terms) {
        terms.push_back(to_decimal(t));
    }
    return Json{{"variant", variant_name(sol.variant)},
                {"k", sol.k},
                {"terms", std::move(terms)},
                {"f", to_decimal(sol.f)},
                {"g", to_decimal(sol.g)}};
}

Json to_json(const GeneratedSolution& gen) {
    Json j = to_json(gen.solution);
    j["provenance"] = Json{{"config", gen.provenance.config},
                           {"multiple", gen.provenance.multiple},
                           {"point", point_to_json(gen.provenance.point)},
                           {"branch", gen.provenance.branch},
                           {"repaired_from_paper", gen.provenance.repaired_from_paper}};
    return j;
}

Json solutions_to_json(std::span<const GeneratedSolution> sols) {
    Json out = Json::array();
    for (const auto& s : sols) {
        out.push_back(to_json(s));
    }
    return out;
}

QuarticSolution solution_from_json(const Json& j) {
    QuarticSolution sol;
    sol.variant = variant_from(j);
    sol.k = int_field(j, "k");
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) {
        schema_error("'terms' must be an array");
    }
    for (const auto& t : terms) {
        sol.terms.push_back(integer_from(t));
    }
    sol.f = integer_from(field(j, "f"));
    sol.g = integer_from(field(j, "g"));
    return sol;
}

GeneratedSolution generated_from_json(const Json& j) {
    GeneratedSolution gen{solution_from_json(j), {}};
    if (j.contains("provenance")) {
        const Json& p = j.at("provenance");
        gen.provenance.config = string_field(p, "config");
        const Json& multiple = field(p, "multiple");
        if (!multiple.is_number_integer()) {
            schema_error("'multiple' must be an integer");
        }
        gen.provenance.multiple = multiple.get<std::uint64_t>();
        gen.provenance.point = point_from_json(field(p, "point"));
        gen.provenance.branch = int_field(p, "branch");
        const Json& repaired = field(p, "repaired_from_paper");
        if (!repaired.is_boolean()) {
            schema_error("'repaired_from_paper' must be a boolean");
        }
        gen.provenance.repaired_from_paper = repaired.get<bool>();
    }
    return gen;
}

std::vector<GeneratedSolution> solutions_from_json(const Json& j) {
    const Json* list = &j;
    if (j.is_object() && j.contains("solutions")) {
        list = &j.at("solutions");
    } else if (j.is_object()) {
        return {generated_from_json(j)};
    }
    if (!list->is_array()) {
        schema_error("expected an array of solutions");
    }
    std::vector<GeneratedSolution> out;
    for (const auto& item : *list) {
        out.push_back(generated_from_json(item));
    }
    return out;
}

void write_csv(std::ostream& out, std::span<const GeneratedSolution> sols) {
    out << "variant,k,terms,f,g,config,multiple,X,Y,branch,repaired_from_paper\n";
    for (const auto& s : sols) {
        out << variant_name(s.solution.variant) << ',' << s.solution.k << ',';
        for (std::size_t i = 0; i < s.solution.terms.size(); ++i) {
            out << (i ? "|" : "") << to_decimal(s.solution.terms[i]);
        }
        const auto& p = s.provenance;
        out << ',' << to_decimal(s.solution.f) << ',' << to_decimal(s.solution.g) << ',' << p.config << ','
            << p.multiple << ',' << (p.point.is_infinity() ? "" : p.point.x().str()) << ','
            << (p.point.is_infinity() ? "" : p.point.y().str()) << ',' << p.branch << ','
            << (p.repaired_from_paper ? "true" : "false") << '\n';
    }
}

Json to_json(const FamilyConfig& cfg) {
    const Sextuple& s = cfg.sextuple;
    Json mults = Json::array();
    for (const auto& m : cfg.multipliers) {
        mults.push_back(m.str());
    }
    Json j{{"variant", variant_name(cfg.variant)},
           {"k", cfg.k},
           {"sextuple",
            {to_decimal(s.a), to_decimal(s.b), to_decimal(s.c), to_decimal(s.d), to_decimal(s.e), to_decimal(s.f)}},
           {"multipliers", std::move(mults)},
           {"branch", cfg.branch},
           {"seed", point_to_json(cfg.seed)}};
    if (cfg.printed_curve) {
        j["printed_curve"] = Json{{"A", to_decimal(cfg.printed_curve->a())}, {"B", to_decimal(cfg.printed_curve->b())}};
    }
    return j;
}

FamilyConfig config_from_json(const Json& j) {
    FamilyConfig cfg;
    cfg.variant = variant_from(j);
    cfg.k = int_field(j, "k");
    const Json& sext = field(j, "sextuple");
    if (!sext.is_array() || sext.size() != 6) {
        schema_error("'sextuple' must hold six integers");
    }
    cfg.sextuple = {integer_from(sext[0]), integer_from(sext[1]), integer_from(sext[2]),
                    integer_from(sext[3]), integer_from(sext[4]), integer_from(sext[5])};
    const Json& mults = field(j, "multipliers");
    if (!mults.is_array()) {
        schema_error("'multipliers' must be an array");
    }
    for (const auto& m : mults) {
        cfg.multipliers.push_back(rational_from(m));
    }
    if (cfg.multipliers.size() != multiplier_count(cfg.variant)) {
        schema_error("wrong number of multipliers for " + std::string(variant_name(cfg.variant)));
    }
    cfg.branch = j.contains("branch") ? int_field(j, "branch") : 1;
    if (cfg.branch != 1 && cfg.branch != -1) {
        schema_error("'branch' must be 1 or -1");
    }
    cfg.seed = point_from_json(field(j, "seed"));
    if (j.contains("printed_curve")) {
        const Json& c = j.at("printed_curve");
        cfg.printed_curve = Curve(integer_from(field(c, "A")), integer_from(field(c, "B")));
    }
    return cfg;
}

Json registry_to_json(std::span<const FamilyConfig> configs) {
    Json list = Json::array();
    for (const auto& c : configs) {
        list.push_back(to_json(c));
    }
    return Json{{"configs", std::move(list)}};
}

std::vector<FamilyConfig> registry_from_json(const Json& j) {
    const Json& list = j.is_array() ? j : field(j, "configs");
    if (!list.is_array()) {
        schema_error("'configs' must be an array");
    }
    std::vector<FamilyConfig> out;
    for (const auto& item : list) {
        out.push_back(config_from_json(item));
    }
    return out;
}

}  // namespace quartic
