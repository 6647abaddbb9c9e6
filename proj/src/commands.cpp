#include "quartic/commands.hpp"

#include <algorithm>
#include <ostream>

namespace quartic {

void RunReport::add(std::string label, bool pass, std::string detail) {
    items.push_back({std::move(label), pass, std::move(detail)});
}

std::size_t RunReport::passed() const {
    std::size_t n = 0;
    for (const auto& item : items) {
        n += item.pass ? 1 : 0;
    }
    return n;
}

void RunReport::print(std::ostream& out) const {
    for (const auto& item : items) {
        out << (item.pass ? "PASS " : "FAIL ") << item.label;
        if (!item.detail.empty()) {
            out << "  " << item.detail;
        }
        out << '\n';
    }
    out << passed() << "/" << items.size() << " verified\n";
}

RunReport cmd_tables(std::span<const CorpusRow> rows) {
    RunReport report{"tables", {}, 0.0};
    for (const auto& row : rows) {
        report.add(row.label, verify(row.expected), row.expected.str());
    }
    return report;
}

RunReport cmd_tables() {
    const auto rows = table_rows();
    return cmd_tables(rows);
}

SolveResult cmd_solve(const SolveOptions& options) {
    SolveResult result;
    result.report.command = "solve " + std::string(variant_name(options.variant)) + " " + std::to_string(options.k);

    if (options.variant == Variant::ThreePlus && options.k == 2 && options.configs.empty()) {
        if (options.branch != 1 || options.seed) {
            throw Error(Errc::InvalidArgument, "three_plus k=2 uses the fixed (p,q) curve; no branch or seed");
        }
        result.solutions = k2_generate(options.count, options.max_digits);
    } else {
        const std::span<const FamilyConfig> configs =
            options.configs.empty() ? std::span<const FamilyConfig>(registry()) : options.configs;
        const FamilyConfig* found = lookup(configs, options.variant, options.k);
        if (found == nullptr) {
            const auto reason = missing_config_reason(options.variant, options.k);
            throw Error(Errc::UnknownConfig, reason.value_or("no configuration"));
        }
        FamilyConfig cfg = *found;
        if (options.branch != cfg.branch) {
            cfg.branch = options.branch;
            cfg.seed = CurvePoint::infinity();
            cfg.printed_curve.reset();
        }
        const FamilySolver solver(cfg);
        CurvePoint start = options.seed.value_or(cfg.seed);
        if (start.is_infinity()) {
            auto found_point = find_integral_point(solver.curve(), options.seed_search_bound);
            if (!found_point) {
                throw Error(Errc::UnknownConfig, cfg.id() + ": no integral point with |X| <= " +
                                                     std::to_string(options.seed_search_bound) +
                                                     " on " + solver.curve().str() + "; pass --seed");
            }
            start = *found_point;
        }
        if (!contains(solver.curve(), start)) {
            throw Error(Errc::InputOffCurve, start.str() + " is not on " + solver.curve().str());
        }
        result.solutions = solver.generate_from(start, options.count, options.max_digits);
    }

    for (const auto& gen : result.solutions) {
        result.report.add(gen.provenance.config + " n=" + std::to_string(gen.provenance.multiple),
                          verify(gen.solution), std::to_string(decimal_digits(gen.solution.g)) + " digits");
    }
    return result;
}

CheckCategory parse_check_category(std::string_view text) {
    if (text == "identities") {
        return CheckCategory::Identities;
    }
    if (text == "families") {
        return CheckCategory::Families;
    }
    if (text == "curves") {
        return CheckCategory::Curves;
    }
    throw Error(Errc::ParseError, "unknown check category '" + std::string(text) + "'");
}

namespace {

void check_curves(RunReport& report) {
    for (const auto& cfg : registry()) {
        const FamilySolver solver(cfg);
        const bool printed = cfg.printed_curve && *cfg.printed_curve == solver.curve();
        report.add("curve " + cfg.id(), printed, solver.curve().str());
        const bool seed_ok = contains(solver.curve(), cfg.seed) && is_infinite_order(solver.curve(), cfg.seed);
        report.add("seed " + cfg.id() + " non-torsion", seed_ok, cfg.seed.str());
    }
    const Curve& k2 = k2_form().curve;
    report.add("curve three_plus/2:pq-identity", k2 == Curve(-36, 0), k2.str());
    const CurvePoint published = k2_published_point();
    report.add("seed three_plus/2:pq-identity non-torsion", contains(k2, published) && is_infinite_order(k2, published),
               published.str());
}

void check_identities(RunReport& report) {
    std::vector<std::string> seen;
    for (const auto& cfg : registry()) {
        const std::string name = cfg.sextuple.str();
        if (std::find(seen.begin(), seen.end(), name) != seen.end()) {
            continue;
        }
        seen.push_back(name);
        const SquareForm form = derive_identity(cfg.sextuple);
        const bool exact = form.root.pow(2).scaled(form.content) == cfg.sextuple.difference();
        report.add("sextuple " + name, exact && form.root.degree() == 3,
                   form.content.str() + " * (" + form.root.str() + ")^2");
    }
    for (const auto which : {BivariateIdentity::Carmichael, BivariateIdentity::K4AplusB}) {
        report.add(std::string(identity_name(which)) + " grid 17x17", grid_identity_check(which, 9));
    }
    bool collapse = true;
    for (int a = -50; a <= 50 && collapse; ++a) {
        for (int b = -50; b <= 50 && collapse; ++b) {
            try {
                three_quartic_square(a, b);
            } catch (const std::logic_error&) {
                collapse = false;
            }
        }
    }
    report.add("a^4 + b^4 + (a+b)^4 = 2(a^2+ab+b^2)^2 for |a|,|b| <= 50", collapse);

    bool k2_ok = true;
    CurvePoint p = k2_seed();
    for (int n = 1; n <= 6; ++n) {
        const K2Witness w = k2_witness(p);
        k2_ok = k2_ok && w.condition_holds() && w.identity_holds() && verify(k2_point_to_solution(p));
        p = add(k2_form().curve, p, k2_seed());
    }
    report.add("(p,q) identity on n*(12,36), n <= 6", k2_ok);
    report.add("k=14 witness", verify(k14_witness()), k14_witness().str());
}

void check_families(RunReport& report) {
    for (const auto& fam : {k2_family(), k5_family()}) {
        report.add(fam.name + " polynomial identity", verify_family(fam));
        bool all = true;
        for (long n = -10; n <= 10; ++n) {
            all = all && verify(family_eval(fam, n));
        }
        report.add(fam.name + " verifies for n in -10..10", all);
    }
    const ParamFamily printed = k2_family_as_printed();
    report.add("k2-as-printed rejected", !verify_family(printed) && !satisfies_equation(family_terms(printed, 1)),
               "literal coefficients fail at n=1");
}

}  // namespace

RunReport cmd_check(CheckCategory category) {
    RunReport report;
    switch (category) {
        case CheckCategory::Curves:
            report.command = "check curves";
            check_curves(report);
            break;
        case CheckCategory::Identities:
            report.command = "check identities";
            check_identities(report);
            break;
        case CheckCategory::Families:
            report.command = "check families";
            check_families(report);
            break;
    }
    return report;
}

SearchResult cmd_search(Variant variant, int k, int bound, std::optional<Rational> content) {
    if (!content) {
        const FamilyConfig* cfg = lookup(variant, k);
        content = cfg ? derive_identity(cfg->sextuple).content : Rational(1);
    }
    SearchResult result;
    result.report.command = "search " + std::string(variant_name(variant)) + " " + std::to_string(k);
    result.tuples = search_multipliers(variant, k, *content, bound);
    for (const auto& tuple : result.tuples) {
        std::string label = "(";
        Rational sum(k);
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            label += (i ? ", " : "") + to_decimal(tuple[i]);
            sum += Rational(power(tuple[i], 4));
        }
        label += ")";
        const auto root = rational_sqrt(sum / *content);
        result.report.add(label, root.has_value(),
                          root ? "(sum + k) / " + content->str() + " = " + root->str() + "^2" : "");
    }
    return result;
}

RunReport cmd_verify(std::span<const GeneratedSolution> solutions) {
    RunReport report{"verify", {}, 0.0};
    for (std::size_t i = 0; i < solutions.size(); ++i) {
        const auto& s = solutions[i];
        std::string label = "#" + std::to_string(i + 1);
        if (!s.provenance.config.empty()) {
            label += " " + s.provenance.config + " n=" + std::to_string(s.provenance.multiple);
        }
        report.add(label, verify(s.solution), s.solution.str());
    }
    return report;
}

FamiliesResult cmd_families(int k, long from, long to, bool as_printed) {
    if (from > to) {
        throw Error(Errc::InvalidArgument, "empty n range");
    }
    ParamFamily fam;
    if (as_printed) {
        if (k != 2) {
            throw Error(Errc::UnknownConfig, "only the k=2 family has a printed-coefficient variant");
        }
        fam = k2_family_as_printed();
    } else {
        fam = family_for(k);
    }
    FamiliesResult result;
    result.report.command = "families " + fam.name;
    for (long n = from; n <= to; ++n) {
        QuarticSolution sol = as_printed ? family_terms(fam, n) : family_eval(fam, n);
        const bool ok = verify(sol);
        std::string detail = sol.str();
        if (sol.has_zero_term()) {
            detail += "  (zero term)";
        }
        result.report.add(fam.name + " n=" + std::to_string(n), ok, std::move(detail));
        result.solutions.push_back({std::move(sol),
                                    Provenance{"family/" + fam.name + ":n=" + std::to_string(n), 0, CurvePoint::infinity(), 1,
                                               fam.repaired_from_paper}});
    }
    return result;
}

}  // namespace quartic
