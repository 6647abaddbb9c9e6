#include <sstream>

#include "doctest.h"
#include "quartic/commands.hpp"
#include "quartic/error.hpp"
#include "quartic/serialize.hpp"

using namespace quartic;

namespace {

std::string printed(const RunReport& r) {
    std::ostringstream out;
    r.print(out);
    return out.str();
}

std::string last_line(const std::string& text) {
    const auto end = text.find_last_not_of('\n');
    const auto start = text.rfind('\n', end);
    return text.substr(start == std::string::npos ? 0 : start + 1, end - (start == std::string::npos ? 0 : start + 1) + 1);
}

}  // namespace

TEST_CASE("tables") {
    const RunReport r = cmd_tables();
    CHECK(r.items.size() == 18);
    CHECK(last_line(printed(r)) == "18/18 verified");
    CHECK(r.exit_code() == 0);

    auto rows = table_rows();
    rows[4].expected.g += 1;
    const RunReport bad = cmd_tables(rows);
    CHECK(last_line(printed(bad)) == "17/18 verified");
    CHECK(bad.exit_code() == 1);
}

TEST_CASE("corpus rows") {
    const auto rows = table_rows();
    int t1 = 0, t2 = 0;
    for (const auto& row : rows) {
        CHECK(verify(row.expected));
        t1 += row.source == CorpusSource::Table1;
        t2 += row.source == CorpusSource::Table2;
    }
    CHECK(t1 == 9);
    CHECK(t2 == 9);
    // Table 1, k = 6: 455^4 + 280^4 + 142^4 + 6 * 170^4 = 483^4
    bool found = false;
    for (const auto& row : rows) {
        if (row.source == CorpusSource::Table1 && row.expected.k == 6) {
            found = true;
            CHECK(row.expected.terms == std::vector<Integer>{455, 280, 142});
            CHECK(row.expected.f == 170);
            CHECK(row.expected.g == 483);
            CHECK(power(Integer(483), 4) == parse_integer("54423757521"));
        }
        if (row.source == CorpusSource::Table2 && row.expected.k == 5) {
            CHECK(row.expected.terms == std::vector<Integer>{3, 4, 6, 8, 14});
            CHECK(row.expected.f == 6);
            CHECK(row.expected.g == 15);
        }
    }
    CHECK(found);
    CHECK(showcase_rows().size() == 14);
    CHECK(verify(k14_row().expected));
}

TEST_CASE("solve") {
    SolveOptions opts;
    opts.variant = Variant::FivePlus;
    opts.k = 1;
    const auto r = cmd_solve(opts);
    REQUIRE(r.solutions.size() == 1);
    CHECK(r.solutions[0].solution.terms[0] == 26979);
    CHECK(r.report.ok());

    opts.variant = Variant::ThreePlus;
    opts.k = 9;
    const auto t9 = cmd_solve(opts);
    REQUIRE(t9.solutions.size() == 1);
    CHECK(t9.solutions[0].solution.same_multiset({Variant::ThreePlus, 9, {414, 115, 264}, 132, 439}));

    for (int k : {4, 5, 6}) {
        opts.k = k;
        try {
            cmd_solve(opts);
            FAIL("expected UnknownConfig");
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownConfig);
        }
    }

    opts.k = 2;
    opts.count = 2;
    const auto k2 = cmd_solve(opts);
    REQUIRE(k2.solutions.size() == 2);
    CHECK(k2.solutions[1].solution.same_multiset({Variant::ThreePlus, 2, {49, 280, 1200}, 140, 1201}));

    // negative branch seeded by an integral point search
    SolveOptions neg;
    neg.variant = Variant::FivePlus;
    neg.k = 2;
    neg.branch = -1;
    neg.count = 2;
    const auto n2 = cmd_solve(neg);
    REQUIRE(n2.solutions.size() == 2);
    CHECK(n2.report.ok());
    CHECK(n2.solutions[0].provenance.branch == -1);
    CHECK(n2.solutions[0].provenance.config == "five_plus/2-");

    // explicit seed off the curve
    SolveOptions off;
    off.variant = Variant::FivePlus;
    off.k = 7;
    off.seed = CurvePoint::affine(Rational(1), Rational(1));
    CHECK_THROWS_AS(cmd_solve(off), Error);
}

TEST_CASE("solve with an imported registry") {
    const Json exported = registry_to_json(registry());
    const auto imported = registry_from_json(exported);
    REQUIRE(imported.size() == registry().size());
    for (std::size_t i = 0; i < imported.size(); ++i) {
        CHECK(imported[i].id() == registry()[i].id());
        CHECK(imported[i].seed == registry()[i].seed);
        CHECK(imported[i].multipliers == registry()[i].multipliers);
        CHECK(imported[i].printed_curve == registry()[i].printed_curve);
    }
    SolveOptions opts;
    opts.variant = Variant::FivePlus;
    opts.k = 7;
    opts.configs = {imported[6]};
    CHECK(cmd_solve(opts).solutions.at(0).solution.g == 21);
}

TEST_CASE("json round trip and determinism") {
    SolveOptions opts;
    opts.variant = Variant::FivePlus;
    opts.k = 3;
    opts.count = 3;
    const auto first = cmd_solve(opts);
    const std::string text = solutions_to_json(first.solutions).dump(2);
    CHECK(text == solutions_to_json(cmd_solve(opts).solutions).dump(2));

    const auto parsed = solutions_from_json(Json::parse(text));
    REQUIRE(parsed.size() == first.solutions.size());
    for (std::size_t i = 0; i < parsed.size(); ++i) {
        CHECK(parsed[i].solution == first.solutions[i].solution);
        CHECK(parsed[i].provenance.point == first.solutions[i].provenance.point);
        CHECK(parsed[i].provenance.multiple == first.solutions[i].provenance.multiple);
    }
    CHECK(cmd_verify(parsed).ok());

    Json broken = Json::parse(text);
    broken[0]["g"] = "242";
    CHECK(cmd_verify(solutions_from_json(broken)).exit_code() == 1);
    broken[0]["g"] = 241;
    CHECK_THROWS_AS(solutions_from_json(broken), Error);

    std::ostringstream csv;
    write_csv(csv, first.solutions);
    CHECK(csv.str().rfind("variant,k,terms,f,g,config,multiple,X,Y,branch,repaired_from_paper\n", 0) == 0);
    CHECK(csv.str().find("five_plus,3,16|15|220|176|88,44,241,five_plus/3,1,34,-352,1,false") != std::string::npos);
}

TEST_CASE("check") {
    for (auto c : {CheckCategory::Curves, CheckCategory::Identities, CheckCategory::Families}) {
        const RunReport r = cmd_check(c);
        CHECK(r.ok());
        CHECK(printed(r) == printed(cmd_check(c)));
    }
    CHECK(cmd_check(CheckCategory::Curves).items.size() == 28);
    CHECK(parse_check_category("curves") == CheckCategory::Curves);
    CHECK_THROWS_AS(parse_check_category("everything"), Error);
}

TEST_CASE("families and search") {
    const auto f = cmd_families(5, -10, 10);
    CHECK(f.report.ok());
    CHECK(f.solutions.size() == 21);
    CHECK(f.solutions[10].provenance.repaired_from_paper);
    const auto lit = cmd_families(2, 1, 1, true);
    CHECK(lit.report.exit_code() == 1);
    CHECK_THROWS_AS(cmd_families(3, 0, 0), Error);

    const auto s = cmd_search(Variant::FivePlus, 7, 6);
    CHECK(s.report.ok());
    CHECK(std::find(s.tuples.begin(), s.tuples.end(), std::vector<Integer>{5, 3, 2}) != s.tuples.end());
}
