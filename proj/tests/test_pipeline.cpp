#include "doctest.h"
#include "oracles.hpp"
#include "quartic/corpus.hpp"
#include "quartic/error.hpp"

using namespace quartic;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }

QuarticSolution sol(Variant v, int k, std::vector<long> terms, long f, long g) {
    return {v, k, std::vector<Integer>(terms.begin(), terms.end()), f, g};
}

// sum of fourth powers computed independently of the library
bool equation_oracle(const QuarticSolution& s) {
    Integer lhs = s.k * oracle::pow4(s.f);
    for (const auto& t : s.terms) lhs += oracle::pow4(t);
    return lhs == oracle::pow4(s.g);
}

}  // namespace

TEST_CASE("point_to_solution on published seeds") {
    const auto k1 = point_to_solution(*lookup(Variant::FivePlus, 1), CurvePoint::affine(q(580), q(23368)));
    CHECK(k1 == sol(Variant::FivePlus, 1, {26979, 24378, 221996, 198628, 128524}, 11684, 255463));

    const auto k3 = point_to_solution(*lookup(Variant::FivePlus, 3), CurvePoint::affine(q(34), q(-352)));
    CHECK(k3 == sol(Variant::FivePlus, 3, {16, 15, 220, 176, 88}, 44, 241));
    // the unreduced tuple has gcd 4
    CHECK(oracle::euclid_all({64, 60, 880, 704, 352, 176, 964}) == 4);
    CHECK(scaled(k3, 4).entries() == std::vector<Integer>{64, 60, 880, 704, 352, 176, 964});

    const auto t3 = point_to_solution(*lookup(Variant::ThreePlus, 3), CurvePoint::affine(q(36), q(176)));
    CHECK(t3.same_multiset(sol(Variant::ThreePlus, 3, {8, 56, 11}, 22, 57)));
}

TEST_CASE("every showcase row is reproduced from its seed") {
    for (const auto& row : showcase_rows()) {
        if (row.config.find(':') != std::string::npos) continue;  // (p,q) row, see identities
        const FamilyConfig* cfg = nullptr;
        for (const auto& c : registry()) {
            if (c.id() == row.config) cfg = &c;
        }
        REQUIRE(cfg != nullptr);
        const auto got = point_to_solution(*cfg, cfg->seed);
        INFO(row.label);
        CHECK(verify(got));
        CHECK(equation_oracle(got));
        if (row.positional) {
            CHECK(got == row.expected);
        } else {
            CHECK(got.same_multiset(row.expected));
        }
    }
}

TEST_CASE("verify") {
    CHECK(verify(sol(Variant::ThreePlus, 1, {30, 120, 272}, 315, 353)));
    CHECK_FALSE(verify(sol(Variant::ThreePlus, 1, {1, 1, 1}, 1, 1)));
    CHECK_FALSE(verify(sol(Variant::FivePlus, 1, {30, 120, 272}, 315, 353)));  // wrong term count
    CHECK_FALSE(verify(scaled(sol(Variant::ThreePlus, 1, {30, 120, 272}, 315, 353), 3)));  // not primitive
    CHECK(satisfies_equation(scaled(sol(Variant::ThreePlus, 1, {30, 120, 272}, 315, 353), 3)));
    for (const auto& row : showcase_rows()) {
        CHECK(verify(row.expected));
        CHECK(equation_oracle(row.expected));
    }
}

TEST_CASE("make_primitive") {
    const std::vector<Rational> terms{q(1, 2), q(-3, 4), q(5, 6)};
    const auto s = make_primitive(Variant::ThreePlus, 2, terms, q(7, 12), q(-1, 3));
    CHECK(s.terms == std::vector<Integer>{6, 9, 10});
    CHECK(s.f == 7);
    CHECK(s.g == 4);
}

TEST_CASE("generate") {
    const auto k7 = generate(*lookup(Variant::FivePlus, 7), 1);
    REQUIRE(k7.size() == 1);
    CHECK(k7[0].solution == sol(Variant::FivePlus, 7, {6, 9, 20, 12, 8}, 4, 21));
    CHECK(k7[0].provenance.config == "five_plus/7");
    CHECK(k7[0].provenance.multiple == 1);

    const auto k2 = generate(*lookup(Variant::FivePlus, 2), 1);
    CHECK(k2.at(0).solution == sol(Variant::FivePlus, 2, {315, 560, 924, 396, 264}, 132, 965));

    // second multiple: tangent at (4, -64) on Y^2 = X^3 + 144X + 3456
    const auto two = generate(*lookup(Variant::FivePlus, 7), 2);
    REQUIRE(two.size() == 2);
    const Rational m = (q(3) * q(16) + q(144)) / q(-128);
    const Rational x2 = m * m - q(8);
    const CurvePoint p2 = CurvePoint::affine(x2, m * (q(4) - x2) - q(-64));
    CHECK(two[1].provenance.point == p2);
    CHECK(two[1].solution == point_to_solution(*lookup(Variant::FivePlus, 7), p2));
    CHECK(verify(two[1].solution));
    CHECK(equation_oracle(two[1].solution));
    CHECK_FALSE(two[1].solution == two[0].solution);
}

TEST_CASE("generate respects the digit budget") {
    const FamilyConfig& k1 = *lookup(Variant::FivePlus, 1);
    const auto many = generate(k1, 50, 60);
    CHECK(!many.empty());
    CHECK(many.size() < 50);
    for (const auto& g : many) {
        CHECK(decimal_digits(g.solution.g) <= 60);
        CHECK(verify(g.solution));
    }
    try {
        generate(*lookup(Variant::FivePlus, 9), 1, 10);
        FAIL("expected DigitBudgetExhausted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::DigitBudgetExhausted);
    }
}

TEST_CASE("solution_at errors") {
    const FamilySolver solver(*lookup(Variant::FivePlus, 7));
    CHECK_THROWS_AS(solver.solution_at(CurvePoint::infinity()), Error);
    try {
        solver.solution_at(CurvePoint::affine(q(1), q(1)));
        FAIL("expected InputOffCurve");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InputOffCurve);
    }
}

TEST_CASE("decimal_digits") {
    CHECK(decimal_digits(0) == 1);
    CHECK(decimal_digits(9) == 1);
    CHECK(decimal_digits(10) == 2);
    CHECK(decimal_digits(-999) == 3);
    CHECK(decimal_digits(power(Integer(10), 99)) == 100);
}

TEST_CASE("generated streams: replay, positivity, scaling, determinism") {
    for (const auto& cfg : registry()) {
        const auto w = to_weierstrass(build_model(cfg));
        const auto gens = generate(cfg, 3, 150);
        REQUIRE(!gens.empty());
        for (const auto& g : gens) {
            INFO(cfg.id() << " n=" << g.provenance.multiple);
            CHECK(g.provenance.point == scalar_mul(w.curve, g.provenance.multiple, cfg.seed));
            CHECK(point_to_solution(cfg, g.provenance.point) == g.solution);
            CHECK(oracle::euclid_all(g.solution.entries()) == 1);
            for (const auto& e : g.solution.entries()) {
                CHECK(e > 0);
            }
            CHECK(equation_oracle(g.solution));
            const auto big = scaled(g.solution, 12);
            CHECK(satisfies_equation(big));
            const auto entries = big.entries();
            const std::vector<Rational> terms(entries.begin(), entries.end() - 2);
            CHECK(make_primitive(big.variant, big.k, terms, entries[entries.size() - 2], entries.back()) ==
                  g.solution);
        }
        const auto again = generate(cfg, 3, 150);
        REQUIRE(again.size() == gens.size());
        for (std::size_t i = 0; i < gens.size(); ++i) {
            CHECK(again[i].solution == gens[i].solution);
        }
    }
}
