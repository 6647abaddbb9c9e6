#include "doctest.h"
#include "quartic/error.hpp"
#include "quartic/model.hpp"

using namespace quartic;

namespace {

Rational q(long n, long d = 1) { return Rational(Integer(n), Integer(d)); }
CurvePoint pt(Rational x, Rational y) { return CurvePoint::affine(std::move(x), std::move(y)); }

}  // namespace

TEST_CASE("to_weierstrass reproduces the published curves") {
    const auto k1 = to_weierstrass(CubicModel(239, 16, 4, 4));
    CHECK(k1.curve == Curve(228484, 218430704));
    CHECK(k1.map == ModelMap{2, q(956), q(114242)});

    const auto k2 = to_weierstrass(CubicModel(25, 16, 4, 4));
    CHECK(k2.curve == Curve(4, 16));
    CHECK(k2.map.lambda == 10);
    CHECK(k2.map.sx == q(4));
    CHECK(k2.map.sy == q(10));

    const auto t7 = to_weierstrass(CubicModel(781, 8, -2, 0));
    CHECK(t7.curve == Curve(-609961, 0));
    CHECK(t7.map.lambda == 2);

    const auto k3 = to_weierstrass(CubicModel(15, 16, 4, 4));
    CHECK(k3.curve == Curve(900, 54000));
    CHECK(k3.map.sx == q(60));
    CHECK(k3.map.sy == q(450));

    const auto k7 = to_weierstrass(CubicModel(27, 32, 8, 8));
    CHECK(k7.curve == Curve(144, 3456));
    CHECK(k7.map == ModelMap{6, q(24), q(108)});

    // Here the canonical curve allows lambda = 4, but only lambda = 2 keeps
    // the substitution integral, and that matches the published curve.
    const auto k8 = to_weierstrass(CubicModel(19, 32, 8, 8));
    CHECK(k8.curve == Curve(5776, 877952));
    CHECK(k8.map.lambda == 2);
    CHECK(lambda_reduce(92416, Integer(56188928)) == 4);

    const auto pq = to_weierstrass(CubicModel(3, 2, -2, 0));
    CHECK(pq.curve == Curve(-36, 0));
    CHECK(pq.map == ModelMap{1, q(6), q(18)});
}

TEST_CASE("map invariants") {
    for (const CubicModel& m : {CubicModel(239, 16, 4, 4), CubicModel(25, 16, 4, 4), CubicModel(7, 128, 32, -32),
                                CubicModel(57123, 5408, 1352, 1352), CubicModel(47, 8, -2, 0)}) {
        const auto w = to_weierstrass(m);
        const Integer l = w.map.lambda;
        CHECK(w.map.sx * Rational(l * l) == Rational(m.a3 * m.d));
        CHECK(w.map.sy * Rational(l * l * l) == Rational(m.a3 * m.d * m.d));
        CHECK(w.map.sx.is_integer());
        CHECK(w.map.sy.is_integer());
        CHECK(w.curve.a() * l * l * l * l == m.a1 * m.a3 * m.d * m.d);
        CHECK(w.curve.b() * l * l * l * l * l * l == m.a0 * m.a3 * m.a3 * m.d * m.d * m.d);
        // round trip on a few rational x with r solved where possible
        for (long n = -5; n <= 5; ++n) {
            const Rational x = q(n, 3);
            const Rational rhs = (Rational(m.a3) * x * x * x + Rational(m.a1) * x + Rational(m.a0)) / Rational(m.d);
            const auto r = rational_sqrt(rhs);
            if (!r) continue;
            const CurvePoint p = xr_to_point(m, w.map, x, *r);
            CHECK(contains(w.curve, p));
            const auto back = point_to_xr(w.map, p);
            CHECK(back.first == x);
            CHECK(back.second == *r);
        }
    }
}

TEST_CASE("point_to_xr and xr_to_point") {
    const CubicModel m1(239, 16, 4, 4);
    const auto w1 = to_weierstrass(m1);
    const auto [x, r] = point_to_xr(w1.map, pt(q(580), q(23368)));
    CHECK(x == q(145, 239));
    CHECK(r == q(11684, 57121));
    CHECK(m1.satisfied_by(x, r));
    CHECK(xr_to_point(m1, w1.map, x, r) == pt(q(580), q(23368)));

    const auto [x3, r3] = point_to_xr(ModelMap{2, q(60), q(450)}, pt(q(34), q(-352)));
    CHECK(x3 == q(17, 30));
    CHECK(r3 == q(-176, 225));

    CHECK_THROWS_AS(point_to_xr(w1.map, CurvePoint::infinity()), Error);

    const CubicModel pq(3, 2, -2, 0);
    CHECK(3 * 4 == 2 * 2 * (4 - 1));
    CHECK(xr_to_point(pq, ModelMap{1, q(6), q(18)}, q(2), q(2)) == pt(q(12), q(36)));
    try {
        xr_to_point(m1, w1.map, q(0), q(1));
        FAIL("expected ModelRelationViolated");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::ModelRelationViolated);
    }
}

TEST_CASE("model construction") {
    CHECK_THROWS_AS(CubicModel(0, 1, 1, 1), Error);
    CHECK_THROWS_AS(CubicModel(1, 0, 1, 1), Error);
    CHECK(CubicModel::from_cubic(239, UniPoly{4, 4, 0, 16}) == CubicModel(239, 16, 4, 4));
    CHECK_THROWS_AS(CubicModel::from_cubic(1, UniPoly{1, 0, 1, 1}), Error);
    CHECK(CubicModel(7, 128, 32, -32).negated_branch() == CubicModel(7, -128, -32, 32));
    CHECK_THROWS_AS(to_weierstrass(CubicModel(1, 1, 0, 0)), Error);
}
