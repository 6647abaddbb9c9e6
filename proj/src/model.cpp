#include "quartic/model.hpp"

#include <algorithm>

namespace quartic {

namespace {

unsigned valuation(Integer n, const Integer& p) {
    unsigned count = 0;
    n = abs(n);
    while (n != 0 && mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
        ++count;
    }
    return count;
}

}  // namespace

CubicModel::CubicModel(Integer d_, Integer a3_, Integer a1_, Integer a0_)
    : d(std::move(d_)), a3(std::move(a3_)), a1(std::move(a1_)), a0(std::move(a0_)) {
    if (d == 0 || a3 == 0) {
        throw Error(Errc::InvalidArgument, "cubic model needs d != 0 and a3 != 0");
    }
}

CubicModel CubicModel::from_cubic(const Integer& d, const UniPoly& cubic) {
    if (cubic.degree() != 3) {
        throw Error(Errc::InvalidArgument, "expected a cubic, got " + cubic.str());
    }
    if (!cubic.coeff(2).is_zero()) {
        throw Error(Errc::InvalidArgument, "cubic has an x^2 term: " + cubic.str());
    }
    for (const auto& c : cubic.coeffs()) {
        if (!c.is_integer()) {
            throw Error(Errc::InvalidArgument, "cubic has non-integer coefficients: " + cubic.str());
        }
    }
    return CubicModel(d, cubic.coeff(3).num(), cubic.coeff(1).num(), cubic.coeff(0).num());
}

bool CubicModel::satisfied_by(const Rational& x, const Rational& r) const {
    return Rational(d) * r * r == Rational(a3) * x * x * x + Rational(a1) * x + Rational(a0);
}

CubicModel CubicModel::negated_branch() const { return CubicModel(d, -a3, -a1, -a0); }

std::string CubicModel::str() const {
    return to_decimal(d) + "r^2 = " + UniPoly(std::vector<Rational>{a0, a1, 0L, a3}).str();
}

WeierstrassForm to_weierstrass(const CubicModel& model) {
    const Integer& d = model.d;
    const Integer a0_canon = model.a1 * model.a3 * d * d;
    const Integer b0_canon = model.a0 * model.a3 * model.a3 * d * d * d;
    if (4 * power(a0_canon, 3) + 27 * b0_canon * b0_canon == 0) {
        throw Error(Errc::SingularCurve, "model " + model.str() + " has a singular cubic");
    }

    const Integer x_scale = model.a3 * d;
    const Integer y_scale = model.a3 * d * d;
    Integer lambda = 1;
    const Integer lambda_max = lambda_reduce(a0_canon, b0_canon);
    if (lambda_max > 1) {
        for (const auto& [p, e] : factor_small(lambda_max)) {
            const unsigned allowed =
                std::min({e, valuation(x_scale, p) / 2, valuation(y_scale, p) / 3});
            lambda *= power(p, allowed);
        }
    }

    const Integer l2 = lambda * lambda;
    const Integer l4 = l2 * l2;
    Curve curve(a0_canon / l4, b0_canon / (l4 * l2));
    ModelMap map{lambda, Rational(x_scale, l2), Rational(y_scale, l2 * lambda)};
    return {std::move(curve), std::move(map)};
}

std::pair<Rational, Rational> point_to_xr(const ModelMap& map, const CurvePoint& p) {
    if (p.is_infinity()) {
        throw Error(Errc::PointAtInfinity, "the identity has no model preimage");
    }
    return {p.x() / map.sx, p.y() / map.sy};
}

CurvePoint xr_to_point(const CubicModel& model, const ModelMap& map, const Rational& x, const Rational& r) {
    if (!model.satisfied_by(x, r)) {
        throw Error(Errc::ModelRelationViolated,
                    "(" + x.str() + ", " + r.str() + ") does not satisfy " + model.str());
    }
    return CurvePoint::affine(x * map.sx, r * map.sy);
}

}  // namespace quartic
