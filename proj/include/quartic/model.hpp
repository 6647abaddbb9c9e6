#pragma once

#include <utility>

#include "quartic/curve.hpp"
#include "quartic/poly.hpp"

namespace quartic {

/// The relation d*r^2 = a3*x^3 + a1*x + a0 (depressed cubic; no x^2 term).
struct CubicModel {
    Integer d;
    Integer a3;
    Integer a1;
    Integer a0;

    CubicModel(Integer d, Integer a3, Integer a1, Integer a0);

    /// d*r^2 = cubic(x). Rejects a cubic with a nonzero x^2 term or
    /// non-integer coefficients.
    static CubicModel from_cubic(const Integer& d, const UniPoly& cubic);

    bool satisfied_by(const Rational& x, const Rational& r) const;
    /// The branch d*r^2 = -(a3 x^3 + a1 x + a0).
    CubicModel negated_branch() const;
    std::string str() const;

    friend bool operator==(const CubicModel&, const CubicModel&) = default;
};

/// X = sx * x and Y = sy * r, with sx = a3*d/lambda^2, sy = a3*d^2/lambda^3.
struct ModelMap {
    Integer lambda;
    Rational sx;
    Rational sy;

    friend bool operator==(const ModelMap&, const ModelMap&) = default;
};

struct WeierstrassForm {
    Curve curve;
    ModelMap map;
};

/// Multiplying the model by a3^2 d^3 gives Y^2 = X^3 + A0 X + B0 with
/// X = a3 d x, Y = a3 d^2 r, A0 = a1 a3 d^2, B0 = a0 a3^2 d^3. The result is
/// then scaled down by the largest lambda that divides lambda_reduce(A0, B0)
/// and keeps both sx and sy integral. Throws SingularCurve.
WeierstrassForm to_weierstrass(const CubicModel& model);

/// Inverse substitution x = X/sx, r = Y/sy. Throws PointAtInfinity.
std::pair<Rational, Rational> point_to_xr(const ModelMap& map, const CurvePoint& p);

/// Forward substitution. Throws ModelRelationViolated when (x, r) does not
/// satisfy the model.
CurvePoint xr_to_point(const CubicModel& model, const ModelMap& map, const Rational& x, const Rational& r);

}  // namespace quartic
