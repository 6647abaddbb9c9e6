#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "quartic/exactnum.hpp"

namespace quartic {

/// Y^2 = X^3 + A X + B over Q. Construction rejects singular curves.
class Curve {
public:
    Curve(Integer a, Integer b);

    const Integer& a() const { return a_; }
    const Integer& b() const { return b_; }

    /// -16 (4A^3 + 27B^2)
    Integer discriminant() const;

    Rational rhs(const Rational& x) const;

    std::string str() const;

    friend bool operator==(const Curve&, const Curve&) = default;

private:
    Integer a_;
    Integer b_;
};

class CurvePoint {
public:
    static CurvePoint infinity() { return CurvePoint(); }
    static CurvePoint affine(Rational x, Rational y) { return CurvePoint(std::move(x), std::move(y)); }

    bool is_infinity() const { return infinity_; }
    /// Affine coordinates; throws PointAtInfinity on the identity.
    const Rational& x() const;
    const Rational& y() const;

    CurvePoint negated() const;

    /// "(x, y)" or "O".
    std::string str() const;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;

private:
    CurvePoint() = default;
    CurvePoint(Rational x, Rational y) : infinity_(false), x_(std::move(x)), y_(std::move(y)) {}

    bool infinity_ = true;
    Rational x_;
    Rational y_;
};

bool contains(const Curve& curve, const CurvePoint& p);

/// Chord-tangent addition. Throws InputOffCurve if either input is not on the curve.
CurvePoint add(const Curve& curve, const CurvePoint& p, const CurvePoint& q);
CurvePoint double_point(const Curve& curve, const CurvePoint& p);
/// n-fold sum by double-and-add; n must be positive.
CurvePoint scalar_mul(const Curve& curve, std::uint64_t n, const CurvePoint& p);

/// True iff n*p is not the identity for every n in 1..12, which by Mazur's
/// bound on rational torsion means p has infinite order. Requires an affine
/// point on the curve.
bool is_infinite_order(const Curve& curve, const CurvePoint& p);

/// Smallest-|X| integral point with Y > 0 and infinite order, scanning
/// |X| <= bound. Used to seed curves that come without a point.
std::optional<CurvePoint> find_integral_point(const Curve& curve, std::int64_t bound);

}  // namespace quartic
