#include "quartic/curve.hpp"

namespace quartic {

Curve::Curve(Integer a, Integer b) : a_(std::move(a)), b_(std::move(b)) {
    if (discriminant() == 0) {
        throw Error(Errc::SingularCurve, "4A^3 + 27B^2 = 0 for " + str());
    }
}

Integer Curve::discriminant() const { return -16 * (4 * power(a_, 3) + 27 * b_ * b_); }

Rational Curve::rhs(const Rational& x) const { return x * x * x + Rational(a_) * x + Rational(b_); }

std::string Curve::str() const {
    std::string out = "Y^2 = X^3";
    if (a_ != 0) {
        out += (a_ < 0 ? " - " : " + ") + to_decimal(abs(a_)) + "X";
    }
    if (b_ != 0) {
        out += (b_ < 0 ? " - " : " + ") + to_decimal(abs(b_));
    }
    return out;
}

const Rational& CurvePoint::x() const {
    if (infinity_) {
        throw Error(Errc::PointAtInfinity, "x-coordinate of the point at infinity");
    }
    return x_;
}

const Rational& CurvePoint::y() const {
    if (infinity_) {
        throw Error(Errc::PointAtInfinity, "y-coordinate of the point at infinity");
    }
    return y_;
}

CurvePoint CurvePoint::negated() const { return infinity_ ? *this : affine(x_, -y_); }

std::string CurvePoint::str() const {
    if (infinity_) {
        return "O";
    }
    return "(" + x_.str() + ", " + y_.str() + ")";
}

bool contains(const Curve& curve, const CurvePoint& p) {
    return p.is_infinity() || p.y() * p.y() == curve.rhs(p.x());
}

namespace {

void require_on(const Curve& curve, const CurvePoint& p) {
    if (!contains(curve, p)) {
        throw Error(Errc::InputOffCurve, p.str() + " is not on " + curve.str());
    }
}

CurvePoint add_unchecked(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
    if (p.is_infinity()) {
        return q;
    }
    if (q.is_infinity()) {
        return p;
    }
    Rational slope;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y().is_zero()) {
            return CurvePoint::infinity();
        }
        slope = (Rational(3) * p.x() * p.x() + Rational(curve.a())) / (Rational(2) * p.y());
    } else {
        slope = (q.y() - p.y()) / (q.x() - p.x());
    }
    Rational x3 = slope * slope - p.x() - q.x();
    Rational y3 = slope * (p.x() - x3) - p.y();
    return CurvePoint::affine(std::move(x3), std::move(y3));
}

}  // namespace

CurvePoint add(const Curve& curve, const CurvePoint& p, const CurvePoint& q) {
    require_on(curve, p);
    require_on(curve, q);
    return add_unchecked(curve, p, q);
}

CurvePoint double_point(const Curve& curve, const CurvePoint& p) { return add(curve, p, p); }

CurvePoint scalar_mul(const Curve& curve, std::uint64_t n, const CurvePoint& p) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "scalar_mul requires n >= 1");
    }
    require_on(curve, p);
    CurvePoint result = CurvePoint::infinity();
    CurvePoint base = p;
    while (n > 0) {
        if (n & 1u) {
            result = add_unchecked(curve, result, base);
        }
        n >>= 1;
        if (n > 0) {
            base = add_unchecked(curve, base, base);
        }
    }
    return result;
}

bool is_infinite_order(const Curve& curve, const CurvePoint& p) {
    if (p.is_infinity()) {
        throw Error(Errc::InvalidArgument, "is_infinite_order of the identity");
    }
    require_on(curve, p);
    // Nagell-Lutz screen: torsion points have integral coordinates, and so do
    // all their multiples, so any non-integral multiple settles the question.
    CurvePoint multiple = p;
    for (int n = 1; n <= 12; ++n) {
        if (multiple.is_infinity()) {
            return false;
        }
        if (!multiple.x().is_integer() || !multiple.y().is_integer()) {
            return true;
        }
        multiple = add_unchecked(curve, multiple, p);
    }
    return true;
}

std::optional<CurvePoint> find_integral_point(const Curve& curve, std::int64_t bound) {
    for (std::int64_t magnitude = 0; magnitude <= bound; ++magnitude) {
        for (const std::int64_t x : {magnitude, -magnitude}) {
            if (magnitude == 0 && x < 0) {
                continue;
            }
            const Integer xi(static_cast<long>(x));
            const Integer rhs = xi * xi * xi + curve.a() * xi + curve.b();
            if (rhs <= 0) {
                continue;
            }
            if (auto y = isqrt_exact(rhs)) {
                auto point = CurvePoint::affine(Rational(xi), Rational(*y));
                if (is_infinite_order(curve, point)) {
                    return point;
                }
            }
        }
    }
    return std::nullopt;
}

}  // namespace quartic
