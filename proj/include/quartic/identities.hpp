#pragma once

#include <array>
#include <string>
#include <vector>

#include "quartic/pipeline.hpp"

namespace quartic {

/// 2 (a^2 + ab + b^2)^2, checked against a^4 + b^4 + (a+b)^4.
Integer three_quartic_square(const Integer& a, const Integer& b);

// (p^2 + q^2)^4 = (p^2 - q^2)^4 + (2pq)^4 + s^4 + 2 r^4 under 3 r^2 = 2pq(p^2 - q^2)
// and s = 2r. Fixing q = 1 turns the condition into the cubic model
// 3 r^2 = 2 p^3 - 2 p, i.e. the curve Y^2 = X^3 - 36 X with p = X/6, r = Y/18.

struct K2Witness {
    Rational p;
    Rational q;
    Rational r;

    Rational s() const { return Rational(2) * r; }
    bool condition_holds() const;
    bool identity_holds() const;
};

CubicModel k2_model();
const WeierstrassForm& k2_form();
/// (12, 36), i.e. (p, q, r) = (2, 1, 2).
CurvePoint k2_seed();
/// (25/4, 35/8), the published seed; it is -2 * k2_seed().
CurvePoint k2_published_point();

K2Witness k2_witness(const CurvePoint& pt);
/// Throws InputOffCurve, and DegenerateSolution for points with Y = 0.
QuarticSolution k2_point_to_solution(const CurvePoint& pt);
/// Multiples of k2_seed() as ThreePlus k=2 solutions.
std::vector<GeneratedSolution> k2_generate(std::size_t count, std::size_t max_digits = kDefaultMaxDigits);

struct Quadratic {
    Integer c2, c1, c0;

    Integer eval(const Integer& n) const { return (c2 * n + c1) * n + c0; }
    UniPoly poly() const { return UniPoly(std::vector<Rational>{c0, c1, c2}); }
};

/// Terms q1(n), q2(n), q3(n), fixed_i * u(n), k * (f_mult * u(n))^4, g_mult * u(n)
/// with u(n) = n^2 + n + 1. When q1 + q2 + q3 = 0 the first three collapse to
/// 2 (q1^2 + q1 q2 + q2^2)^2.
struct ParamFamily {
    std::string name;
    int k = 0;
    Variant variant = Variant::FivePlus;
    std::array<Quadratic, 3> quadratics;
    std::vector<Integer> fixed_multipliers;
    Integer f_mult;
    Integer g_mult;
    bool repaired_from_paper = false;
};

/// k = 2 family with the two printed typos corrected.
ParamFamily k2_family();
/// k = 5 family with the omitted 7-, 28- and 14-multiplier terms restored.
ParamFamily k5_family();
/// The k = 2 family exactly as printed. Does not satisfy the equation.
ParamFamily k2_family_as_printed();
/// k2_family() for k = 2, k5_family() for k = 5; UnknownConfig otherwise.
ParamFamily family_for(int k);

/// Raw evaluation at n, not reduced and not checked.
QuarticSolution family_terms(const ParamFamily& fam, const Integer& n);
/// Evaluation at n reduced to a primitive solution. Zero terms are kept
/// (the repaired k = 2 family vanishes at n = 4 and n = -3).
QuarticSolution family_eval(const ParamFamily& fam, const Integer& n);
/// Polynomial-level check of the family invariants.
bool verify_family(const ParamFamily& fam);

enum class BivariateIdentity { Carmichael, K4AplusB };

std::string_view identity_name(BivariateIdentity which);
bool identity_holds_at(BivariateIdentity which, const Integer& a, const Integer& b);
/// Checks the identity on the signed grid (-(span-1) .. span-1)^2. Each side
/// has degree at most 16 in either variable, so 17 values per variable
/// (span = 9) already prove it. span < 9 is rejected.
bool grid_identity_check(BivariateIdentity which, int span);

/// 4^4 + 11^4 + 15^4 + 14 * 1^4 = 16^4
QuarticSolution k14_witness();

}  // namespace quartic
