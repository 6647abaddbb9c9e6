#include "quartic/identities.hpp"

namespace quartic {

Integer three_quartic_square(const Integer& a, const Integer& b) {
    const Integer inner = a * a + a * b + b * b;
    const Integer out = 2 * inner * inner;
    if (out != power(a, 4) + power(b, 4) + power(Integer(a + b), 4)) {
        throw std::logic_error("three-quartic identity failed");
    }
    return out;
}

bool K2Witness::condition_holds() const {
    return Rational(3) * r * r == Rational(2) * p * q * (p * p - q * q);
}

bool K2Witness::identity_holds() const {
    const Rational p2 = p * p;
    const Rational q2 = q * q;
    return power(p2 + q2, 4) ==
           power(p2 - q2, 4) + power(Rational(2) * p * q, 4) + power(s(), 4) + Rational(2) * power(r, 4);
}

CubicModel k2_model() { return CubicModel(3, 2, -2, 0); }

const WeierstrassForm& k2_form() {
    static const WeierstrassForm form = to_weierstrass(k2_model());
    return form;
}

CurvePoint k2_seed() { return CurvePoint::affine(12L, 36L); }

CurvePoint k2_published_point() { return CurvePoint::affine(Rational(25, 4), Rational(35, 8)); }

K2Witness k2_witness(const CurvePoint& pt) {
    if (!contains(k2_form().curve, pt)) {
        throw Error(Errc::InputOffCurve, pt.str() + " is not on " + k2_form().curve.str());
    }
    const auto [p, r] = point_to_xr(k2_form().map, pt);
    return {p, Rational(1), r};
}

QuarticSolution k2_point_to_solution(const CurvePoint& pt) {
    const K2Witness w = k2_witness(pt);
    if (w.r.is_zero()) {
        throw Error(Errc::DegenerateSolution, pt.str() + " is 2-torsion");
    }
    const Rational p2 = w.p * w.p;
    const std::vector<Rational> terms{p2 - Rational(1), Rational(2) * w.p, w.s()};
    if (terms[0].is_zero() || terms[1].is_zero()) {
        throw Error(Errc::DegenerateSolution, pt.str() + " gives a zero term");
    }
    return make_primitive(Variant::ThreePlus, 2, terms, w.r, p2 + Rational(1));
}

std::vector<GeneratedSolution> k2_generate(std::size_t count, std::size_t max_digits) {
    if (count < 1) {
        throw Error(Errc::InvalidArgument, "count must be >= 1");
    }
    const Curve& curve = k2_form().curve;
    std::vector<GeneratedSolution> out;
    CurvePoint multiple = k2_seed();
    for (std::uint64_t n = 1; out.size() < count; ++n) {
        if (n > 1) {
            multiple = add(curve, multiple, k2_seed());
        }
        QuarticSolution sol;
        try {
            sol = k2_point_to_solution(multiple);
        } catch (const Error& e) {
            if (e.code() == Errc::DegenerateSolution) {
                continue;
            }
            throw;
        }
        if (decimal_digits(sol.g) > max_digits) {
            break;
        }
        out.push_back({std::move(sol), Provenance{"three_plus/2:pq-identity", n, multiple, 1, false}});
    }
    if (out.empty()) {
        throw Error(Errc::DigitBudgetExhausted, "three_plus/2: nothing within the digit budget");
    }
    return out;
}

ParamFamily k2_family() {
    return {"k2-repaired", 2, Variant::FivePlus,
            {Quadratic{6, -20, -16}, Quadratic{-16, -12, 10}, Quadratic{10, 32, 6}},
            {32, 29}, 12, 37, true};
}

ParamFamily k5_family() {
    return {"k5-repaired", 5, Variant::FivePlus,
            {Quadratic{-26, -44, 4}, Quadratic{22, -8, -26}, Quadratic{4, 52, 22}},
            {7, 28}, 14, 35, true};
}

ParamFamily k2_family_as_printed() {
    return {"k2-as-printed", 2, Variant::FivePlus,
            {Quadratic{6, -20, -16}, Quadratic{-16, -12, -10}, Quadratic{-10, -32, -6}},
            {32, 29}, 1, 37, false};
}

ParamFamily family_for(int k) {
    if (k == 2) {
        return k2_family();
    }
    if (k == 5) {
        return k5_family();
    }
    throw Error(Errc::UnknownConfig, "no parametric family for k=" + std::to_string(k));
}

QuarticSolution family_terms(const ParamFamily& fam, const Integer& n) {
    const Integer u = n * n + n + 1;
    QuarticSolution sol;
    sol.variant = fam.variant;
    sol.k = fam.k;
    for (const auto& q : fam.quadratics) {
        sol.terms.push_back(q.eval(n));
    }
    for (const auto& m : fam.fixed_multipliers) {
        sol.terms.push_back(m * u);
    }
    sol.f = fam.f_mult * u;
    sol.g = fam.g_mult * u;
    return sol;
}

QuarticSolution family_eval(const ParamFamily& fam, const Integer& n) {
    const QuarticSolution raw = family_terms(fam, n);
    std::vector<Rational> terms(raw.terms.begin(), raw.terms.end());
    return make_primitive(fam.variant, fam.k, terms, raw.f, raw.g);
}

bool verify_family(const ParamFamily& fam) {
    if (fam.fixed_multipliers.size() + 3 != term_count(fam.variant)) {
        return false;
    }
    const UniPoly q1 = fam.quadratics[0].poly();
    const UniPoly q2 = fam.quadratics[1].poly();
    const UniPoly q3 = fam.quadratics[2].poly();
    if (!(q1 + q2 + q3).is_zero()) {
        return false;
    }
    // 2 m^2 = g^4 - sum fixed^4 - k f^4
    Integer twice_m2 = power(fam.g_mult, 4) - fam.k * power(fam.f_mult, 4);
    for (const auto& m : fam.fixed_multipliers) {
        twice_m2 -= power(m, 4);
    }
    if (twice_m2 <= 0 || twice_m2 % 2 != 0) {
        return false;
    }
    const auto m = isqrt_exact(twice_m2 / 2);
    if (!m) {
        return false;
    }
    const UniPoly u{1, 1, 1};
    return (q1 * q1 + q1 * q2 + q2 * q2 - u.pow(2).scaled(Rational(*m))).is_zero();
}

std::string_view identity_name(BivariateIdentity which) {
    return which == BivariateIdentity::Carmichael ? "carmichael" : "k4-a-plus-b";
}

bool identity_holds_at(BivariateIdentity which, const Integer& a, const Integer& b) {
    if (which == BivariateIdentity::Carmichael) {
        // (a^4 - 2b^4)^4 + (2a^3 b)^4 + 4 (2ab^3)^4 = (a^4 + 2b^4)^4
        const Integer a4 = power(a, 4);
        const Integer b4 = power(b, 4);
        return power(Integer(a4 - 2 * b4), 4) + power(Integer(2 * power(a, 3) * b), 4) +
                   4 * power(Integer(2 * a * power(b, 3)), 4) ==
               power(Integer(a4 + 2 * b4), 4);
    }
    // (2p^2 - 2q^2)^4 + (2q^2 + 4pq)^4 + (2p^2 + 4pq)^4 + 4 (p^2 + pq + q^2)^4 = [6 (p^2 + pq + q^2)^2]^2
    const Integer& p = a;
    const Integer& q = b;
    const Integer w = p * p + p * q + q * q;
    return power(Integer(2 * p * p - 2 * q * q), 4) + power(Integer(2 * q * q + 4 * p * q), 4) +
               power(Integer(2 * p * p + 4 * p * q), 4) + 4 * power(w, 4) ==
           power(Integer(6 * w * w), 2);
}

bool grid_identity_check(BivariateIdentity which, int span) {
    if (span < 9) {
        throw Error(Errc::InvalidArgument, "grid span must be >= 9");
    }
    for (int a = -(span - 1); a <= span - 1; ++a) {
        for (int b = -(span - 1); b <= span - 1; ++b) {
            if (!identity_holds_at(which, a, b)) {
                return false;
            }
        }
    }
    return true;
}

QuarticSolution k14_witness() {
    QuarticSolution sol{Variant::ThreePlus, 14, {4, 11, 15}, 1, 16};
    if (sol.terms[0] + sol.terms[1] != sol.terms[2] ||
        three_quartic_square(sol.terms[0], sol.terms[1]) != power(sol.g, 4) - 14 * power(sol.f, 4) ||
        !verify(sol)) {
        throw std::logic_error("k=14 witness failed its own checks");
    }
    return sol;
}

}  // namespace quartic
