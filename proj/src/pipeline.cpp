#include "quartic/pipeline.hpp"

#include <algorithm>
#include <sstream>

namespace quartic {

std::vector<Integer> QuarticSolution::entries() const {
    std::vector<Integer> out(terms);
    out.push_back(f);
    out.push_back(g);
    return out;
}

bool QuarticSolution::has_zero_term() const {
    const auto all = entries();
    return std::any_of(all.begin(), all.end(), [](const Integer& v) { return v == 0; });
}

bool QuarticSolution::same_multiset(const QuarticSolution& other) const {
    if (variant != other.variant || k != other.k || f != other.f || g != other.g) {
        return false;
    }
    auto lhs = terms;
    auto rhs = other.terms;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

std::string QuarticSolution::str() const {
    std::ostringstream os;
    for (const auto& t : terms) {
        os << to_decimal(t) << "^4 + ";
    }
    os << k << "*" << to_decimal(f) << "^4 = " << to_decimal(g) << "^4";
    return os.str();
}

std::size_t decimal_digits(const Integer& n) {
    const std::string s = to_decimal(abs(n));
    return s.size();
}

QuarticSolution make_primitive(Variant variant, int k, std::span<const Rational> terms, const Rational& f,
                               const Rational& g) {
    std::vector<Rational> all(terms.begin(), terms.end());
    all.push_back(f);
    all.push_back(g);
    std::vector<Integer> dens;
    for (const auto& v : all) {
        dens.push_back(v.den());
    }
    const Rational scale(lcm_all(dens));
    std::vector<Integer> ints;
    for (const auto& v : all) {
        ints.push_back(abs((v * scale).num()));
    }
    const Integer common = gcd_all(ints);
    if (common == 0) {
        throw Error(Errc::DegenerateSolution, "all entries are zero");
    }
    for (auto& v : ints) {
        v /= common;
    }
    QuarticSolution sol;
    sol.variant = variant;
    sol.k = k;
    sol.g = ints.back();
    ints.pop_back();
    sol.f = ints.back();
    ints.pop_back();
    sol.terms = std::move(ints);
    return sol;
}

bool satisfies_equation(const QuarticSolution& sol) {
    Integer lhs = sol.k * power(sol.f, 4);
    for (const auto& t : sol.terms) {
        lhs += power(t, 4);
    }
    return lhs == power(sol.g, 4);
}

bool verify(const QuarticSolution& sol) {
    if (sol.terms.size() != term_count(sol.variant)) {
        return false;
    }
    const auto all = sol.entries();
    return satisfies_equation(sol) && gcd_all(all) == 1;
}

QuarticSolution scaled(const QuarticSolution& sol, const Integer& t) {
    if (t <= 0) {
        throw Error(Errc::InvalidArgument, "scale factor must be positive");
    }
    QuarticSolution out = sol;
    for (auto& v : out.terms) {
        v *= t;
    }
    out.f *= t;
    out.g *= t;
    return out;
}

FamilySolver::FamilySolver(FamilyConfig cfg)
    : cfg_(std::move(cfg)), model_(build_model(cfg_)), form_(to_weierstrass(model_)) {}

QuarticSolution FamilySolver::solution_at(const CurvePoint& p) const {
    if (p.is_infinity()) {
        throw Error(Errc::PointAtInfinity, "no solution at the identity");
    }
    if (!contains(form_.curve, p)) {
        throw Error(Errc::InputOffCurve, p.str() + " is not on " + form_.curve.str());
    }
    const auto [x, r] = point_to_xr(form_.map, p);
    const Sextuple& s = cfg_.sextuple;
    const Rational x2 = x * x;

    std::vector<Rational> terms{Rational(s.c) * x2 + Rational(s.d), Rational(s.e) * x + Rational(s.f)};
    for (const auto& m : cfg_.multipliers) {
        terms.push_back(m * r);
    }
    const Rational g = Rational(s.a) * x2 + Rational(s.b);
    if (r.is_zero() || g.is_zero() ||
        std::any_of(terms.begin(), terms.end(), [](const Rational& t) { return t.is_zero(); })) {
        throw Error(Errc::DegenerateSolution, cfg_.id() + " at " + p.str() + " has a zero term");
    }
    return make_primitive(cfg_.variant, cfg_.k, terms, r, g);
}

std::vector<GeneratedSolution> FamilySolver::generate(std::size_t count, std::size_t max_digits) const {
    return generate_from(cfg_.seed, count, max_digits);
}

std::vector<GeneratedSolution> FamilySolver::generate_from(const CurvePoint& start, std::size_t count,
                                                           std::size_t max_digits) const {
    if (count < 1) {
        throw Error(Errc::InvalidArgument, "count must be >= 1");
    }
    std::vector<GeneratedSolution> out;
    CurvePoint multiple = start;
    for (std::uint64_t n = 1; out.size() < count; ++n) {
        if (n > 1) {
            multiple = add(form_.curve, multiple, start);
        }
        if (multiple.is_infinity()) {
            break;  // torsion start point
        }
        QuarticSolution sol;
        try {
            sol = solution_at(multiple);
        } catch (const Error& e) {
            if (e.code() == Errc::DegenerateSolution) {
                continue;
            }
            throw;
        }
        if (decimal_digits(sol.g) > max_digits) {
            break;
        }
        out.push_back({std::move(sol), Provenance{cfg_.id(), n, multiple, cfg_.branch, false}});
    }
    if (out.empty()) {
        throw Error(Errc::DigitBudgetExhausted,
                    cfg_.id() + ": no solution within " + std::to_string(max_digits) + " digits");
    }
    return out;
}

QuarticSolution point_to_solution(const FamilyConfig& cfg, const CurvePoint& p) {
    return FamilySolver(cfg).solution_at(p);
}

std::vector<GeneratedSolution> generate(const FamilyConfig& cfg, std::size_t count, std::size_t max_digits) {
    return FamilySolver(cfg).generate(count, max_digits);
}

}  // namespace quartic
