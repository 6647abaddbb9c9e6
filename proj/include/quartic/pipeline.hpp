#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "quartic/families.hpp"

namespace quartic {

/// sum(terms^4) + k f^4 = g^4, stored primitive with nonnegative entries.
/// Terms keep their structural roles (A, B, C, D, E) rather than being sorted.
struct QuarticSolution {
    Variant variant = Variant::FivePlus;
    int k = 0;
    std::vector<Integer> terms;
    Integer f;
    Integer g;

    /// All entries in order: terms..., f, g.
    std::vector<Integer> entries() const;
    bool has_zero_term() const;
    /// Same k, f, g and the same terms up to order.
    bool same_multiset(const QuarticSolution& other) const;
    /// "a^4 + b^4 + c^4 + k*f^4 = g^4"
    std::string str() const;

    friend bool operator==(const QuarticSolution&, const QuarticSolution&) = default;
};

struct Provenance {
    std::string config;
    /// n for the point n * seed; 0 when the solution is not from a curve.
    std::uint64_t multiple = 0;
    CurvePoint point = CurvePoint::infinity();
    int branch = 1;
    bool repaired_from_paper = false;
};

struct GeneratedSolution {
    QuarticSolution solution;
    Provenance provenance;
};

/// Clears denominators, divides by the common gcd and takes absolute values.
QuarticSolution make_primitive(Variant variant, int k, std::span<const Rational> terms, const Rational& f,
                               const Rational& g);

/// Exact check of the defining equation, nothing else.
bool satisfies_equation(const QuarticSolution& sol);
/// Defining equation, term count for the variant, and gcd of all entries = 1.
bool verify(const QuarticSolution& sol);

/// Every entry multiplied by t > 0.
QuarticSolution scaled(const QuarticSolution& sol, const Integer& t);

constexpr std::size_t kDefaultMaxDigits = 120;

/// A config with its model and curve computed once.
class FamilySolver {
public:
    explicit FamilySolver(FamilyConfig cfg);

    const FamilyConfig& config() const { return cfg_; }
    const CubicModel& model() const { return model_; }
    const Curve& curve() const { return form_.curve; }
    const ModelMap& map() const { return form_.map; }

    /// Back-substitutes a curve point into the quartic. Throws
    /// PointAtInfinity, InputOffCurve or DegenerateSolution (a zero term).
    QuarticSolution solution_at(const CurvePoint& p) const;

    /// Walks n = 1, 2, ... over n * seed, skipping degenerate multiples,
    /// until count solutions are collected or g exceeds max_digits digits.
    /// Throws DigitBudgetExhausted if nothing fits the budget.
    std::vector<GeneratedSolution> generate(std::size_t count, std::size_t max_digits = kDefaultMaxDigits) const;
    /// Same walk from an explicit starting point.
    std::vector<GeneratedSolution> generate_from(const CurvePoint& start, std::size_t count,
                                                 std::size_t max_digits = kDefaultMaxDigits) const;

private:
    FamilyConfig cfg_;
    CubicModel model_;
    WeierstrassForm form_;
};

QuarticSolution point_to_solution(const FamilyConfig& cfg, const CurvePoint& p);
std::vector<GeneratedSolution> generate(const FamilyConfig& cfg, std::size_t count,
                                        std::size_t max_digits = kDefaultMaxDigits);

std::size_t decimal_digits(const Integer& n);

}  // namespace quartic
