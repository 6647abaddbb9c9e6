#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/curve.hpp"
#include "quartic/model.hpp"
#include "quartic/poly.hpp"

namespace quartic {

/// FivePlus: A^4+B^4+C^4+D^4+E^4 + k F^4 = G^4.
/// ThreePlus: A^4+B^4+C^4 + k D^4 = E^4.
enum class Variant { FivePlus, ThreePlus };

std::string_view variant_name(Variant v);
/// Accepts "five_plus" / "three_plus" (also "five", "three", "5", "3").
Variant parse_variant(std::string_view text);
/// Number of unit-coefficient terms: 5 or 3.
std::size_t term_count(Variant v);
/// Number of multipliers a config carries: 3 (s,t,u) or 1 (s).
std::size_t multiplier_count(Variant v);

/// Substitution G = a x^2 + b, A = c x^2 + d, B = e x + f.
struct Sextuple {
    Integer a, b, c, d, e, f;

    /// (a x^2 + b)^4 - (c x^2 + d)^4 - (e x + f)^4
    UniPoly difference() const;
    std::string str() const;

    friend bool operator==(const Sextuple&, const Sextuple&) = default;
};

struct FamilyConfig {
    Variant variant = Variant::FivePlus;
    int k = 0;
    Sextuple sextuple;
    std::vector<Rational> multipliers;
    int branch = 1;
    CurvePoint seed = CurvePoint::infinity();
    /// The published curve for this config, when there is one.
    std::optional<Curve> printed_curve;

    /// "five_plus/7", with a "-" suffix for the negative branch.
    std::string id() const;
    /// sum of multipliers^4 plus k
    Rational multiplier_sum() const;
};

/// Square decomposition of the sextuple difference polynomial.
SquareForm derive_identity(const Sextuple& s);

/// m r^2 = branch * Q(x) with m = sqrt(M / content), cleared to coprime
/// integers. Throws NotASquare when M / content is not a rational square.
CubicModel build_model(const FamilyConfig& cfg);

/// The thirteen configurations, in (variant, k) order.
const std::vector<FamilyConfig>& registry();

const FamilyConfig* lookup(Variant variant, int k);
const FamilyConfig* lookup(std::span<const FamilyConfig> configs, Variant variant, int k);

/// Why (variant, k) has no config, or nullopt if it does.
std::optional<std::string> missing_config_reason(Variant variant, int k);

/// All multiplier tuples s >= t >= u >= 1 (or single s for ThreePlus) with
/// s <= bound and (sum s_i^4 + k) / content a rational square, in
/// ascending lexicographic order of (s, t, u).
std::vector<std::vector<Integer>> search_multipliers(Variant variant, int k, const Rational& content, int bound);

}  // namespace quartic
