#include "quartic/families.hpp"

#include <algorithm>

namespace quartic {

std::string_view variant_name(Variant v) {
    return v == Variant::FivePlus ? "five_plus" : "three_plus";
}

Variant parse_variant(std::string_view text) {
    if (text == "five_plus" || text == "five" || text == "5") {
        return Variant::FivePlus;
    }
    if (text == "three_plus" || text == "three" || text == "3") {
        return Variant::ThreePlus;
    }
    throw Error(Errc::ParseError, "unknown variant '" + std::string(text) + "'");
}

std::size_t term_count(Variant v) { return v == Variant::FivePlus ? 5 : 3; }

std::size_t multiplier_count(Variant v) { return v == Variant::FivePlus ? 3 : 1; }

UniPoly Sextuple::difference() const {
    const UniPoly g(std::vector<Rational>{b, 0L, a});
    const UniPoly big_a(std::vector<Rational>{d, 0L, c});
    const UniPoly big_b(std::vector<Rational>{f, e});
    return g.pow(4) - big_a.pow(4) - big_b.pow(4);
}

std::string Sextuple::str() const {
    return "[" + to_decimal(a) + ", " + to_decimal(b) + ", " + to_decimal(c) + ", " + to_decimal(d) + ", " +
           to_decimal(e) + ", " + to_decimal(f) + "]";
}

std::string FamilyConfig::id() const {
    return std::string(variant_name(variant)) + "/" + std::to_string(k) + (branch < 0 ? "-" : "");
}

Rational FamilyConfig::multiplier_sum() const {
    Rational sum(k);
    for (const auto& m : multipliers) {
        sum += power(m, 4);
    }
    return sum;
}

SquareForm derive_identity(const Sextuple& s) { return extract_square(s.difference()); }

CubicModel build_model(const FamilyConfig& cfg) {
    if (cfg.multipliers.size() != multiplier_count(cfg.variant)) {
        throw Error(Errc::InvalidArgument, cfg.id() + ": wrong number of multipliers");
    }
    if (cfg.branch != 1 && cfg.branch != -1) {
        throw Error(Errc::InvalidArgument, cfg.id() + ": branch must be +1 or -1");
    }
    const SquareForm identity = derive_identity(cfg.sextuple);
    const Rational ratio = cfg.multiplier_sum() / identity.content;
    const auto m = rational_sqrt(ratio);
    if (!m) {
        throw Error(Errc::NotASquare, cfg.id() + ": (sum + k) / content = " + ratio.str() + " is not a square");
    }

    const UniPoly rhs = identity.root.scaled(cfg.branch);
    std::vector<Integer> dens{m->den()};
    for (const auto& c : rhs.coeffs()) {
        dens.push_back(c.den());
    }
    const Rational clear(lcm_all(dens));
    const Integer d = (*m * clear).num();
    const UniPoly cubic = rhs.scaled(clear);

    std::vector<Integer> all{d};
    for (const auto& c : cubic.coeffs()) {
        all.push_back(c.num());
    }
    const Rational shrink(Integer(1), gcd_all(all));
    return CubicModel::from_cubic(d / gcd_all(all), cubic.scaled(shrink));
}

namespace {

FamilyConfig make(Variant variant, int k, Sextuple s, std::vector<Rational> mults, const char* x, const char* y,
                  const char* curve_a, const char* curve_b) {
    FamilyConfig cfg;
    cfg.variant = variant;
    cfg.k = k;
    cfg.sextuple = std::move(s);
    cfg.multipliers = std::move(mults);
    cfg.seed = CurvePoint::affine(Rational::parse(x), Rational::parse(y));
    cfg.printed_curve = Curve(parse_integer(curve_a), parse_integer(curve_b));
    return cfg;
}

}  // namespace

const std::vector<FamilyConfig>& registry() {
    static const std::vector<FamilyConfig> configs = [] {
        const Sextuple main{4, 3, 4, -1, 4, -2};
        const Sextuple odd{4, 1, 4, -1, 4, 0};
        const Sextuple flipped{4, 3, 4, -1, 4, 2};
        constexpr auto five = Variant::FivePlus;
        constexpr auto three = Variant::ThreePlus;
        return std::vector<FamilyConfig>{
            make(five, 1, main, {19L, 17L, 11L}, "580", "23368", "228484", "218430704"),
            make(five, 2, main, {7L, 3L, 2L}, "1/4", "-33/8", "4", "16"),
            make(five, 3, main, {5L, 4L, 2L}, "34", "-352", "900", "54000"),
            make(five, 4, main, {70L, 30L, 20L}, "474", "10656", "10404", "2122416"),
            make(five, 5, odd, {11L, 7L, 5L}, "684407232/2289169", "17682275119320/3463512697", "-2209", "0"),
            make(five, 6, main, {37L, 31L, 11L}, "1720", "828352", "44997264", "603683293824"),
            make(five, 7, main, {5L, 3L, 2L}, "4", "-64", "144", "3456"),
            make(five, 8, main, {4L, 3L, 2L}, "-16316/225", "-941248/3375", "5776", "877952"),
            make(five, 9, flipped, {12L, 10L, 6L}, "569670529240635121336/10878607024914721",
                 "13598002320735074871580564215680/1134644815597146377458481", "512656", "-734123392"),
            make(three, 3, flipped, {Rational(1, 2)}, "36", "176", "784", "-43904"),
            make(three, 7, odd, {47L}, "-2876843001196439/4324112302500",
                 "-94873842643707990383059/8991775327433625000", "-609961", "0"),
            make(three, 8, main, {Rational(239, 13)}, "2088556756/1369", "697479284591232/50653",
                 "18409008087184", "157970349293290458496"),
            make(three, 9, flipped, {2L}, "164", "-2112", "400", "-16000"),
        };
    }();
    return configs;
}

const FamilyConfig* lookup(std::span<const FamilyConfig> configs, Variant variant, int k) {
    const auto it = std::find_if(configs.begin(), configs.end(),
                                 [&](const FamilyConfig& c) { return c.variant == variant && c.k == k; });
    return it == configs.end() ? nullptr : &*it;
}

const FamilyConfig* lookup(Variant variant, int k) { return lookup(registry(), variant, k); }

std::optional<std::string> missing_config_reason(Variant variant, int k) {
    if (lookup(variant, k) != nullptr) {
        return std::nullopt;
    }
    if (variant == Variant::ThreePlus) {
        switch (k) {
            case 1: return "three_plus k=1 has no config (it is the Jacobi-Madden equation, handled elsewhere)";
            case 2: return "three_plus k=2 is solved by the (p,q) identity, not a sextuple config";
            case 4:
            case 6: return "three_plus k=" + std::to_string(k) + ": its curve is reported to have rank zero, so no seed exists";
            case 5: return "three_plus k=5 is omitted: the method produces no usable curve for it";
            default: break;
        }
    }
    return std::string(variant_name(variant)) + " k=" + std::to_string(k) + " has no configuration";
}

std::vector<std::vector<Integer>> search_multipliers(Variant variant, int k, const Rational& content, int bound) {
    if (bound < 1) {
        throw Error(Errc::InvalidArgument, "search bound must be >= 1");
    }
    if (content.sign() <= 0) {
        throw Error(Errc::InvalidArgument, "content must be positive");
    }
    std::vector<Integer> fourth(static_cast<std::size_t>(bound) + 1);
    for (int i = 1; i <= bound; ++i) {
        fourth[static_cast<std::size_t>(i)] = power(Integer(i), 4);
    }
    auto hit = [&](const Integer& sum) { return rational_sqrt(Rational(Integer(sum + k)) / content).has_value(); };

    std::vector<std::vector<Integer>> out;
    for (int s = 1; s <= bound; ++s) {
        const auto& s4 = fourth[static_cast<std::size_t>(s)];
        if (variant == Variant::ThreePlus) {
            if (hit(s4)) {
                out.push_back({Integer(s)});
            }
            continue;
        }
        for (int t = 1; t <= s; ++t) {
            for (int u = 1; u <= t; ++u) {
                if (hit(s4 + fourth[static_cast<std::size_t>(t)] + fourth[static_cast<std::size_t>(u)])) {
                    out.push_back({Integer(s), Integer(t), Integer(u)});
                }
            }
        }
    }
    return out;
}

}  // namespace quartic
