#include "quartic/poly.hpp"

#include <algorithm>
#include <sstream>

namespace quartic {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (const long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    trim();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> coeffs(degree + 1);
    coeffs[degree] = c;
    return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

Rational UniPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(); }

Rational UniPoly::leading() const { return coeffs_.empty() ? Rational() : coeffs_.back(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

UniPoly UniPoly::pow(unsigned n) const {
    UniPoly result = constant(1);
    UniPoly base = *this;
    while (n > 0) {
        if (n & 1u) {
            result = result * base;
        }
        n >>= 1;
        if (n > 0) {
            base = base * base;
        }
    }
    return result;
}

UniPoly UniPoly::scaled(const Rational& factor) const {
    std::vector<Rational> out(coeffs_);
    for (auto& c : out) {
        c *= factor;
    }
    return UniPoly(std::move(out));
}

std::string UniPoly::str() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) {
                os << "-";
            }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0 || mag != Rational(1)) {
            os << mag.str();
        }
        if (i >= 1) {
            os << "x";
        }
        if (i >= 2) {
            os << "^" << i;
        }
    }
    return os.str();
}

UniPoly operator+(const UniPoly& p, const UniPoly& q) {
    std::vector<Rational> out(std::max(p.coeffs_.size(), q.coeffs_.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = p.coeff(i) + q.coeff(i);
    }
    return UniPoly(std::move(out));
}

UniPoly operator-(const UniPoly& p) { return p.scaled(-1); }

UniPoly operator-(const UniPoly& p, const UniPoly& q) { return p + (-q); }

UniPoly operator*(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) {
        return {};
    }
    std::vector<Rational> out(p.coeffs_.size() + q.coeffs_.size() - 1);
    for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
        if (p.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < q.coeffs_.size(); ++j) {
            out[i + j] += p.coeffs_[i] * q.coeffs_[j];
        }
    }
    return UniPoly(std::move(out));
}

SquareForm extract_square(const UniPoly& p) {
    if (p.is_zero()) {
        throw Error(Errc::InvalidArgument, "extract_square of the zero polynomial");
    }
    if (p.degree() % 2 != 0) {
        throw Error(Errc::NotASquareForm, "odd degree: " + p.str());
    }
    const Rational lead = p.leading();
    if (lead.sign() < 0) {
        throw Error(Errc::NotASquareForm, "negative leading coefficient: " + p.str());
    }

    // Monic square root of p / lead, matched from the top coefficient down.
    const UniPoly monic = p.scaled(lead.inverse());
    const std::size_t half = static_cast<std::size_t>(p.degree()) / 2;
    std::vector<Rational> root(half + 1);
    root[half] = 1;
    for (std::size_t step = 1; step <= half; ++step) {
        const std::size_t i = half - step;
        Rational cross;
        for (std::size_t j = i + 1; j <= half; ++j) {
            const std::size_t l = half + i - j;
            if (l > i && l <= half) {
                cross += root[j] * root[l];
            }
        }
        root[i] = (monic.coeff(half + i) - cross) / 2;
    }
    const UniPoly monic_root(root);
    if (monic_root * monic_root != monic) {
        throw Error(Errc::NotASquareForm, "not a constant times a square: " + p.str());
    }

    // Rescale the monic root to integer coefficients, then move the
    // non-squarefree part of the remaining constant into the root.
    std::vector<Integer> dens;
    for (const auto& c : monic_root.coeffs()) {
        dens.push_back(c.den());
    }
    const Integer denom = lcm_all(dens);
    std::vector<Integer> nums;
    for (const auto& c : monic_root.coeffs()) {
        nums.push_back((c * Rational(denom)).num());
    }
    const Integer g = gcd_all(nums);
    const Rational to_primitive(denom, g);
    const UniPoly primitive = monic_root.scaled(to_primitive);

    const Rational constant = lead / (to_primitive * to_primitive);
    const SquarefreeSplit split = squarefree_split(constant.num() * constant.den());
    const Rational root_scale(split.root, constant.den());
    return {Rational(split.content), primitive.scaled(root_scale)};
}

}  // namespace quartic
