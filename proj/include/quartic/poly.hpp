#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "quartic/exactnum.hpp"

namespace quartic {

/// Dense univariate polynomial over the rationals. coeffs()[i] is the
/// coefficient of x^i; trailing zeros are trimmed so the zero polynomial
/// has no coefficients at all.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    std::span<const Rational> coeffs() const { return coeffs_; }
    /// Coefficient of x^i, zero past the degree.
    Rational coeff(std::size_t i) const;
    Rational leading() const;

    Rational eval(const Rational& x) const;

    UniPoly pow(unsigned n) const;
    UniPoly scaled(const Rational& factor) const;

    /// Human-readable form, highest degree first, e.g. "32x^3 + 8x + 8".
    std::string str() const;

    friend UniPoly operator+(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator*(const UniPoly& p, const UniPoly& q);
    friend UniPoly operator-(const UniPoly& p);
    friend bool operator==(const UniPoly& p, const UniPoly& q) = default;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

struct SquareForm {
    Rational content;
    UniPoly root;

    friend bool operator==(const SquareForm&, const SquareForm&) = default;
};

/// Decomposes p = content * root^2.
///
/// The square class of the content is fixed by p; the representative is the
/// squarefree positive integer in that class, and root is whatever remains,
/// with a positive leading coefficient. Throws NotASquareForm when p is not
/// a constant multiple of a square, and InvalidArgument for p = 0.
SquareForm extract_square(const UniPoly& p);

}  // namespace quartic
