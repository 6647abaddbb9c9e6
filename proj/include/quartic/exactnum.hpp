#pragma once

// Exact integer and rational arithmetic plus the small number-theoretic
// helpers the rest of the library leans on. Integers are GMP mpz values;
// Rational wraps mpq and is kept in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "quartic/error.hpp"

namespace quartic {

using Integer = mpz_class;

/// Parses an optionally signed decimal integer. No whitespace, no exponents.
Integer parse_integer(std::string_view text);
std::string to_decimal(const Integer& value);

Integer power(const Integer& base, unsigned exponent);

class Rational {
public:
    Rational() = default;
    Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& value) : value_(value) {}  // NOLINT(google-explicit-constructor)
    // Unevaluated mpz expressions such as a * b.
    template <class Expr>
    Rational(const __gmp_expr<mpz_t, Expr>& value) : value_(Integer(value)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den);

    /// Accepts "p" or "p/q".
    static Rational parse(std::string_view text);

    Integer num() const { return value_.get_num(); }
    Integer den() const { return value_.get_den(); }

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_integer() const { return value_.get_den() == 1; }

    Rational abs() const;
    Rational inverse() const;

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    const mpq_class& raw() const { return value_; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a);

    Rational& operator+=(const Rational& other) { return *this = *this + other; }
    Rational& operator-=(const Rational& other) { return *this = *this - other; }
    Rational& operator*=(const Rational& other) { return *this = *this * other; }
    Rational& operator/=(const Rational& other) { return *this = *this / other; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    explicit Rational(mpq_class value) : value_(std::move(value)) {}

    mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

Rational power(const Rational& base, unsigned exponent);

/// Nonnegative gcd of all entries; gcd_all({0, n}) = |n|. Empty input is rejected.
Integer gcd_all(std::span<const Integer> values);
/// Positive lcm of all entries. Zero entries and empty input are rejected.
Integer lcm_all(std::span<const Integer> values);

/// Exact square root, or nullopt when n is not a perfect square. n < 0 is rejected.
std::optional<Integer> isqrt_exact(const Integer& n);

/// Exact square root of a rational, or nullopt. Negative input yields nullopt.
std::optional<Rational> rational_sqrt(const Rational& q);

struct SquarefreeSplit {
    Integer content;  // squarefree
    Integer root;     // > 0
};

/// n = content * root^2 with content squarefree. Requires n > 0.
///
/// Trial division runs over the primes below 10^6; a leftover cofactor is
/// only split further when it is itself a perfect square. Inputs whose
/// cofactor above that bound is p^2*q with p, q > 10^6 are not fully split.
SquarefreeSplit squarefree_split(const Integer& n);

/// Largest lambda > 0 with lambda^4 | A and lambda^6 | B. A zero coefficient
/// imposes no condition. (0, 0) is rejected.
Integer lambda_reduce(const Integer& a, const Integer& b);

struct PrimePower {
    Integer prime;
    unsigned exponent;
};

/// Trial-division factorization of |n| over primes below 10^6. A leftover
/// cofactor greater than one is returned as a final entry with exponent 1
/// even when it is composite. n = 0 is rejected.
std::vector<PrimePower> factor_small(const Integer& n);

/// Primes below 10^6, computed once.
std::span<const std::uint32_t> small_primes();

}  // namespace quartic
