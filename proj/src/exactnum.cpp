#include "quartic/exactnum.hpp"

#include <algorithm>
#include <sstream>

namespace quartic {

std::string_view errc_name(Errc code) noexcept {
    switch (code) {
        case Errc::InvalidArgument: return "InvalidArgument";
        case Errc::ParseError: return "ParseError";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotASquareForm: return "NotASquareForm";
        case Errc::NotASquare: return "NotASquare";
        case Errc::InputOffCurve: return "InputOffCurve";
        case Errc::SingularCurve: return "SingularCurve";
        case Errc::PointAtInfinity: return "PointAtInfinity";
        case Errc::ModelRelationViolated: return "ModelRelationViolated";
        case Errc::DegenerateSolution: return "DegenerateSolution";
        case Errc::DigitBudgetExhausted: return "DigitBudgetExhausted";
        case Errc::UnknownConfig: return "UnknownConfig";
    }
    return "Unknown";
}

Integer parse_integer(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
        digits.remove_prefix(1);
    }
    if (digits.empty() ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw Error(Errc::ParseError, "not a decimal integer: '" + std::string(text) + "'");
    }
    Integer value;
    const std::string owned(text.front() == '+' ? text.substr(1) : text);
    value.set_str(owned, 10);
    return value;
}

std::string to_decimal(const Integer& value) { return value.get_str(10); }

Integer power(const Integer& base, unsigned exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

Rational::Rational(const Integer& num, const Integer& den) {
    if (den == 0) {
        throw Error(Errc::DivisionByZero, "rational with zero denominator");
    }
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text));
    }
    return Rational(parse_integer(text.substr(0, slash)), parse_integer(text.substr(slash + 1)));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::inverse() const {
    if (is_zero()) {
        throw Error(Errc::DivisionByZero, "inverse of zero");
    }
    return Rational(den(), num());
}

std::string Rational::str() const {
    if (is_integer()) {
        return to_decimal(num());
    }
    return to_decimal(num()) + "/" + to_decimal(den());
}

Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ + b.value_)); }
Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ - b.value_)); }
Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.value_ * b.value_)); }
Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) {
        throw Error(Errc::DivisionByZero, "division by zero");
    }
    return Rational(mpq_class(a.value_ / b.value_));
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

Rational power(const Rational& base, unsigned exponent) {
    return Rational(power(base.num(), exponent), power(base.den(), exponent));
}

Integer gcd_all(std::span<const Integer> values) {
    if (values.empty()) {
        throw Error(Errc::InvalidArgument, "gcd_all of an empty list");
    }
    Integer g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

Integer lcm_all(std::span<const Integer> values) {
    if (values.empty()) {
        throw Error(Errc::InvalidArgument, "lcm_all of an empty list");
    }
    Integer l = 1;
    for (const auto& v : values) {
        if (v == 0) {
            throw Error(Errc::InvalidArgument, "lcm_all with a zero entry");
        }
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_mpz_t());
    }
    return l;
}

std::optional<Integer> isqrt_exact(const Integer& n) {
    if (n < 0) {
        throw Error(Errc::InvalidArgument, "isqrt_exact of a negative number");
    }
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer root;
    mpz_sqrt(root.get_mpz_t(), n.get_mpz_t());
    return root;
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (q.sign() < 0) {
        return std::nullopt;
    }
    auto num = isqrt_exact(q.num());
    if (!num) {
        return std::nullopt;
    }
    auto den = isqrt_exact(q.den());
    if (!den) {
        return std::nullopt;
    }
    return Rational(*num, *den);
}

std::span<const std::uint32_t> small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        out.reserve(78'498);
        for (std::uint32_t i = 2; i < limit; ++i) {
            if (composite[i]) {
                continue;
            }
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < limit; j += i) {
                composite[j] = true;
            }
        }
        return out;
    }();
    return primes;
}

namespace {

// Strips every factor p from n, returning the multiplicity.
unsigned strip(Integer& n, unsigned long p) {
    unsigned count = 0;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p) != 0) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++count;
    }
    return count;
}

}  // namespace

std::vector<PrimePower> factor_small(const Integer& n) {
    if (n == 0) {
        throw Error(Errc::InvalidArgument, "factor_small of zero");
    }
    Integer rest = abs(n);
    std::vector<PrimePower> out;
    for (const std::uint32_t p : small_primes()) {
        if (Integer(p) * p > rest) {
            break;
        }
        if (const unsigned e = strip(rest, p); e > 0) {
            out.push_back({Integer(p), e});
        }
    }
    if (rest > 1) {
        out.push_back({rest, 1});
    }
    return out;
}

SquarefreeSplit squarefree_split(const Integer& n) {
    if (n <= 0) {
        throw Error(Errc::InvalidArgument, "squarefree_split requires n > 0");
    }
    Integer rest = n;
    Integer content = 1;
    Integer root = 1;
    for (const std::uint32_t p : small_primes()) {
        if (Integer(p) * p > rest) {
            break;
        }
        const unsigned e = strip(rest, p);
        root *= power(Integer(p), e / 2);
        if (e % 2 == 1) {
            content *= p;
        }
    }
    if (rest > 1) {
        if (auto r = isqrt_exact(rest)) {
            root *= *r;
        } else {
            content *= rest;
        }
    }
    return {content, root};
}

Integer lambda_reduce(const Integer& a, const Integer& b) {
    if (a == 0 && b == 0) {
        throw Error(Errc::InvalidArgument, "lambda_reduce of (0, 0)");
    }
    Integer ra = abs(a);
    Integer rb = abs(b);
    Integer lambda = 1;
    for (const std::uint32_t p : small_primes()) {
        const Integer p4 = power(Integer(p), 4);
        if ((a != 0 && p4 > ra) || (b != 0 && p4 * p * p > rb)) {
            break;
        }
        const unsigned ea = a == 0 ? ~0u : strip(ra, p);
        const unsigned eb = b == 0 ? ~0u : strip(rb, p);
        lambda *= power(Integer(p), std::min(ea / 4, eb / 6));
    }
    // Cofactors with all prime factors above the sieve: only the case of a
    // single shared perfect power is recognised.
    if (a != 0 && ra > 1) {
        Integer w;
        if (mpz_root(w.get_mpz_t(), ra.get_mpz_t(), 4) != 0 && w > 1 &&
            (b == 0 || mpz_divisible_p(rb.get_mpz_t(), power(w, 6).get_mpz_t()) != 0)) {
            lambda *= w;
        }
    } else if (a == 0 && rb > 1) {
        Integer w;
        if (mpz_root(w.get_mpz_t(), rb.get_mpz_t(), 6) != 0 && w > 1) {
            lambda *= w;
        }
    }
    return lambda;
}

}  // namespace quartic
