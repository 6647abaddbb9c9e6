#include <random>

#include "doctest.h"
#include "quartic/error.hpp"
#include "quartic/poly.hpp"

using namespace quartic;

namespace {

// Binomial expansion of (a x^m + b)^n, the oracle for pow on binomials.
UniPoly binomial_power(long a, unsigned m, long b, unsigned n) {
    std::vector<Rational> c(m * n + 1, Rational(0));
    Integer choose = 1;
    for (unsigned i = 0; i <= n; ++i) {
        c[m * i] = Rational(choose * power(Integer(a), i) * power(Integer(b), n - i));
        choose = choose * (n - i) / (i + 1);
    }
    return UniPoly(c);
}

UniPoly random_poly(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<long> coef(-20, 20);
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Rational> c;
    for (int i = deg(rng); i >= 0; --i) c.emplace_back(coef(rng));
    return UniPoly(c);
}

}  // namespace

TEST_CASE("construction trims and reports degree") {
    CHECK(UniPoly{}.degree() == -1);
    CHECK(UniPoly{0, 0, 0}.is_zero());
    CHECK(UniPoly{1, 2, 0}.degree() == 1);
    CHECK(UniPoly{8, 8, 0, 32}.str() == "32x^3 + 8x + 8");
    CHECK(UniPoly{0, -2, 0, 8}.str() == "8x^3 - 2x");
    CHECK(UniPoly{}.str() == "0");
}

TEST_CASE("pow and arithmetic") {
    const UniPoly g{3, 0, 4};  // 4x^2 + 3
    CHECK(g.pow(2) == UniPoly{9, 0, 24, 0, 16});
    CHECK(g.pow(4) == binomial_power(4, 2, 3, 4));
    const UniPoly a{-1, 0, 4};  // 4x^2 - 1
    const UniPoly b{-2, 4};     // 4x - 2
    CHECK(g.pow(4) - (a.pow(4) + b.pow(4)) == UniPoly{64, 128, 64, 512, 512, 0, 1024});
    CHECK(UniPoly{8, 8, 0, 32}.pow(2) == UniPoly{64, 128, 64, 512, 512, 0, 1024});
    CHECK((UniPoly{0, 1} * UniPoly{}).is_zero());
    CHECK(g.pow(0) == UniPoly{1});
}

TEST_CASE("ring laws and evaluation homomorphism") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<long> xs(-50, 50);
    for (int i = 0; i < 200; ++i) {
        const UniPoly p = random_poly(rng, 5), q = random_poly(rng, 5), r = random_poly(rng, 3);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p - p == UniPoly{});
        CHECK(-(-p) == p);
        if (!p.is_zero() && !q.is_zero()) {
            CHECK((p * q).degree() == p.degree() + q.degree());
        }
        const Rational x(Integer(xs(rng)), Integer(xs(rng) == 0 ? 1 : 7));
        CHECK((p * q).eval(x) == p.eval(x) * q.eval(x));
        CHECK((p + q).eval(x) == p.eval(x) + q.eval(x));
        CHECK(p.pow(3).eval(x) == power(p.eval(x), 3));
    }
}

TEST_CASE("eval") {
    const UniPoly p{4, 4, 0, 16};
    const Rational x(Integer(145), Integer(239));
    const Rational r(Integer(11684), Integer(57121));
    CHECK(p.eval(x) == Rational(239) * r * r);
    CHECK(p.eval(0) == Rational(4));
    CHECK(UniPoly{8, 8, 0, 32}.eval(Rational(Integer(-1), Integer(2))) == Rational(0));
}

TEST_CASE("extract_square") {
    const UniPoly p1{64, 128, 64, 512, 512, 0, 1024};
    CHECK(extract_square(p1) == SquareForm{Rational(1), UniPoly{8, 8, 0, 32}});

    // Square class of 2; the root absorbs the rest. (8, 8x^3 - 2x) names the
    // same decomposition with a non-squarefree content.
    const UniPoly p2{0, 0, 32, 0, -256, 0, 512};
    const SquareForm f2 = extract_square(p2);
    CHECK(f2 == SquareForm{Rational(2), UniPoly{0, -4, 0, 16}});
    CHECK(UniPoly{0, -2, 0, 8}.pow(2).scaled(8) == p2);

    const UniPoly p3 = UniPoly{-8, 8, 0, 32}.pow(2);
    CHECK(extract_square(p3) == SquareForm{Rational(1), UniPoly{-8, 8, 0, 32}});

    CHECK_THROWS_AS(extract_square(UniPoly{1, 0, 1}), Error);
    try {
        extract_square(UniPoly{1, 0, 1});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotASquareForm);
    }
    try {
        extract_square(UniPoly{});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::InvalidArgument);
    }
}

TEST_CASE("extract_square recovers c * q^2 for random inputs") {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> cs(1, 60);
    std::uniform_int_distribution<long> ds(1, 9);
    for (int i = 0; i < 200; ++i) {
        UniPoly q = random_poly(rng, 4);
        if (q.is_zero()) continue;
        const Rational c(Integer(cs(rng)), Integer(ds(rng)));
        const UniPoly p = q.pow(2).scaled(c);
        const SquareForm f = extract_square(p);
        CHECK(f.root.pow(2).scaled(f.content) == p);
        CHECK(f.content.is_integer());
        CHECK(f.content.sign() > 0);
        CHECK(f.root.leading().sign() > 0);
        // content is squarefree and in the same square class as c
        const auto split = squarefree_split(f.content.num());
        CHECK(split.root == 1);
        CHECK(rational_sqrt(c / f.content).has_value());
    }
}
