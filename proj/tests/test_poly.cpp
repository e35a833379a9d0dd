#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mmq/poly.hpp"

using namespace mmq;

namespace {

Poly t() { return Poly::t(); }

Poly random_poly(std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> coeff(-4, 4), exp(0, 3), nvars(0, 2);
    VarId pool[3] = {VarId::t(), VarId::named("x"), VarId::weight("u")};
    Poly p;
    for (int term = 0; term < 4; ++term) {
        Monomial m;
        for (int v = 0; v <= nvars(rng); ++v)
            m = m * Monomial::var(pool[v], exp(rng));
        p += Poly::term(m, coeff(rng));
    }
    return p;
}

} // namespace

TEST_CASE("constants and identities")
{
    Poly zero;
    CHECK(zero.is_zero());
    CHECK(zero.text() == "0");

    Poly p = t() * t() + Poly(3) * t();
    CHECK(p + zero == p);
    CHECK(p * Poly(1) == p);
    CHECK((p - p).is_zero());
}

TEST_CASE("schoolbook expansion")
{
    Poly p = (t() + Poly(1)) * (t() + Poly(1));
    CHECK(p.text() == "t^2 + 2*t + 1");
}

TEST_CASE("the worked activity computation")
{
    // 4(t/2+1)^2 + 12(t/2+1) = t^2 + 10t + 16
    Poly half_t = t() * Rational(1, 2) + Poly(1);
    Poly q = half_t.pow(2) * Rational(4) + half_t * Rational(12);
    CHECK(q.text() == "t^2 + 10*t + 16");

    // Exactness of intermediate halves: (t/2+1)^2 has leading coefficient 1/4.
    Poly sq = half_t.pow(2);
    CHECK(sq.terms().begin()->second == Rational(1, 4));
}

TEST_CASE("evaluation and specialization")
{
    Poly q = t() * t() + Poly(10) * t() + Poly(16);
    CHECK(q.evaluated({{VarId::t(), 2}}) == 40);

    Poly weighted = Poly::var(VarId::weight("a")) * t() + Poly::var(VarId::weight("b"));
    Poly unit = weighted.specialized({{VarId::weight("a"), 1}, {VarId::weight("b"), 1}});
    CHECK(unit == t() + Poly(1));

    CHECK_THROWS_AS((void)weighted.evaluated({{VarId::t(), 1}}), std::invalid_argument);

    // Partial specialization keeps the remaining variables symbolic.
    Poly part = weighted.specialized({{VarId::weight("a"), Rational(1, 2)}});
    CHECK(part == t() * Rational(1, 2) + Poly::var(VarId::weight("b")));
}

TEST_CASE("substitution clears square roots")
{
    Poly x = Poly::var(VarId::named("x"));
    Poly s = Poly::var(VarId::named("s"));
    Poly p = x * x - Poly(1);
    Poly sub = p.substituted(VarId::named("x"), s * s + Poly(1));
    CHECK(sub == s.pow(4) + Poly(2) * s.pow(2));
}

TEST_CASE("ring laws on random polynomials")
{
    std::mt19937_64 rng(7);
    for (int round = 0; round < 200; ++round) {
        Poly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("canonical text is injective")
{
    std::mt19937_64 rng(8);
    for (int round = 0; round < 200; ++round) {
        Poly a = random_poly(rng), b = random_poly(rng);
        CHECK((a == b) == (a.text() == b.text()));
    }
}

TEST_CASE("rendering")
{
    Poly p = Poly(2) * t() * Poly::var(VarId::named("x")) - Poly(1);
    CHECK(p.text() == "2*t*x - 1");
    CHECK((t() * Rational(-1, 2)).text() == "-1/2*t");
    CHECK(Poly(Rational(3, 4)).text() == "3/4");

    // Display order: t-powers first, then weight variables, then named.
    Poly mix = Poly::var(VarId::named("y")) + t() + Poly::var(VarId::weight("a"));
    CHECK(mix.text() == "t + x_a + y");
}
