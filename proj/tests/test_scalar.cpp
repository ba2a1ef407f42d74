#include <doctest.h>

#include "test_support.hpp"
#include "twistor/errors.hpp"
#include "twistor/rational_function.hpp"

using namespace twistor;
using twistor::testing::Rng;

namespace {
const RationalFunction m = RationalFunction::m();
const RationalFunction mb = RationalFunction::mb();
const RationalFunction one(1);
RationalFunction fiber_p() { return one + m * mb; }
}  // namespace

TEST_CASE("gaussian rational arithmetic") {
    GaussianRational a = GaussianRational::make(1, 2, 1, 3);  // 1/2 + i/3
    GaussianRational b = GaussianRational::make(-2, 1, 1, 1);
    CHECK(a + b == GaussianRational::make(-3, 2, 4, 3));
    CHECK(a * b * b.inverse() == a);
    CHECK(a.conj().conj() == a);
    CHECK((a * a.conj()).is_real());
    CHECK(GaussianRational::i() * GaussianRational::i() == GaussianRational(-1));
    CHECK_THROWS_AS(GaussianRational(0).inverse(), DivisionByZeroError);
}

TEST_CASE("polynomial ring axioms on random triples") {
    Rng rng(11);
    for (int k = 0; k < 50; ++k) {
        Polynomial a = testing::random_polynomial(rng);
        Polynomial b = testing::random_polynomial(rng);
        Polynomial c = testing::random_polynomial(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("polynomial exact division and gcd") {
    Rng rng(12);
    const Polynomial p = Polynomial(1) + Polynomial::m() * Polynomial::mb();
    SUBCASE("divide_exact inverts multiplication") {
        for (int k = 0; k < 30; ++k) {
            Polynomial a = testing::random_polynomial(rng);
            Polynomial b = testing::random_nonzero_polynomial(rng);
            CHECK((a * b).divide_exact(b) == a);
        }
    }
    SUBCASE("gcd of shared factors") {
        Polynomial a = p * p * Polynomial::m();
        Polynomial b = p * Polynomial::mb();
        CHECK(Polynomial::gcd(a, b) == p);
        // gcd(a, a) is a itself up to a unit
        CHECK(a.divisible_by(Polynomial::gcd(a, a)));
        CHECK(Polynomial::gcd(a, a).divisible_by(a));
    }
    SUBCASE("gcd of random products sees the common factor") {
        for (int k = 0; k < 20; ++k) {
            Polynomial a = testing::random_nonzero_polynomial(rng);
            Polynomial b = testing::random_nonzero_polynomial(rng);
            Polynomial g = testing::random_nonzero_polynomial(rng);
            Polynomial d = Polynomial::gcd(a * g, b * g);
            CHECK((a * g).divisible_by(d));
            CHECK((b * g).divisible_by(d));
            CHECK(d.divisible_by(Polynomial::gcd(g, g)));  // contains g up to the gcd of a,b
        }
    }
    SUBCASE("not exact -> error") {
        CHECK_THROWS(Polynomial::m().divide_exact(p));
    }
}

TEST_CASE("field operations match the chart examples") {
    CHECK(m * mb == RationalFunction(Polynomial::m() * Polynomial::mb()));
    CHECK((m * mb + m) / m == mb + one);
    CHECK(one / fiber_p() + (m * mb) / fiber_p() == one);
    CHECK_THROWS_AS(one / RationalFunction(), DivisionByZeroError);
}

TEST_CASE("partial derivatives") {
    CHECK((m * m * mb).partial(Var::m) == RationalFunction(2) * m * mb);
    CHECK(RationalFunction(GaussianRational::make(5, 7)).partial(Var::m).is_zero());
    // quotient rule, frozen by hand: d/dmb [ mb/(1+m mb) ] = 1/(1+m mb)^2
    CHECK((mb / fiber_p()).partial(Var::mb) == one / (fiber_p() * fiber_p()));
}

TEST_CASE("scalar conjugation") {
    RationalFunction f = RationalFunction::i() * m / fiber_p();
    CHECK(f.conj() == -RationalFunction::i() * mb / fiber_p());
    CHECK(fiber_p().conj() == fiber_p());
    Rng rng(13);
    for (int k = 0; k < 40; ++k) {
        RationalFunction g = testing::random_rational(rng);
        CHECK(g.conj().conj() == g);
    }
}

TEST_CASE("evaluation with mb bound to the conjugate point") {
    CHECK(fiber_p().evaluate(GaussianRational(1)) == GaussianRational(2));
    CHECK((mb / fiber_p()).evaluate(GaussianRational::make(1, 1, 1, 1)) ==
          GaussianRational::make(1, 3, -1, 3));
    RationalFunction pole = one / (m * m + one);
    CHECK_THROWS_AS(pole.evaluate(GaussianRational::i()), PoleError);
}

TEST_CASE("canonical form is construction-order independent") {
    Rng rng(14);
    for (int k = 0; k < 50; ++k) {
        RationalFunction f = testing::random_rational(rng);
        RationalFunction g = testing::random_rational(rng);
        RationalFunction h = testing::random_nonzero_rational(rng);
        CHECK((f + g) * h == f * h + g * h);
        CHECK((f * h) / h == f);
        // same value through an unreduced fraction
        RationalFunction unreduced(f.num() * h.num(), f.den() * h.num());
        CHECK(unreduced == f);
    }
}

TEST_CASE("derivation and conjugation properties") {
    Rng rng(15);
    for (int k = 0; k < 40; ++k) {
        RationalFunction f = testing::random_rational(rng);
        RationalFunction g = testing::random_rational(rng);
        CHECK((f * g).partial(Var::m) == f.partial(Var::m) * g + f * g.partial(Var::m));
        CHECK(f.conj().partial(Var::mb) == f.partial(Var::m).conj());
    }
}

TEST_CASE("evaluation is a field homomorphism off poles") {
    Rng rng(16);
    const GaussianRational pts[] = {GaussianRational(0), GaussianRational(1),
                                    GaussianRational::make(1, 2), GaussianRational::make(2, 1, 1, 1)};
    int checked = 0;
    for (int k = 0; k < 60; ++k) {
        RationalFunction f = testing::random_rational(rng);
        RationalFunction g = testing::random_rational(rng);
        for (const auto& pt : pts) {
            try {
                GaussianRational sum = (f + g).evaluate(pt);
                GaussianRational prod = (f * g).evaluate(pt);
                CHECK(sum == f.evaluate(pt) + g.evaluate(pt));
                CHECK(prod == f.evaluate(pt) * g.evaluate(pt));
                ++checked;
            } catch (const PoleError&) {
                // pole of f, g, or a reduced combination; skip the point
            }
        }
    }
    CHECK(checked > 100);
}
