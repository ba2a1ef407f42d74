#include <doctest.h>

#include "test_support.hpp"
#include "twistor/errors.hpp"
#include "twistor/exterior.hpp"

using namespace twistor;
using twistor::testing::Rng;

namespace {
const Form s1 = Form::generator(gen::s1);
const Form s2 = Form::generator(gen::s2);
const Form dm = Form::generator(gen::dm);
const Form sb1 = Form::generator(gen::sb1);
const Form sb2 = Form::generator(gen::sb2);
const Form dmb = Form::generator(gen::dmb);
const RationalFunction m = RationalFunction::m();
const RationalFunction mb = RationalFunction::mb();
const RationalFunction p = RationalFunction(1) + m * mb;
}  // namespace

TEST_CASE("structure equations in the chart") {
    // d sb1 = (dmb^s2 - mb dm^sb1)/(1+m mb)
    Form expected = (wedge(dmb, s2) - wedge(dm, sb1).scaled(mb)).scaled(RationalFunction(1) / p);
    CHECK(exterior_derivative(sb1) == expected);
    CHECK(exterior_derivative(sb1).bidegree() == std::pair<int, int>{1, 1});
    CHECK(exterior_derivative(sb2).bidegree() == std::pair<int, int>{1, 1});
    // d s1, d s2 are the conjugates
    CHECK(exterior_derivative(s1) == exterior_derivative(sb1).conj());
    CHECK(exterior_derivative(dm).is_zero());
    CHECK(exterior_derivative(dmb).is_zero());
}

TEST_CASE("Leibniz expansion of d(m sb1)") {
    Form a = sb1.scaled(m);
    Form da = exterior_derivative(a);
    CHECK(da == wedge(dm, sb1) + exterior_derivative(sb1).scaled(m));
    CHECK(da.component(0, 2).is_zero());  // delbar-closed
}

TEST_CASE("frame conversion against the chart formulas") {
    const DzForm dz1 = DzForm::generator(gen::dz1);
    const DzForm dz2 = DzForm::generator(gen::dz2);
    const DzForm dzb1 = DzForm::generator(gen::dzb1);
    const DzForm dzb2 = DzForm::generator(gen::dzb2);
    // sb1 = (mb dzb1 - dz2)/(1+m mb)
    CHECK(to_dz(sb1) == (dzb1.scaled(mb) - dz2).scaled(RationalFunction(1) / p));
    // dz1 = sb2 + mb s1, inverted by hand from the 4x4 linear system
    CHECK(from_dz(dz1) == sb2 + s1.scaled(mb));
    CHECK(from_dz(dz2) == s2.scaled(mb) - sb1);

    SUBCASE("round trips") {
        Rng rng(31);
        for (int k = 0; k < 40; ++k) {
            Form a = testing::random_form(rng);
            CHECK(from_dz(to_dz(a)) == a);
        }
        for (int k = 0; k < 40; ++k) {
            DzForm a = testing::random_form<FrameKind::dz>(rng);
            CHECK(to_dz(from_dz(a)) == a);
        }
    }
}

TEST_CASE("known dz-frame identities") {
    // (1+m mb) s1^sb2 = dz1^dzb2 and (1+m mb)^2 s1^sb1^s2^sb2 = -dz1^dz2^dzb1^dzb2
    Form eta1 = wedge(s1, sb2).scaled(p);
    CHECK(to_dz(eta1) == DzForm::monomial(Mask{(1u << gen::dz1) | (1u << gen::dzb2)}, 1));
    Form beta = wedge(wedge(s1, sb1), wedge(s2, sb2)).scaled(p * p);
    CHECK(to_dz(beta) ==
          DzForm::monomial(Mask{(1u << gen::dz1) | (1u << gen::dz2) | (1u << gen::dzb1) | (1u << gen::dzb2)},
                           RationalFunction(-1)));
    CHECK(exterior_derivative(beta).is_zero());
}

TEST_CASE("d_oracle agrees with the structure equations") {
    for (int slot = 0; slot < 6; ++slot) {
        Form g = Form::generator(slot);
        CHECK(d_oracle(g) == exterior_derivative(g));
    }
    CHECK(d_oracle(dm).is_zero());
    Form h02 = wedge(sb1, sb2).scaled(m * m);
    CHECK(d_oracle(h02) == exterior_derivative(h02));

    Rng rng(32);
    for (int k = 0; k < 60; ++k) {
        Form a = testing::random_form(rng);
        CHECK(d_oracle(a) == exterior_derivative(a));
    }
}

TEST_CASE("d squared vanishes") {
    Rng rng(33);
    for (int k = 0; k < 60; ++k) {
        Form a = testing::random_form(rng);
        CHECK(exterior_derivative(exterior_derivative(a)).is_zero());
    }
}

TEST_CASE("graded Leibniz rule") {
    Rng rng(34);
    std::uniform_int_distribution<int> pdist(0, 2), qdist(0, 2);
    for (int k = 0; k < 40; ++k) {
        const int pa = pdist(rng), qa = qdist(rng);
        Form a = testing::random_homogeneous_form(rng, pa, qa);
        Form b = testing::random_homogeneous_form(rng, pdist(rng), qdist(rng));
        Form lhs = exterior_derivative(wedge(a, b));
        Form rhs = wedge(exterior_derivative(a), b);
        Form adb = wedge(a, exterior_derivative(b));
        rhs += (pa + qa) % 2 == 0 ? adb : -adb;
        CHECK(lhs == rhs);
    }
}

TEST_CASE("d commutes with conjugation; del and delbar swap") {
    Rng rng(35);
    std::uniform_int_distribution<int> pdist(0, 2), qdist(0, 2);
    for (int k = 0; k < 40; ++k) {
        Form a = testing::random_form(rng);
        CHECK(exterior_derivative(a.conj()) == exterior_derivative(a).conj());
    }
    for (int k = 0; k < 40; ++k) {
        Form a = testing::random_homogeneous_form(rng, pdist(rng), qdist(rng));
        auto [da, dba] = del_delbar(a);
        auto [dac, dbac] = del_delbar(a.conj());
        CHECK(dac == dba.conj());
        CHECK(dbac == da.conj());
    }
}

TEST_CASE("bidegree purity of d") {
    for (int slot = 0; slot < 6; ++slot) {
        Form da = exterior_derivative(Form::generator(slot));
        if (da.is_zero()) continue;
        auto [p_, q_] = Form::mask_bidegree(static_cast<Mask>(1u << slot));
        CHECK(da == da.component(p_ + 1, q_) + da.component(p_, q_ + 1));
    }
    Rng rng(36);
    std::uniform_int_distribution<int> pdist(0, 3), qdist(0, 3);
    for (int k = 0; k < 60; ++k) {
        const int p_ = pdist(rng), q_ = qdist(rng);
        Form a = testing::random_homogeneous_form(rng, p_, q_);
        Form da = exterior_derivative(a);
        CHECK(da == da.component(p_ + 1, q_) + da.component(p_, q_ + 1));
    }
}

TEST_CASE("del/delbar splitting") {
    auto [d1, db1] = del_delbar(sb1);
    CHECK(d1 == exterior_derivative(sb1));  // purely (1,1)
    CHECK(db1.is_zero());

    CHECK(delbar(sb1.scaled(m)).is_zero());

    // scalar case: del f = f_m dm, delbar f = f_mb dmb
    RationalFunction f = m * mb / p;
    auto [df, dbf] = del_delbar(Form::scalar(f));
    CHECK(df == dm.scaled(f.partial(Var::m)));
    CHECK(dbf == dmb.scaled(f.partial(Var::mb)));

    CHECK_THROWS_AS(del_delbar(s1 + sb1), HomogeneityError);
}
