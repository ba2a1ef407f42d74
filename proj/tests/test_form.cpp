#include <doctest.h>

#include "test_support.hpp"
#include "twistor/form.hpp"

using namespace twistor;
using twistor::testing::Rng;

namespace {
const Form s1 = Form::generator(gen::s1);
const Form s2 = Form::generator(gen::s2);
const Form dm = Form::generator(gen::dm);
const Form sb1 = Form::generator(gen::sb1);
const Form sb2 = Form::generator(gen::sb2);
const Form dmb = Form::generator(gen::dmb);

// random form of a single total degree so the graded sign is defined
Form random_graded(Rng& rng, int degree) {
    std::vector<Mask> masks;
    for (unsigned mask = 0; mask < 64; ++mask)
        if (std::popcount(mask) == degree) masks.push_back(static_cast<Mask>(mask));
    std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
    Form f;
    for (int k = 0; k < 2; ++k) f += Form::monomial(masks[pick(rng)], testing::random_rational(rng));
    return f;
}
}  // namespace

TEST_CASE("wedge basics") {
    CHECK(wedge(s1, s1).is_zero());
    CHECK(wedge(sb1, s1) == -wedge(s1, sb1));
    // m sb1 ^ sb2 stays in canonical order with coefficient m
    Form lhs = wedge(sb1.scaled(RationalFunction::m()), sb2);
    CHECK(lhs == Form::monomial(Mask{(1u << gen::sb1) | (1u << gen::sb2)}, RationalFunction::m()));
}

TEST_CASE("wedge is graded anticommutative and associative") {
    Rng rng(21);
    for (int k = 0; k < 60; ++k) {
        std::uniform_int_distribution<int> deg(0, 3);
        const int da = deg(rng), db = deg(rng);
        Form a = random_graded(rng, da);
        Form b = random_graded(rng, db);
        Form ab = wedge(a, b);
        Form ba = wedge(b, a);
        CHECK(ab == ((da * db) % 2 == 0 ? ba : -ba));
        Form c = random_graded(rng, deg(rng));
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
    }
}

TEST_CASE("conjugation of forms") {
    CHECK(sb1.conj() == s1);
    CHECK(sb1.conj().conj() == sb1);
    // conj(i s1^sb1) = -i sb1^s1 = i s1^sb1
    Form f = wedge(s1, sb1).scaled(RationalFunction::i());
    CHECK(f.conj() == f);
    // omega_bar_0 = m sb1 + sb2 conjugates to mb s1 + s2
    Form omega_bar_0 = sb1.scaled(RationalFunction::m()) + sb2;
    CHECK(omega_bar_0.conj() == s1.scaled(RationalFunction::mb()) + s2);

    Rng rng(22);
    for (int k = 0; k < 50; ++k) {
        Form a = testing::random_form(rng);
        Form b = testing::random_form(rng);
        CHECK(a.conj().conj() == a);
        CHECK(wedge(a, b).conj() == wedge(a.conj(), b.conj()));
    }
}

TEST_CASE("bidegree bookkeeping") {
    CHECK(Form::mask_bidegree(0b000111) == std::pair<int, int>{3, 0});
    CHECK(Form::mask_bidegree(0b111000) == std::pair<int, int>{0, 3});
    Form pure = wedge(s1, sb2);
    CHECK(pure.bidegree() == std::pair<int, int>{1, 1});
    Form mixed = s1 + sb1;
    CHECK(!mixed.bidegree().has_value());
    CHECK(mixed.component(1, 0) == s1);
    CHECK(mixed.component(0, 1) == sb1);
    CHECK(mixed.component(2, 0).is_zero());
}

TEST_CASE("canonical text rendering") {
    CHECK(to_text(Form()) == "0");
    CHECK(to_text(wedge(sb1, sb2).scaled(RationalFunction(Polynomial::m() * Polynomial::m()))) ==
          "m^2 * sb1*sb2");
    CHECK(to_text(wedge(sb1, s1)) == "-s1*sb1");
    // ordering: scalars before 1-forms before 2-forms, masks ascending within a degree
    Form f = wedge(s1, sb1) + s2 + Form::scalar(2);
    CHECK(to_text(f) == "2 + s2 + s1*sb1");
}
