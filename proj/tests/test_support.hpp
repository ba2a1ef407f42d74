#ifndef TWISTOR_TESTS_SUPPORT_HPP
#define TWISTOR_TESTS_SUPPORT_HPP

#include <random>
#include <vector>

#include "twistor/form.hpp"
#include "twistor/rational_function.hpp"

namespace twistor::testing {

using Rng = std::mt19937_64;

inline GaussianRational random_gaussian(Rng& rng) {
    std::uniform_int_distribution<long> num(-3, 3);
    std::uniform_int_distribution<long> den(1, 3);
    return GaussianRational::make(num(rng), den(rng), num(rng), den(rng));
}

inline Polynomial random_polynomial(Rng& rng, int max_terms = 3, int max_exp = 2) {
    std::uniform_int_distribution<int> nterms(0, max_terms);
    std::uniform_int_distribution<int> exp(0, max_exp);
    Polynomial p;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        p += Polynomial::monomial({exp(rng), exp(rng)}, random_gaussian(rng));
    return p;
}

inline Polynomial random_nonzero_polynomial(Rng& rng, int max_terms = 3, int max_exp = 2) {
    for (;;) {
        Polynomial p = random_polynomial(rng, max_terms, max_exp);
        if (!p.is_zero()) return p;
    }
}

// Denominators drawn from the shapes that actually occur in the calculus,
// plus a random nonzero polynomial.
inline Polynomial random_denominator(Rng& rng) {
    const Polynomial one(1);
    const Polynomial p = one + Polynomial::m() * Polynomial::mb();
    std::uniform_int_distribution<int> pick(0, 5);
    switch (pick(rng)) {
        case 0: return one;
        case 1: return p;
        case 2: return p * p;
        case 3: return one + Polynomial::m() * Polynomial::m();
        case 4: return one + Polynomial::mb() * Polynomial::mb();
        default: return random_nonzero_polynomial(rng);
    }
}

inline RationalFunction random_rational(Rng& rng) {
    return {random_polynomial(rng), random_denominator(rng)};
}

inline RationalFunction random_nonzero_rational(Rng& rng) {
    for (;;) {
        RationalFunction f = random_rational(rng);
        if (!f.is_zero()) return f;
    }
}

template <FrameKind K = FrameKind::sigma>
BasicForm<K> random_form(Rng& rng, int max_terms = 3) {
    std::uniform_int_distribution<int> nterms(1, max_terms);
    std::uniform_int_distribution<int> mask(0, 63);
    BasicForm<K> f;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k)
        f += BasicForm<K>::monomial(static_cast<Mask>(mask(rng)), random_rational(rng));
    return f;
}

// Homogeneous (p, q) form with random coefficients on random monomials.
inline Form random_homogeneous_form(Rng& rng, int p, int q, int max_terms = 3) {
    std::vector<Mask> masks;
    for (unsigned mask = 0; mask < 64; ++mask) {
        auto [mp, mq] = Form::mask_bidegree(static_cast<Mask>(mask));
        if (mp == p && mq == q) masks.push_back(static_cast<Mask>(mask));
    }
    std::uniform_int_distribution<std::size_t> pick(0, masks.size() - 1);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    Form f;
    const int n = nterms(rng);
    for (int k = 0; k < n; ++k) f += Form::monomial(masks[pick(rng)], random_rational(rng));
    return f;
}

}  // namespace twistor::testing

#endif
