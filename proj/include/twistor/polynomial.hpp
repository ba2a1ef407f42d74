#ifndef TWISTOR_POLYNOMIAL_HPP
#define TWISTOR_POLYNOMIAL_HPP

#include <map>
#include <string>
#include <utility>

#include "twistor/gaussian_rational.hpp"

namespace twistor {

enum class Var { m, mb };

struct Exponents {
    int dm = 0;
    int dmb = 0;
    int total() const { return dm + dmb; }
    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order with m before mb. Two exponent pairs with equal
/// total degree are ordered by the m-degree, which determines them fully.
struct GradedLexLess {
    bool operator()(const Exponents& a, const Exponents& b) const {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.dm < b.dm;
    }
};

/// Sparse polynomial in m and mb over Q(i). No zero coefficients are stored.
class Polynomial {
  public:
    using TermMap = std::map<Exponents, GaussianRational, GradedLexLess>;

    Polynomial() = default;
    Polynomial(long c) : Polynomial(GaussianRational(c)) {}  // NOLINT: implicit by design
    Polynomial(GaussianRational c);                          // NOLINT: implicit by design

    static Polynomial m();
    static Polynomial mb();
    static Polynomial monomial(Exponents e, GaussianRational c);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    bool is_one() const;
    /// Constant coefficient (zero polynomial yields 0); meaningful with is_constant().
    GaussianRational constant_value() const;

    int degree() const;  // total degree, -1 for the zero polynomial
    int degree_in(Var v) const;
    Exponents leading_exponents() const;  // graded-lex; zero polynomial -> (0,0)
    const GaussianRational& leading_coeff() const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    Polynomial scaled(const GaussianRational& c) const;
    Polynomial partial(Var v) const;
    /// Swaps m <-> mb and conjugates every coefficient.
    Polynomial conj() const;
    GaussianRational evaluate(const GaussianRational& m_value, const GaussianRational& mb_value) const;

    /// Exact quotient; throws std::domain_error when the division is not exact.
    Polynomial divide_exact(const Polynomial& divisor) const;
    bool divisible_by(const Polynomial& divisor) const;

    /// Monic (graded-lex leading coefficient 1) gcd; gcd(0,0) = 0.
    static Polynomial gcd(const Polynomial& a, const Polynomial& b);

    std::string str() const;

  private:
    void insert_term(const Exponents& e, const GaussianRational& c);
    TermMap terms_;
};

}  // namespace twistor

#endif
