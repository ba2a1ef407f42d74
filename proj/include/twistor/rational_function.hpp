#ifndef TWISTOR_RATIONAL_FUNCTION_HPP
#define TWISTOR_RATIONAL_FUNCTION_HPP

#include <optional>
#include <string>

#include "twistor/polynomial.hpp"

namespace twistor {

/// Canonical fraction of polynomials in m, mb over Q(i):
///   - gcd(num, den) is a unit,
///   - den is monic under graded-lex (m before mb),
///   - the zero function is stored as 0/1.
/// Equality of values is therefore equality of representations.
class RationalFunction {
  public:
    RationalFunction() : num_(), den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}                        // NOLINT
    RationalFunction(GaussianRational c) : num_(std::move(c)), den_(1) {}  // NOLINT
    RationalFunction(Polynomial p) : num_(std::move(p)), den_(1) {}        // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    static RationalFunction m() { return RationalFunction(Polynomial::m()); }
    static RationalFunction mb() { return RationalFunction(Polynomial::mb()); }
    static RationalFunction i() { return RationalFunction(GaussianRational::i()); }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    std::optional<GaussianRational> as_constant() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RationalFunction partial(Var v) const;
    /// Complex conjugation on chart functions: m <-> mb, coefficients conjugated.
    RationalFunction conj() const;
    /// Substitutes m := point, mb := conj(point); throws PoleError when the
    /// denominator vanishes there.
    GaussianRational evaluate(const GaussianRational& point) const;

    std::string str() const;

  private:
    void canonicalize();
    void normalize_monic();
    Polynomial num_, den_;
};

}  // namespace twistor

#endif
