#ifndef TWISTOR_GAUSSIAN_RATIONAL_HPP
#define TWISTOR_GAUSSIAN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

namespace twistor {

/// Element of Q(i): re + im*i with exact rational components, both kept in
/// lowest terms by GMP.
class GaussianRational {
  public:
    GaussianRational() : re_(0), im_(0) {}
    GaussianRational(long n) : re_(n), im_(0) {}  // NOLINT: implicit by design
    GaussianRational(mpq_class re, mpq_class im);
    static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
    /// re_num/re_den + (im_num/im_den) i
    static GaussianRational make(long re_num, long re_den = 1, long im_num = 0, long im_den = 1);

    const mpq_class& re() const { return re_; }
    const mpq_class& im() const { return im_; }

    bool is_zero() const { return re_ == 0 && im_ == 0; }
    bool is_one() const { return re_ == 1 && im_ == 0; }
    bool is_real() const { return im_ == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    /// re^2 + im^2, the multiplicative norm down to Q.
    mpq_class norm() const { return re_ * re_ + im_ * im_; }
    GaussianRational inverse() const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// "3", "-1/2", "i", "-2*i", "(1+1/2*i)"; parseable by the expression language.
    std::string str() const;

  private:
    mpq_class re_, im_;
};

}  // namespace twistor

#endif
