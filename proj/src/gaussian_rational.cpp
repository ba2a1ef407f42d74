#include "twistor/gaussian_rational.hpp"

#include "twistor/errors.hpp"

namespace twistor {

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::make(long re_num, long re_den, long im_num, long im_den) {
    if (re_den == 0 || im_den == 0) throw DivisionByZeroError("gaussian rational with zero denominator");
    return {mpq_class(re_num, re_den), mpq_class(im_num, im_den)};
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero()) throw DivisionByZeroError("inverse of zero in Q(i)");
    mpq_class n = norm();
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    mpq_class re = re_ * o.re_ - im_ * o.im_;
    mpq_class im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    return *this *= o.inverse();
}

std::string GaussianRational::str() const {
    auto rat = [](const mpq_class& q) { return q.get_str(); };
    if (im_ == 0) return rat(re_);
    std::string im_part;
    if (im_ == 1)
        im_part = "i";
    else if (im_ == -1)
        im_part = "-i";
    else
        im_part = rat(im_) + "*i";
    if (re_ == 0) return im_part;
    std::string s = rat(re_);
    if (im_ > 0)
        s += "+" + im_part;
    else
        s += "-" + (im_ == -1 ? std::string("i") : rat(-im_) + "*i");
    return "(" + s + ")";
}

}  // namespace twistor
