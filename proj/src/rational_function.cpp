#include "twistor/rational_function.hpp"

#include "twistor/errors.hpp"

namespace twistor {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZeroError("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    normalize_monic();
}

void RationalFunction::normalize_monic() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    const GaussianRational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        const GaussianRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

std::optional<GaussianRational> RationalFunction::as_constant() const {
    if (!is_constant()) return std::nullopt;
    return num_.constant_value();
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    // common-denominator via the lcm to keep the final gcd small
    const Polynomial g = Polynomial::gcd(den_, o.den_);
    const Polynomial da = g.is_one() ? den_ : den_.divide_exact(g);
    const Polynomial db = g.is_one() ? o.den_ : o.den_.divide_exact(g);
    num_ = num_ * db + o.num_ * da;
    den_ = da * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    // cross-reduction; canonical inputs make the result coprime by construction
    const Polynomial g1 = Polynomial::gcd(num_, o.den_);
    const Polynomial g2 = Polynomial::gcd(o.num_, den_);
    num_ = (g1.is_one() ? num_ : num_.divide_exact(g1)) * (g2.is_one() ? o.num_ : o.num_.divide_exact(g2));
    den_ = (g2.is_one() ? den_ : den_.divide_exact(g2)) * (g1.is_one() ? o.den_ : o.den_.divide_exact(g1));
    normalize_monic();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw DivisionByZeroError("division by the zero rational function");
    if (is_zero()) return *this;
    const Polynomial g1 = Polynomial::gcd(num_, o.num_);
    const Polynomial g2 = Polynomial::gcd(den_, o.den_);
    num_ = (g1.is_one() ? num_ : num_.divide_exact(g1)) * (g2.is_one() ? o.den_ : o.den_.divide_exact(g2));
    den_ = (g2.is_one() ? den_ : den_.divide_exact(g2)) * (g1.is_one() ? o.num_ : o.num_.divide_exact(g1));
    normalize_monic();
    return *this;
}

RationalFunction RationalFunction::partial(Var v) const {
    // quotient rule; canonicalization reduces the result
    Polynomial n = num_.partial(v) * den_ - num_ * den_.partial(v);
    return {std::move(n), den_ * den_};
}

RationalFunction RationalFunction::conj() const {
    RationalFunction r;
    r.num_ = num_.conj();
    r.den_ = den_.conj();
    r.canonicalize();  // conj of a monic denominator need not be monic
    return r;
}

GaussianRational RationalFunction::evaluate(const GaussianRational& point) const {
    const GaussianRational mb_value = point.conj();
    const GaussianRational d = den_.evaluate(point, mb_value);
    if (d.is_zero())
        throw PoleError("pole at m = " + point.str() + ": denominator " + den_.str() + " vanishes");
    return num_.evaluate(point, mb_value) / d;
}

std::string RationalFunction::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

}  // namespace twistor
