#include "twistor/polynomial.hpp"

#include <climits>
#include <stdexcept>
#include <vector>

#include "twistor/errors.hpp"

namespace twistor {

Polynomial::Polynomial(GaussianRational c) {
    if (!c.is_zero()) terms_.emplace(Exponents{0, 0}, std::move(c));
}

Polynomial Polynomial::m() { return monomial({1, 0}, GaussianRational(1)); }
Polynomial Polynomial::mb() { return monomial({0, 1}, GaussianRational(1)); }

Polynomial Polynomial::monomial(Exponents e, GaussianRational c) {
    Polynomial p;
    if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

bool Polynomial::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} && terms_.begin()->second.is_one();
}

GaussianRational Polynomial::constant_value() const {
    auto it = terms_.find(Exponents{0, 0});
    return it == terms_.end() ? GaussianRational(0) : it->second;
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.total(); }

int Polynomial::degree_in(Var v) const {
    int d = terms_.empty() ? -1 : 0;
    for (const auto& [e, c] : terms_) d = std::max(d, v == Var::m ? e.dm : e.dmb);
    return d;
}

Exponents Polynomial::leading_exponents() const {
    return terms_.empty() ? Exponents{0, 0} : terms_.rbegin()->first;
}

const GaussianRational& Polynomial::leading_coeff() const {
    static const GaussianRational zero(0);
    return terms_.empty() ? zero : terms_.rbegin()->second;
}

void Polynomial::insert_term(const Exponents& e, const GaussianRational& c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!c.is_zero()) terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [e, c] : o.terms_) insert_term(e, -c);
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) r.insert_term({ea.dm + eb.dm, ea.dmb + eb.dmb}, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const GaussianRational& c) const {
    Polynomial r;
    if (c.is_zero()) return r;
    for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
    return r;
}

Polynomial Polynomial::partial(Var v) const {
    Polynomial r;
    for (const auto& [e, c] : terms_) {
        int d = v == Var::m ? e.dm : e.dmb;
        if (d == 0) continue;
        Exponents de = v == Var::m ? Exponents{e.dm - 1, e.dmb} : Exponents{e.dm, e.dmb - 1};
        r.insert_term(de, c * GaussianRational(d));
    }
    return r;
}

Polynomial Polynomial::conj() const {
    Polynomial r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(Exponents{e.dmb, e.dm}, c.conj());
    return r;
}

GaussianRational Polynomial::evaluate(const GaussianRational& m_value, const GaussianRational& mb_value) const {
    auto pow = [](const GaussianRational& base, int e) {
        GaussianRational r(1);
        for (int k = 0; k < e; ++k) r *= base;
        return r;
    };
    GaussianRational acc(0);
    for (const auto& [e, c] : terms_) acc += c * pow(m_value, e.dm) * pow(mb_value, e.dmb);
    return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw DivisionByZeroError("polynomial division by zero");
    Polynomial q;
    Polynomial r = *this;
    const Exponents de = divisor.leading_exponents();
    const GaussianRational dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        const Exponents re = r.leading_exponents();
        if (re.dm < de.dm || re.dmb < de.dmb)
            throw std::domain_error("polynomial division is not exact: " + str() + " by " + divisor.str());
        Polynomial t = monomial({re.dm - de.dm, re.dmb - de.dmb}, r.leading_coeff() / dc);
        q += t;
        r -= t * divisor;
    }
    return q;
}

bool Polynomial::divisible_by(const Polynomial& divisor) const {
    if (divisor.is_zero()) return is_zero();
    Polynomial r = *this;
    const Exponents de = divisor.leading_exponents();
    const GaussianRational dc = divisor.leading_coeff();
    while (!r.is_zero()) {
        const Exponents re = r.leading_exponents();
        if (re.dm < de.dm || re.dmb < de.dmb) return false;
        Polynomial t = monomial({re.dm - de.dm, re.dmb - de.dmb}, r.leading_coeff() / dc);
        r -= t * divisor;
    }
    return true;
}

namespace {

Polynomial make_monic(const Polynomial& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading_coeff().inverse());
}

// ---------------------------------------------------------------------------
// gcd via Brown's evaluation-interpolation: treat m as the main variable,
// evaluate mb at integer points, take monic univariate gcds, interpolate the
// mb-dependence, and certify the candidate by trial division. Univariate
// work stays on the small original operands, which avoids the coefficient
// explosion of pseudo-remainder sequences.
// ---------------------------------------------------------------------------

// dense univariate polynomial over Q(i); index = degree
using UPoly = std::vector<GaussianRational>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

GaussianRational ueval(const UPoly& p, const GaussianRational& x) {
    GaussianRational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, GaussianRational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

// a -= c * x^shift * b
void usub_scaled(UPoly& a, const GaussianRational& c, std::size_t shift, const UPoly& b) {
    if (a.size() < b.size() + shift) a.resize(b.size() + shift, GaussianRational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= c * b[i];
    utrim(a);
}

UPoly umonic(UPoly p) {
    utrim(p);
    if (p.empty()) return p;
    const GaussianRational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

// monic Euclidean gcd over the field Q(i)
UPoly umonic_gcd(UPoly a, UPoly b) {
    a = umonic(std::move(a));
    b = umonic(std::move(b));
    while (!b.empty()) {
        // a mod b with b monic
        while (udeg(a) >= udeg(b)) {
            const GaussianRational lead = a.back();
            usub_scaled(a, lead, static_cast<std::size_t>(udeg(a) - udeg(b)), b);
            if (a.empty()) break;
        }
        std::swap(a, b);
        b = umonic(std::move(b));
    }
    return a;  // monic or empty
}

// mb-only Polynomial <-> UPoly in mb
UPoly to_upoly_mb(const Polynomial& p) {
    UPoly r(static_cast<std::size_t>(std::max(0, p.degree_in(Var::mb)) + 1), GaussianRational(0));
    for (const auto& [e, c] : p.terms()) r[static_cast<std::size_t>(e.dmb)] = c;
    utrim(r);
    return r;
}

Polynomial from_upoly_mb(const UPoly& p) {
    Polynomial r;
    for (std::size_t d = 0; d < p.size(); ++d) r += Polynomial::monomial({0, static_cast<int>(d)}, p[d]);
    return r;
}

// coefficients of p in the m-view, each an mb-only UPoly
std::vector<UPoly> m_slices(const Polynomial& p) {
    std::vector<UPoly> out(static_cast<std::size_t>(std::max(0, p.degree_in(Var::m)) + 1));
    for (const auto& [e, c] : p.terms()) {
        auto& slice = out[static_cast<std::size_t>(e.dm)];
        if (slice.size() <= static_cast<std::size_t>(e.dmb))
            slice.resize(static_cast<std::size_t>(e.dmb) + 1, GaussianRational(0));
        slice[static_cast<std::size_t>(e.dmb)] = c;
    }
    for (auto& s : out) utrim(s);
    return out;
}

// content in the m-view: gcd of the slice polynomials in mb (monic)
UPoly content_mb(const std::vector<UPoly>& slices) {
    UPoly g;
    for (const auto& s : slices) {
        if (s.empty()) continue;
        g = g.empty() ? umonic(s) : umonic_gcd(g, s);
        if (udeg(g) == 0) break;
    }
    return g;
}

Polynomial poly_from_slices(const std::vector<UPoly>& slices) {
    Polynomial r;
    for (std::size_t dm = 0; dm < slices.size(); ++dm)
        for (std::size_t dmb = 0; dmb < slices[dm].size(); ++dmb)
            r += Polynomial::monomial({static_cast<int>(dm), static_cast<int>(dmb)}, slices[dm][dmb]);
    return r;
}

// p with mb evaluated at v, as a univariate polynomial in m
UPoly eval_mb(const std::vector<UPoly>& slices, const GaussianRational& v) {
    UPoly r(slices.size(), GaussianRational(0));
    for (std::size_t d = 0; d < slices.size(); ++d) r[d] = ueval(slices[d], v);
    utrim(r);
    return r;
}

bool is_monomial(const Polynomial& p) { return p.terms().size() == 1; }

// gcd with a single-term polynomial: min exponents against every term.
Polynomial monomial_gcd(const Polynomial& mono, const Polynomial& other) {
    const Exponents me = mono.leading_exponents();
    int dm = me.dm, dmb = me.dmb;
    for (const auto& [e, c] : other.terms()) {
        dm = std::min(dm, e.dm);
        dmb = std::min(dmb, e.dmb);
        if (dm == 0 && dmb == 0) break;
    }
    return Polynomial::monomial({dm, dmb}, 1);
}

// Brown's algorithm for inputs that genuinely involve both variables and are
// primitive in the m-view. Returns the primitive gcd (up to a constant).
Polynomial brown_gcd_primitive(const Polynomial& a, const Polynomial& b) {
    const auto sa = m_slices(a);
    const auto sb = m_slices(b);
    const UPoly gamma = umonic_gcd(sa.back(), sb.back());
    int degree_budget = udeg(gamma) + std::min(a.degree_in(Var::mb), b.degree_in(Var::mb));

    struct Point {
        GaussianRational v;
        UPoly h;  // gamma(v) * monic gcd at v
    };
    std::vector<Point> points;
    int dmin = INT_MAX;
    long next = 0;
    auto next_value = [&next]() {
        const long k = next++;
        return GaussianRational(k % 2 == 0 ? k / 2 : -(k + 1) / 2);  // 0, -1, 1, -2, 2, ...
    };

    for (int guard = 0; guard < 10000; ++guard) {
        const GaussianRational v = next_value();
        const GaussianRational gv = ueval(gamma, v);
        if (gv.is_zero()) continue;
        UPoly gcd_v = umonic_gcd(eval_mb(sa, v), eval_mb(sb, v));
        if (udeg(gcd_v) == 0) return Polynomial(1);
        if (udeg(gcd_v) > dmin) continue;  // unlucky point
        if (udeg(gcd_v) < dmin) {
            points.clear();
            dmin = udeg(gcd_v);
        }
        for (auto& c : gcd_v) c *= gv;
        points.push_back({v, std::move(gcd_v)});
        if (static_cast<int>(points.size()) < degree_budget + 1) continue;

        // Lagrange interpolation of each m-coefficient across the points
        const std::size_t n = points.size();
        std::vector<UPoly> basis(n);
        for (std::size_t j = 0; j < n; ++j) {
            UPoly numer{GaussianRational(1)};
            GaussianRational denom(1);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j) continue;
                numer = umul(numer, UPoly{-points[k].v, GaussianRational(1)});
                denom *= points[j].v - points[k].v;
            }
            const GaussianRational inv = denom.inverse();
            for (auto& c : numer) c *= inv;
            basis[j] = std::move(numer);
        }
        std::vector<UPoly> slices(static_cast<std::size_t>(dmin) + 1);
        for (std::size_t d = 0; d < slices.size(); ++d) {
            UPoly acc;
            for (std::size_t j = 0; j < n; ++j) {
                const GaussianRational y =
                    d < points[j].h.size() ? points[j].h[d] : GaussianRational(0);
                if (y.is_zero()) continue;
                UPoly scaled = basis[j];
                for (auto& c : scaled) c *= y;
                if (acc.size() < scaled.size()) acc.resize(scaled.size(), GaussianRational(0));
                for (std::size_t t = 0; t < scaled.size(); ++t) acc[t] += scaled[t];
            }
            utrim(acc);
            slices[d] = std::move(acc);
        }
        Polynomial candidate = poly_from_slices(slices);
        const UPoly cont = content_mb(slices);
        if (udeg(cont) > 0) candidate = candidate.divide_exact(from_upoly_mb(cont));
        if (!candidate.is_zero() && a.divisible_by(candidate) && b.divisible_by(candidate))
            return candidate;
        // at least one collected point was unlucky; start over with fresh values
        points.clear();
        dmin = INT_MAX;
    }
    throw std::domain_error("bivariate gcd interpolation failed to stabilize");
}

}  // namespace

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero()) return make_monic(b);
    if (b.is_zero()) return make_monic(a);
    if (a.is_constant() || b.is_constant()) return Polynomial(1);
    if (a == b) return make_monic(a);
    if (is_monomial(a)) return monomial_gcd(a, b);
    if (is_monomial(b)) return monomial_gcd(b, a);

    const bool a_mb_only = a.degree_in(Var::m) == 0;
    const bool b_mb_only = b.degree_in(Var::m) == 0;
    if (a_mb_only && b_mb_only) return make_monic(from_upoly_mb(umonic_gcd(to_upoly_mb(a), to_upoly_mb(b))));
    if (a_mb_only) return make_monic(from_upoly_mb(umonic_gcd(to_upoly_mb(a), content_mb(m_slices(b)))));
    if (b_mb_only) return make_monic(from_upoly_mb(umonic_gcd(to_upoly_mb(b), content_mb(m_slices(a)))));

    // m-only pair: univariate Euclid along m (slices are constants)
    if (a.degree_in(Var::mb) == 0 && b.degree_in(Var::mb) == 0) {
        UPoly ua = eval_mb(m_slices(a), GaussianRational(0));
        UPoly ub = eval_mb(m_slices(b), GaussianRational(0));
        UPoly g = umonic_gcd(ua, ub);
        Polynomial r;
        for (std::size_t d = 0; d < g.size(); ++d)
            r += Polynomial::monomial({static_cast<int>(d), 0}, g[d]);
        return make_monic(r);
    }

    const UPoly ca = content_mb(m_slices(a));
    const UPoly cb = content_mb(m_slices(b));
    Polynomial pa = udeg(ca) > 0 ? a.divide_exact(from_upoly_mb(ca)) : a;
    Polynomial pb = udeg(cb) > 0 ? b.divide_exact(from_upoly_mb(cb)) : b;
    const UPoly cg = umonic_gcd(ca, cb);
    Polynomial g = brown_gcd_primitive(pa, pb);
    if (udeg(cg) > 0) g = g * from_upoly_mb(cg);
    return make_monic(g);
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    // graded-lex descending, leading term first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        const bool neg = c.re() < 0 || (c.re() == 0 && c.im() < 0);
        GaussianRational abs = neg ? -c : c;
        std::string mono;
        if (e.dm > 0) mono += e.dm == 1 ? "m" : "m^" + std::to_string(e.dm);
        if (e.dmb > 0) {
            if (!mono.empty()) mono += "*";
            mono += e.dmb == 1 ? "mb" : "mb^" + std::to_string(e.dmb);
        }
        std::string term;
        if (mono.empty())
            term = abs.str();
        else if (abs.is_one())
            term = mono;
        else
            term = abs.str() + "*" + mono;
        if (first) {
            out += neg ? "-" + term : term;
            first = false;
        } else {
            out += (neg ? "-" : "+") + term;
        }
    }
    return out;
}

}  // namespace twistor
