#include "twistor/exterior.hpp"

#include <cassert>

#include "twistor/errors.hpp"

namespace twistor {

namespace {

RationalFunction fiber_denominator() {
    // 1 + m*mb
    return RationalFunction(Polynomial(1) + Polynomial::m() * Polynomial::mb());
}

template <FrameKind K>
BasicForm<K> coefficient_differential(const RationalFunction& c) {
    BasicForm<K> r;
    r += BasicForm<K>::monomial(Mask{1u << gen::dm}, c.partial(Var::m));
    r += BasicForm<K>::monomial(Mask{1u << gen::dmb}, c.partial(Var::mb));
    return r;
}

// Graded Leibniz extension of a generator derivative table.
Form derive(const Form& a, const std::array<Form, 6>& dgen) {
    Form out;
    for (const auto& [mask, c] : a.terms()) {
        out += wedge(coefficient_differential<FrameKind::sigma>(c), Form::monomial(mask, 1));
        int sign = 1;
        for (int slot = 0; slot < 6; ++slot) {
            if (!(mask & (1u << slot))) continue;
            const Mask pre = static_cast<Mask>(mask & ((1u << slot) - 1));
            const Mask post = static_cast<Mask>(mask & ~((1u << (slot + 1)) - 1));
            Form piece = wedge(wedge(Form::monomial(pre, 1), dgen[static_cast<std::size_t>(slot)]),
                               Form::monomial(post, 1));
            out += piece.scaled(sign == 1 ? c : -c);
            sign = -sign;
        }
    }
    return out;
}

}  // namespace

const std::array<Form, 6>& structure_equations() {
    static const std::array<Form, 6> table = [] {
        const RationalFunction p = fiber_denominator();
        const RationalFunction inv_p = RationalFunction(1) / p;
        const Form s1 = Form::generator(gen::s1);
        const Form s2 = Form::generator(gen::s2);
        const Form dm = Form::generator(gen::dm);
        const Form sb1 = Form::generator(gen::sb1);
        const Form sb2 = Form::generator(gen::sb2);
        const Form dmb = Form::generator(gen::dmb);

        // d sb1 = (dmb ^ s2 - mb dm ^ sb1) / (1 + m mb)
        Form dsb1 = (wedge(dmb, s2) - wedge(dm, sb1).scaled(RationalFunction::mb())).scaled(inv_p);
        // d sb2 = (-mb dm ^ sb2 - dmb ^ s1) / (1 + m mb)
        Form dsb2 = (-wedge(dm, sb2).scaled(RationalFunction::mb()) - wedge(dmb, s1)).scaled(inv_p);

        std::array<Form, 6> t;
        t[gen::sb1] = dsb1;
        t[gen::sb2] = dsb2;
        t[gen::s1] = dsb1.conj();
        t[gen::s2] = dsb2.conj();
        t[gen::dm] = Form();
        t[gen::dmb] = Form();
        return t;
    }();
    return table;
}

Form exterior_derivative(const Form& a) { return derive(a, structure_equations()); }

std::pair<Form, Form> del_delbar(const Form& a) {
    auto bd = a.bidegree();
    if (!a.is_zero() && !bd)
        throw HomogeneityError("del/delbar require a homogeneous form; got mixed bidegrees");
    if (a.is_zero()) return {Form(), Form()};
    const auto [p, q] = *bd;
    Form da = exterior_derivative(a);
    Form del_part = da.component(p + 1, q);
    Form delbar_part = da.component(p, q + 1);
    // integrability of the twistor complex structure in this frame
    assert(del_part + delbar_part == da);
    return {del_part, delbar_part};
}

Form del(const Form& a) { return del_delbar(a).first; }
Form delbar(const Form& a) { return del_delbar(a).second; }

const std::array<DzForm, 6>& sigma_to_dz_images() {
    static const std::array<DzForm, 6> table = [] {
        const RationalFunction inv_p = RationalFunction(1) / fiber_denominator();
        const RationalFunction m = RationalFunction::m();
        const RationalFunction mb = RationalFunction::mb();
        const DzForm dz1 = DzForm::generator(gen::dz1);
        const DzForm dz2 = DzForm::generator(gen::dz2);
        const DzForm dzb1 = DzForm::generator(gen::dzb1);
        const DzForm dzb2 = DzForm::generator(gen::dzb2);

        std::array<DzForm, 6> t;
        t[gen::s1] = (dz1.scaled(m) - dzb2).scaled(inv_p);
        t[gen::s2] = (dz2.scaled(m) + dzb1).scaled(inv_p);
        t[gen::dm] = DzForm::generator(gen::dm);
        t[gen::sb1] = (dzb1.scaled(mb) - dz2).scaled(inv_p);
        t[gen::sb2] = (dzb2.scaled(mb) + dz1).scaled(inv_p);
        t[gen::dmb] = DzForm::generator(gen::dmb);
        return t;
    }();
    return table;
}

const std::array<Form, 6>& dz_to_sigma_images() {
    static const std::array<Form, 6> table = [] {
        const RationalFunction m = RationalFunction::m();
        const RationalFunction mb = RationalFunction::mb();
        const Form s1 = Form::generator(gen::s1);
        const Form s2 = Form::generator(gen::s2);
        const Form sb1 = Form::generator(gen::sb1);
        const Form sb2 = Form::generator(gen::sb2);

        std::array<Form, 6> t;
        t[gen::dz1] = sb2 + s1.scaled(mb);
        t[gen::dz2] = s2.scaled(mb) - sb1;
        t[gen::dm] = Form::generator(gen::dm);
        t[gen::dzb1] = s2 + sb1.scaled(m);
        t[gen::dzb2] = sb2.scaled(m) - s1;
        t[gen::dmb] = Form::generator(gen::dmb);
        return t;
    }();
    return table;
}

DzForm to_dz(const Form& a) { return convert_frame(a, sigma_to_dz_images()); }
Form from_dz(const DzForm& a) { return convert_frame(a, dz_to_sigma_images()); }

DzForm dz_derivative(const DzForm& a) {
    DzForm out;
    for (const auto& [mask, c] : a.terms())
        out += wedge(coefficient_differential<FrameKind::dz>(c), DzForm::monomial(mask, 1));
    return out;
}

Form d_oracle(const Form& a) { return from_dz(dz_derivative(to_dz(a))); }

}  // namespace twistor
