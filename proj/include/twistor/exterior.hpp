#ifndef TWISTOR_EXTERIOR_HPP
#define TWISTOR_EXTERIOR_HPP

#include <utility>

#include "twistor/form.hpp"

namespace twistor {

/// d of each sigma-frame generator. d(sb1), d(sb2) are the chart structure
/// equations; d(s1), d(s2) their conjugates; d(dm) = d(dmb) = 0.
const std::array<Form, 6>& structure_equations();

/// Exterior derivative in the sigma frame: coefficient differentials plus the
/// structure equations, extended by the graded Leibniz rule.
Form exterior_derivative(const Form& a);

/// (del part, delbar part) of d(a) for homogeneous a of bidegree (p, q):
/// the (p+1, q) and (p, q+1) components. Throws HomogeneityError on mixed
/// input; asserts that no stray bidegrees appear (integrability).
std::pair<Form, Form> del_delbar(const Form& a);
Form del(const Form& a);
Form delbar(const Form& a);

/// Linear frame changes between the sigma and dz frames.
const std::array<DzForm, 6>& sigma_to_dz_images();
const std::array<Form, 6>& dz_to_sigma_images();
DzForm to_dz(const Form& a);
Form from_dz(const DzForm& a);

/// d in the dz frame: every generator is closed, so only coefficients
/// differentiate.
DzForm dz_derivative(const DzForm& a);

/// Independent route for d: convert to the dz frame, differentiate
/// coefficients, convert back. Must agree with exterior_derivative everywhere.
Form d_oracle(const Form& a);

}  // namespace twistor

#endif
