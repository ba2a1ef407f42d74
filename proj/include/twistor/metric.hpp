#ifndef TWISTOR_METRIC_HPP
#define TWISTOR_METRIC_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "twistor/form.hpp"

namespace twistor {

enum class HarmonicFlavor { delbar, del, bott_chern, aeppli };

struct HarmonicityReport {
    bool harmonic = false;
    std::string failed_condition;  // which of the two closedness conditions broke
    Form witness;                  // the nonzero form, when not harmonic
};

/// Hermitian metric declared by an orthogonal (1,0)-coframe f1, f2, f3 with
/// declared norm-squares <fa, fa> = nu_a. Everything stays inside the
/// rational function field; identities hold off the locus where the coframe
/// wedge degenerates.
class HermitianMetric {
  public:
    HermitianMetric(std::array<Form, 3> coframe, std::array<RationalFunction, 3> norms);

    const std::array<Form, 3>& coframe() const { return coframe_; }
    const std::array<RationalFunction, 3>& norms() const { return norms_; }

    /// omega^3 / 3! where omega is the fundamental form.
    const Form& volume_form() const { return vol_; }
    /// i * sum_a (1/nu_a) f_a ^ conj(f_a)
    const Form& fundamental_form() const { return fundamental_; }

    /// Hermitian product of coframe basis monomials: orthogonal basis, the
    /// diagonal value is the product of the slot norms.
    RationalFunction inner_product(Mask a, Mask b) const;

    /// Antilinear Hodge star: alpha ^ astar(beta) = <alpha, beta> vol for all
    /// alpha. Maps (p,q) to (3-p, 3-q). Input must be homogeneous.
    Form antilinear_star(const Form& a) const;
    /// Linear star: astar after conjugation; maps (p,q) to (3-q, 3-p).
    Form linear_star(const Form& a) const;

    /// Flavor criteria (all exact):
    ///   delbar:     delbar a = 0  and  delbar(astar a) = 0
    ///   del:        del a = 0     and  del(astar a) = 0
    ///   bott_chern: d a = 0       and  del delbar (astar a) = 0
    ///   aeppli:     del delbar a = 0  and  d(astar a) = 0
    HarmonicityReport harmonicity(const Form& a, HarmonicFlavor flavor) const;

    CoframeForm to_coframe(const Form& a) const;
    Form from_coframe(const CoframeForm& a) const;

  private:
    std::array<Form, 3> coframe_;
    std::array<RationalFunction, 3> norms_;
    std::array<CoframeForm, 6> sigma_to_coframe_;
    std::array<Form, 6> coframe_to_sigma_;
    Form fundamental_;
    Form vol_;
    RationalFunction vol_coframe_coeff_;
};

/// Rank over Q(i) of the stacked coefficient vectors of the forms evaluated
/// at the sample points (independence over constants). Points must avoid
/// coefficient poles and the degeneracy locus m = +-i.
int independence_rank(std::span<const Form> forms, std::span<const GaussianRational> sample_points);

}  // namespace twistor

#endif
