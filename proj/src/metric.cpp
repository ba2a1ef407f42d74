#include "twistor/metric.hpp"

#include <bit>
#include <set>

#include "twistor/errors.hpp"
#include "twistor/exterior.hpp"

namespace twistor {

namespace {

// 3x3 inverse over the rational function field via the adjugate.
std::array<std::array<RationalFunction, 3>, 3> invert3(
    const std::array<std::array<RationalFunction, 3>, 3>& c, const RationalFunction& det) {
    auto minor2 = [&](int r0, int r1, int c0, int c1) {
        return c[r0][c0] * c[r1][c1] - c[r0][c1] * c[r1][c0];
    };
    std::array<std::array<RationalFunction, 3>, 3> inv;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            const int r0 = (j + 1) % 3, r1 = (j + 2) % 3;
            const int c0 = (i + 1) % 3, c1 = (i + 2) % 3;
            // adj — cofactor transpose; the cyclic index choice absorbs signs
            inv[i][j] = minor2(r0, r1, c0, c1) / det;
        }
    return inv;
}

}  // namespace

HermitianMetric::HermitianMetric(std::array<Form, 3> coframe, std::array<RationalFunction, 3> norms)
    : coframe_(std::move(coframe)), norms_(std::move(norms)) {
    std::array<std::array<RationalFunction, 3>, 3> c;
    for (int a = 0; a < 3; ++a) {
        const auto bd = coframe_[a].bidegree();
        if (!bd || *bd != std::pair<int, int>{1, 0})
            throw HomogeneityError("coframe entry " + std::to_string(a + 1) + " is not a (1,0)-form");
        for (int j = 0; j < 3; ++j) c[a][j] = coframe_[a].coefficient(static_cast<Mask>(1u << j));
    }
    for (int a = 0; a < 3; ++a) {
        if (norms_[a].is_zero()) throw DegenerateMetricError("norm^2 of coframe entry vanishes");
        if (!(norms_[a].conj() == norms_[a]))
            throw DegenerateMetricError("norm^2 of coframe entry is not real");
    }

    const RationalFunction det = c[0][0] * (c[1][1] * c[2][2] - c[1][2] * c[2][1]) -
                                 c[0][1] * (c[1][0] * c[2][2] - c[1][2] * c[2][0]) +
                                 c[0][2] * (c[1][0] * c[2][1] - c[1][1] * c[2][0]);
    if (det.is_zero())
        throw DegenerateMetricError("coframe wedge f1^f2^f3 vanishes identically");
    const auto cinv = invert3(c, det);

    for (int j = 0; j < 3; ++j) {
        CoframeForm holo, anti;
        for (int a = 0; a < 3; ++a) {
            holo += CoframeForm::monomial(static_cast<Mask>(1u << a), cinv[j][a]);
            anti += CoframeForm::monomial(static_cast<Mask>(1u << (a + 3)), cinv[j][a].conj());
        }
        sigma_to_coframe_[static_cast<std::size_t>(j)] = holo;
        sigma_to_coframe_[static_cast<std::size_t>(j + 3)] = anti;
    }
    for (int a = 0; a < 3; ++a) {
        coframe_to_sigma_[static_cast<std::size_t>(a)] = coframe_[a];
        coframe_to_sigma_[static_cast<std::size_t>(a + 3)] = coframe_[a].conj();
    }

    const RationalFunction i = RationalFunction::i();
    for (int a = 0; a < 3; ++a)
        fundamental_ += wedge(coframe_[a], coframe_[a].conj()).scaled(i / norms_[a]);
    vol_ = wedge(wedge(fundamental_, fundamental_), fundamental_)
               .scaled(RationalFunction(GaussianRational::make(1, 6)));

    const CoframeForm vol_cf = to_coframe(vol_);
    if (vol_cf.terms().size() != 1 || vol_cf.terms().begin()->first != kFullMask)
        throw DegenerateMetricError("volume form is not a single top monomial in the coframe");
    vol_coframe_coeff_ = vol_cf.terms().begin()->second;
}

CoframeForm HermitianMetric::to_coframe(const Form& a) const {
    return convert_frame(a, sigma_to_coframe_);
}

Form HermitianMetric::from_coframe(const CoframeForm& a) const {
    return convert_frame(a, coframe_to_sigma_);
}

RationalFunction HermitianMetric::inner_product(Mask a, Mask b) const {
    if (a != b) return RationalFunction();
    RationalFunction ip(1);
    for (int slot = 0; slot < 6; ++slot)
        if (a & (1u << slot)) ip *= norms_[static_cast<std::size_t>(slot % 3)];
    return ip;
}

Form HermitianMetric::antilinear_star(const Form& a) const {
    if (a.is_zero()) return {};
    if (!a.bidegree())
        throw HomogeneityError("antilinear star requires a homogeneous form");
    const CoframeForm cf = to_coframe(a);
    CoframeForm out;
    for (const auto& [mask, coeff] : cf.terms()) {
        const Mask comp = static_cast<Mask>(kFullMask ^ mask);
        const int sign = wedge_sign(mask, comp);
        RationalFunction c = coeff.conj() * inner_product(mask, mask) * vol_coframe_coeff_;
        out += CoframeForm::monomial(comp, sign == 1 ? c : -c);
    }
    return from_coframe(out);
}

Form HermitianMetric::linear_star(const Form& a) const { return antilinear_star(a.conj()); }

HarmonicityReport HermitianMetric::harmonicity(const Form& a, HarmonicFlavor flavor) const {
    auto fail = [](std::string cond, Form witness) {
        return HarmonicityReport{false, std::move(cond), std::move(witness)};
    };
    switch (flavor) {
        case HarmonicFlavor::delbar: {
            Form c1 = delbar(a);
            if (!c1.is_zero()) return fail("delbar(a) != 0", std::move(c1));
            Form c2 = delbar(antilinear_star(a));
            if (!c2.is_zero()) return fail("delbar(astar(a)) != 0", std::move(c2));
            break;
        }
        case HarmonicFlavor::del: {
            Form c1 = del(a);
            if (!c1.is_zero()) return fail("del(a) != 0", std::move(c1));
            Form c2 = del(antilinear_star(a));
            if (!c2.is_zero()) return fail("del(astar(a)) != 0", std::move(c2));
            break;
        }
        case HarmonicFlavor::bott_chern: {
            Form c1 = exterior_derivative(a);
            if (!c1.is_zero()) return fail("d(a) != 0", std::move(c1));
            Form c2 = del(delbar(antilinear_star(a)));
            if (!c2.is_zero()) return fail("del(delbar(astar(a))) != 0", std::move(c2));
            break;
        }
        case HarmonicFlavor::aeppli: {
            Form c1 = del(delbar(a));
            if (!c1.is_zero()) return fail("del(delbar(a)) != 0", std::move(c1));
            Form c2 = exterior_derivative(antilinear_star(a));
            if (!c2.is_zero()) return fail("d(astar(a)) != 0", std::move(c2));
            break;
        }
    }
    return {true, "", Form()};
}

int independence_rank(std::span<const Form> forms, std::span<const GaussianRational> sample_points) {
    for (const auto& pt : sample_points) {
        if (pt == GaussianRational::i() || pt == -GaussianRational::i())
            throw DegenerateMetricError("sample point " + pt.str() +
                                        " lies on the degeneracy locus m = +-i");
    }
    std::set<Mask> masks;
    for (const auto& f : forms)
        for (const auto& [mask, c] : f.terms()) masks.insert(mask);

    // rows: forms; columns: (point, monomial) coefficient evaluations
    std::vector<std::vector<GaussianRational>> rows;
    rows.reserve(forms.size());
    for (const auto& f : forms) {
        std::vector<GaussianRational> row;
        for (const auto& pt : sample_points)
            for (const Mask mask : masks) row.push_back(f.coefficient(mask).evaluate(pt));
        rows.push_back(std::move(row));
    }

    // Gaussian elimination over Q(i)
    int rank = 0;
    const std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
        std::size_t pivot = static_cast<std::size_t>(rank);
        while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
        if (pivot == rows.size()) continue;
        std::swap(rows[static_cast<std::size_t>(rank)], rows[pivot]);
        const GaussianRational inv = rows[static_cast<std::size_t>(rank)][col].inverse();
        for (std::size_t j = col; j < cols; ++j) rows[static_cast<std::size_t>(rank)][j] *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == static_cast<std::size_t>(rank) || rows[r][col].is_zero()) continue;
            const GaussianRational factor = rows[r][col];
            for (std::size_t j = col; j < cols; ++j)
                rows[r][j] -= factor * rows[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace twistor
