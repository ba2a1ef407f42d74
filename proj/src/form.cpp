#include "twistor/form.hpp"

#include <bit>
#include <vector>

namespace twistor {

int wedge_sign(Mask a, Mask b) {
    if (a & b) return 0;
    int inversions = 0;
    for (int j = 0; j < 6; ++j) {
        if (!(b & (1u << j))) continue;
        // generators of a strictly above slot j must move past b's slot j
        inversions += std::popcount(static_cast<unsigned>(a >> (j + 1)));
    }
    return inversions % 2 == 0 ? 1 : -1;
}

std::pair<Mask, int> conj_monomial(Mask mask) {
    std::vector<int> mapped;
    for (int slot = 0; slot < 6; ++slot)
        if (mask & (1u << slot)) mapped.push_back((slot + 3) % 6);
    int inversions = 0;
    for (std::size_t i = 0; i < mapped.size(); ++i)
        for (std::size_t j = i + 1; j < mapped.size(); ++j)
            if (mapped[i] > mapped[j]) ++inversions;
    Mask out = static_cast<Mask>(((mask & 0b000111) << 3) | ((mask & 0b111000) >> 3));
    return {out, inversions % 2 == 0 ? 1 : -1};
}

const std::array<const char*, 6>& generator_names(FrameKind k) {
    static const std::array<const char*, 6> sigma = {"s1", "s2", "dm", "sb1", "sb2", "dmb"};
    static const std::array<const char*, 6> dz = {"dz1", "dz2", "dm", "dzb1", "dzb2", "dmb"};
    static const std::array<const char*, 6> coframe = {"f1", "f2", "f3", "fb1", "fb2", "fb3"};
    switch (k) {
        case FrameKind::dz: return dz;
        case FrameKind::coframe: return coframe;
        default: return sigma;
    }
}

namespace {

// Display sign of a coefficient: leading numerator term negative.
bool display_negative(const RationalFunction& c) {
    const GaussianRational& lc = c.num().leading_coeff();
    return lc.re() < 0 || (lc.re() == 0 && lc.im() < 0);
}

// A coefficient needs parentheses before "* mono" when it is a sum.
std::string coeff_text(const RationalFunction& c) {
    std::string s = c.str();
    if (c.den().is_one() && c.num().terms().size() > 1) return "(" + s + ")";
    return s;
}

}  // namespace

template <FrameKind K>
std::string to_text(const BasicForm<K>& f) {
    if (f.is_zero()) return "0";
    const auto& names = generator_names(K);
    // order terms by (degree, mask)
    std::vector<std::pair<Mask, RationalFunction>> terms(f.terms().begin(), f.terms().end());
    std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        const int da = std::popcount(static_cast<unsigned>(a.first));
        const int db = std::popcount(static_cast<unsigned>(b.first));
        return da != db ? da < db : a.first < b.first;
    });
    std::string out;
    bool first = true;
    for (const auto& [mask, c] : terms) {
        const bool neg = display_negative(c);
        const RationalFunction abs = neg ? -c : c;
        std::string mono;
        for (int slot = 0; slot < 6; ++slot)
            if (mask & (1u << slot)) {
                if (!mono.empty()) mono += "*";
                mono += names[static_cast<std::size_t>(slot)];
            }
        std::string term;
        if (mono.empty())
            term = abs.str();
        else if (abs.is_one())
            term = mono;
        else
            term = coeff_text(abs) + " * " + mono;
        if (first) {
            out += neg ? "-" + term : term;
            first = false;
        } else {
            out += neg ? " - " + term : " + " + term;
        }
    }
    return out;
}

template std::string to_text<FrameKind::sigma>(const BasicForm<FrameKind::sigma>&);
template std::string to_text<FrameKind::dz>(const BasicForm<FrameKind::dz>&);
template std::string to_text<FrameKind::coframe>(const BasicForm<FrameKind::coframe>&);

}  // namespace twistor
