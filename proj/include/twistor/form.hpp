#ifndef TWISTOR_FORM_HPP
#define TWISTOR_FORM_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "twistor/rational_function.hpp"

namespace twistor {

/// The three generator frames in play:
///   sigma   - s1, s2, dm | sb1, sb2, dmb; pure twistor bidegree, structure
///             equations live here
///   dz      - dz1, dz2, dm | dzb1, dzb2, dmb; every generator is d-closed,
///             but dz1/dz2 mix twistor types, so no bidegree queries
///   coframe - f1, f2, f3 | fb1, fb2, fb3; the orthogonal coframe of a
///             Hermitian metric, used internally by the Hodge star
enum class FrameKind { sigma, dz, coframe };

/// Monomial as a bitmask over generator slots 0..5. Slots 0..2 form the
/// first block (bidegree (1,0) in sigma/coframe), slots 3..5 the conjugate
/// block. Conjugation pairs slot k with k+3.
using Mask = std::uint8_t;
inline constexpr Mask kFullMask = 0b111111;

/// Sign of sorting the concatenation a|b into ascending order; 0 when the
/// masks overlap (repeated generator).
int wedge_sign(Mask a, Mask b);

/// Conjugate of a monomial: (mapped mask, sign from re-sorting).
std::pair<Mask, int> conj_monomial(Mask mask);

/// Generator spelling per frame (slot 0..5), as accepted by the expression
/// language for the sigma and dz frames.
const std::array<const char*, 6>& generator_names(FrameKind k);

template <FrameKind K>
class BasicForm {
  public:
    using TermMap = std::map<Mask, RationalFunction>;

    BasicForm() = default;

    static BasicForm scalar(RationalFunction c) {
        BasicForm f;
        if (!c.is_zero()) f.terms_.emplace(Mask{0}, std::move(c));
        return f;
    }
    static BasicForm generator(int slot) { return monomial(static_cast<Mask>(1u << slot), 1); }
    static BasicForm monomial(Mask mask, RationalFunction c) {
        BasicForm f;
        if (!c.is_zero()) f.terms_.emplace(mask, std::move(c));
        return f;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RationalFunction coefficient(Mask mask) const {
        auto it = terms_.find(mask);
        return it == terms_.end() ? RationalFunction() : it->second;
    }

    BasicForm operator-() const {
        BasicForm r;
        for (const auto& [mask, c] : terms_) r.terms_.emplace(mask, -c);
        return r;
    }
    BasicForm& operator+=(const BasicForm& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, c);
        return *this;
    }
    BasicForm& operator-=(const BasicForm& o) {
        for (const auto& [mask, c] : o.terms_) add_term(mask, -c);
        return *this;
    }
    friend BasicForm operator+(BasicForm a, const BasicForm& b) { return a += b; }
    friend BasicForm operator-(BasicForm a, const BasicForm& b) { return a -= b; }
    friend bool operator==(const BasicForm& a, const BasicForm& b) { return a.terms_ == b.terms_; }

    BasicForm scaled(const RationalFunction& c) const {
        BasicForm r;
        if (c.is_zero()) return r;
        for (const auto& [mask, v] : terms_) r.terms_.emplace(mask, v * c);
        return r;
    }

    friend BasicForm wedge(const BasicForm& a, const BasicForm& b) {
        BasicForm r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb_, cb] : b.terms_) {
                const int s = wedge_sign(ma, mb_);
                if (s == 0) continue;
                RationalFunction c = ca * cb;
                r.add_term(static_cast<Mask>(ma | mb_), s == 1 ? c : -c);
            }
        return r;
    }

    BasicForm conj() const {
        BasicForm r;
        for (const auto& [mask, c] : terms_) {
            auto [mapped, sign] = conj_monomial(mask);
            RationalFunction cc = c.conj();
            r.add_term(mapped, sign == 1 ? cc : -cc);
        }
        return r;
    }

    /// Bidegree of a monomial mask: block split (first three slots, last three).
    static std::pair<int, int> mask_bidegree(Mask mask) {
        static_assert(K != FrameKind::dz, "dz generators carry no twistor bidegree");
        return {std::popcount(static_cast<unsigned>(mask & 0b000111)),
                std::popcount(static_cast<unsigned>(mask & 0b111000))};
    }

    /// (p, q) when every term agrees; nullopt for 0 or mixed forms. The zero
    /// form is homogeneous of every bidegree; callers treat nullopt+is_zero
    /// as "fits anywhere".
    std::optional<std::pair<int, int>> bidegree() const {
        std::optional<std::pair<int, int>> bd;
        for (const auto& [mask, c] : terms_) {
            auto here = mask_bidegree(mask);
            if (bd && *bd != here) return std::nullopt;
            bd = here;
        }
        return bd;
    }
    bool is_homogeneous() const { return terms_.empty() || bidegree().has_value(); }

    BasicForm component(int p, int q) const {
        BasicForm r;
        for (const auto& [mask, c] : terms_)
            if (mask_bidegree(mask) == std::pair<int, int>{p, q}) r.terms_.emplace(mask, c);
        return r;
    }

    int degree() const {  // total degree of the first term; forms here are graded
        return terms_.empty() ? 0 : std::popcount(static_cast<unsigned>(terms_.begin()->first));
    }
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }

  private:
    void add_term(Mask mask, const RationalFunction& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(mask);
        if (it == terms_.end()) {
            terms_.emplace(mask, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
    TermMap terms_;
};

using Form = BasicForm<FrameKind::sigma>;
using DzForm = BasicForm<FrameKind::dz>;
using CoframeForm = BasicForm<FrameKind::coframe>;

/// Expands each generator of `a` through `images` (multiplicatively on
/// monomials, linearly on terms). Coefficients ride along unchanged.
template <FrameKind A, FrameKind B>
BasicForm<B> convert_frame(const BasicForm<A>& a, const std::array<BasicForm<B>, 6>& images) {
    BasicForm<B> out;
    for (const auto& [mask, c] : a.terms()) {
        BasicForm<B> acc = BasicForm<B>::scalar(1);
        for (int slot = 0; slot < 6; ++slot)
            if (mask & (1u << slot)) acc = wedge(acc, images[static_cast<std::size_t>(slot)]);
        out += acc.scaled(c);
    }
    return out;
}

/// Canonical text rendering: terms ordered by (degree, mask), generators in
/// frame order, coefficients in the expression-language syntax. Re-parsing
/// the output reproduces the form.
template <FrameKind K>
std::string to_text(const BasicForm<K>& f);

/// sigma-frame generator slots, for readability at call sites.
namespace gen {
inline constexpr int s1 = 0, s2 = 1, dm = 2, sb1 = 3, sb2 = 4, dmb = 5;
inline constexpr int dz1 = 0, dz2 = 1, dzb1 = 3, dzb2 = 4;
}  // namespace gen

}  // namespace twistor

#endif
