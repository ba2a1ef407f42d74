#include "twistor/diamond.hpp"

#include "twistor/errors.hpp"

namespace twistor {

std::array<long, 7> betti_Z(const TopologicalInput& t) {
    std::array<long, 7> b{};
    b[0] = 1;
    b[1] = t.b1;
    b[2] = t.b2() + 1;
    b[3] = 2 * t.b1;
    b[4] = b[2];
    b[5] = b[1];
    b[6] = b[0];
    return b;
}

namespace {

DiamondEntry known(long v) { return {v, ""}; }
DiamondEntry unknown(std::string symbol) { return {std::nullopt, std::move(symbol)}; }

void check_inequalities(const TopologicalInput& t, const CohomologyNumbers& n, Diamond& d) {
    if (n.h11_bc && n.h11_a && *n.h11_bc + *n.h11_a < 2 * (t.b_plus + 1)) {
        d.inequality_warning = true;
        d.warning_text = "h11_bc + h11_a < 2(b+ + 1) violates the twistor inequality";
    }
    if (n.h12_bc && *n.h12_bc < t.b1) {
        d.inequality_warning = true;
        if (!d.warning_text.empty()) d.warning_text += "; ";
        d.warning_text += "h12_bc < b1 violates the twistor inequality";
    }
}

Diamond bott_chern_diamond(const TopologicalInput& t, const CohomologyNumbers* n) {
    Diamond d;
    d.kind = DiamondKind::bott_chern;
    d.entries[0][0] = known(1);
    d.entries[1][0] = d.entries[0][1] = known(0);
    d.entries[2][0] = d.entries[0][2] = known(0);
    d.entries[3][0] = d.entries[0][3] = known(0);
    d.entries[3][1] = d.entries[1][3] = known(t.b_minus);
    d.entries[3][2] = d.entries[2][3] = known(t.b1);
    d.entries[3][3] = known(1);
    d.entries[1][1] = n && n->h11_bc ? known(*n->h11_bc) : unknown("h11_bc");
    d.entries[2][2] = n && n->h11_a ? known(*n->h11_a) : unknown("h11_a");  // star dual of h11_a
    d.entries[1][2] = d.entries[2][1] = n && n->h12_bc ? known(*n->h12_bc) : unknown("h12_bc");
    if (n) check_inequalities(t, *n, d);
    return d;
}

}  // namespace

Diamond diamond(const TopologicalInput& t, DiamondKind kind, const CohomologyNumbers* numbers) {
    Diamond d;
    d.kind = kind;
    switch (kind) {
        case DiamondKind::betti: {
            d.betti = betti_Z(t);
            return d;
        }
        case DiamondKind::bott_chern:
            return bott_chern_diamond(t, numbers);
        case DiamondKind::aeppli: {
            const Diamond bc = bott_chern_diamond(t, numbers);
            d.inequality_warning = bc.inequality_warning;
            d.warning_text = bc.warning_text;
            for (int p = 0; p < 4; ++p)
                for (int q = 0; q < 4; ++q)
                    d.entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] =
                        bc.at(3 - p, 3 - q);  // star duality
            return d;
        }
        case DiamondKind::hodge: {
            d.entries[0][0] = known(1);
            d.entries[1][0] = known(0);
            d.entries[0][1] = known(t.b1);
            d.entries[2][0] = known(0);
            d.entries[0][2] = known(t.b_minus);
            d.entries[3][0] = d.entries[0][3] = known(0);
            d.entries[3][1] = known(t.b_minus);
            d.entries[1][3] = known(0);
            d.entries[3][2] = known(t.b1);
            d.entries[2][3] = known(0);
            d.entries[3][3] = known(1);
            const CohomologyNumbers* n = numbers;
            d.entries[1][1] = n && n->h11_dolbeault ? known(*n->h11_dolbeault) : unknown("h11");
            d.entries[2][2] = n && n->h11_dolbeault ? known(*n->h11_dolbeault) : unknown("h11");
            d.entries[1][2] = n && n->h12_dolbeault ? known(*n->h12_dolbeault) : unknown("h12");
            d.entries[2][1] = n && n->h12_dolbeault ? known(*n->h12_dolbeault) : unknown("h12");
            if (n) check_inequalities(t, *n, d);
            return d;
        }
    }
    return d;
}

namespace {

long require(const std::optional<long>& v, const char* name) {
    if (!v) throw UnknownNameError(std::string("missing required number ") + name);
    return *v;
}

}  // namespace

DeltaReport delta(int k, const TopologicalInput& t, const CohomologyNumbers& numbers) {
    if (k < 0 || k > 6) throw UnknownNameError("delta index must lie in 0..6");
    const int kk = k <= 3 ? k : 6 - k;  // Delta^k = Delta^{6-k}
    switch (kk) {
        case 0:
        case 1:
            return {k, 0};
        case 2: {
            const long s = require(numbers.h11_bc, "h11_bc") + require(numbers.h11_a, "h11_a");
            return {k, s - 2 * (t.b_plus + 1)};
        }
        default: {
            return {k, 4 * (require(numbers.h12_bc, "h12_bc") - t.b1)};
        }
    }
}

DdbarDecision ddbar_decision(const TopologicalInput& t, const CohomologyNumbers& numbers,
                             std::optional<DdbarMode> mode) {
    DdbarDecision out;

    // mode A: Delta^2 = 0 and Delta^3 = 0 in their closed forms
    if (numbers.h11_bc && numbers.h11_a) {
        const long sum = *numbers.h11_bc + *numbers.h11_a;
        const long target = 2 * (t.b_plus + 1);
        if (sum != target) {
            out.verdict_a = false;
            out.explanation = "Delta^2 = " + std::to_string(sum - target) + " != 0";
        } else if (numbers.h12_bc) {
            const bool h12_ok = *numbers.h12_bc == t.b1;
            out.verdict_a = h12_ok;
            if (!h12_ok)
                out.explanation = "Delta^3 = " + std::to_string(4 * (*numbers.h12_bc - t.b1)) + " != 0";
        } else if (mode == DdbarMode::A) {
            throw UnknownNameError("missing required number h12_bc");
        }
    } else if (mode == DdbarMode::A) {
        require(numbers.h11_bc, "h11_bc");
        require(numbers.h11_a, "h11_a");
    }

    // mode B: h10_A = b1 = 0, h11_bc = h11_a = b+ + 1, h20_A = b- = 0
    if (numbers.h11_bc && numbers.h11_a) {
        out.verdict_b = t.b1 == 0 && t.b_minus == 0 && *numbers.h11_bc == t.b_plus + 1 &&
                        *numbers.h11_a == t.b_plus + 1;
        if (!*out.verdict_b && out.explanation.empty()) {
            if (t.b1 != 0)
                out.explanation = "h10_A = b1 = " + std::to_string(t.b1) + " != 0";
            else if (t.b_minus != 0)
                out.explanation = "h20_A = b- = " + std::to_string(t.b_minus) + " != 0";
            else
                out.explanation = "h11_bc, h11_a differ from b+ + 1 = " + std::to_string(t.b_plus + 1);
        }
    } else if (mode == DdbarMode::B) {
        require(numbers.h11_bc, "h11_bc");
        require(numbers.h11_a, "h11_a");
    }

    if (out.verdict_a && out.verdict_b) {
        out.modes_agree = *out.verdict_a == *out.verdict_b;
        out.non_realizable = !*out.modes_agree;
    }
    if (mode == DdbarMode::A)
        out.verdict = out.verdict_a.value_or(false);
    else if (mode == DdbarMode::B)
        out.verdict = out.verdict_b.value_or(false);
    else
        out.verdict = out.verdict_a.value_or(false) && out.verdict_b.value_or(false);

    if (out.verdict) {
        // forced Betti profile and the filled Bott-Chern diamond
        TopologicalInput forced{0, t.b_plus, 0};
        out.forced_betti = betti_Z(forced);
        CohomologyNumbers filled;
        filled.h11_bc = t.b_plus + 1;
        filled.h11_a = t.b_plus + 1;
        filled.h12_bc = 0;
        out.forced_bc_diamond = diamond(forced, DiamondKind::bott_chern, &filled);
        out.explanation = "all dimension conditions hold";
    }
    return out;
}

FrolicherOutcome frolicher_E1_check(const TopologicalInput& t, bool regular) {
    FrolicherOutcome out;
    out.h01 = t.b1;
    out.h02 = t.b_minus;
    // b3(Z) = 2 b1 = h30 + h21 + h12 + h03 = 2 h21 under first-step degeneration
    out.h21 = t.b1;
    // b2(Z) = b2 + 1 = h20 + h11 + h02 = h11 + b-
    out.h11 = t.b_plus + 1;
    out.consistent = true;
    if (regular) {
        // kernel of H^{1,1} -> H^{2,1} is C (+) H^2_-(M), of dimension b- + 1;
        // the map's rank must therefore be h11 - (b- + 1) = b+ - b-, which
        // has to fit inside 0..h21.
        const long rank_needed = t.b_plus - t.b_minus;
        if (rank_needed < 0 || rank_needed > out.h21) {
            out.consistent = false;
            if (out.h21 == 0) {
                out.trace = "h21 = 0 forces the map H^{1,1} -> H^{2,1} to vanish, so its kernel "
                            "has dimension h11 = " +
                            std::to_string(out.h11) + "; but the kernel is C (+) H^2_-(M) of dimension b- + 1 = " +
                            std::to_string(t.b_minus + 1) + ", a contradiction";
            } else if (rank_needed < 0) {
                out.trace = "the kernel C (+) H^2_-(M) has dimension b- + 1 = " +
                            std::to_string(t.b_minus + 1) + ", exceeding h11 = " +
                            std::to_string(out.h11);
            } else {
                out.trace = "the map H^{1,1} -> H^{2,1} would need rank b+ - b- = " +
                            std::to_string(rank_needed) + ", impossible with h21 = " +
                            std::to_string(out.h21);
            }
        }
    }
    return out;
}

}  // namespace twistor
