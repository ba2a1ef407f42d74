#ifndef TWISTOR_DIAMOND_HPP
#define TWISTOR_DIAMOND_HPP

#include <array>
#include <optional>
#include <string>

namespace twistor {

/// b1, b+, b- of the base 4-manifold; everything else derives from these.
struct TopologicalInput {
    long b1 = 0;
    long b_plus = 0;
    long b_minus = 0;
    long b2() const { return b_plus + b_minus; }
};

/// Betti numbers b0..b6 of the twistor space:
/// b1(Z) = b1(M), b2(Z) = b2(M)+1, b3(Z) = 2 b1(M), the rest by duality.
std::array<long, 7> betti_Z(const TopologicalInput& t);

enum class DiamondKind { hodge, bott_chern, aeppli, betti };

struct DiamondEntry {
    std::optional<long> value;  // Known
    std::string symbol;         // Unknown slot name when !value
    bool known() const { return value.has_value(); }
    friend bool operator==(const DiamondEntry&, const DiamondEntry&) = default;
};

/// Candidate cohomology dimensions. The Bott-Chern/Aeppli trio is the
/// Corollary-level input; the optional Dolbeault pair fills the Hodge
/// diamond's open slots.
struct CohomologyNumbers {
    std::optional<long> h11_bc, h11_a, h12_bc;
    std::optional<long> h11_dolbeault, h12_dolbeault;
};

struct Diamond {
    DiamondKind kind = DiamondKind::hodge;
    // entries[p][q] for the three cohomology kinds
    std::array<std::array<DiamondEntry, 4>, 4> entries;
    // filled for the betti kind only
    std::array<long, 7> betti{};
    // set when supplied numbers violate the twistor inequalities
    bool inequality_warning = false;
    std::string warning_text;

    const DiamondEntry& at(int p, int q) const {
        return entries[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)];
    }
};

Diamond diamond(const TopologicalInput& t, DiamondKind kind,
                const CohomologyNumbers* numbers = nullptr);

struct DeltaReport {
    int k = 0;
    long value = 0;
};

/// Non-negativity defect for k in 0..6. Closed forms for k = 1, 2, 3; the
/// values for k in {0, 4, 5, 6} come from the duality Delta^k = Delta^{6-k}
/// (and Delta^0 = 0). k in {2, 3, 4} require the corresponding numbers.
DeltaReport delta(int k, const TopologicalInput& t, const CohomologyNumbers& numbers);

enum class DdbarMode { A, B };

struct DdbarDecision {
    std::optional<bool> verdict_a;  // h11 sum + h12 conditions
    std::optional<bool> verdict_b;  // b1 = 0, h11_bc = h11_a = b+ + 1, b- = 0
    bool verdict = false;           // the requested mode (or the combined one)
    std::optional<bool> modes_agree;
    bool non_realizable = false;  // modes disagree: no twistor space fits these numbers
    std::string explanation;
    // emitted when the verdict is positive
    std::optional<std::array<long, 7>> forced_betti;
    std::optional<Diamond> forced_bc_diamond;
};

/// mode A: h11_bc + h11_a = 2(b+ + 1) and h12_bc = b1.
/// mode B: the equivalent dimension conditions with h10_A = b1, h20_A = b-
/// substituted. Without a mode, both are evaluated and must agree for a
/// clean verdict. Throws UnknownNameError naming a missing required number.
DdbarDecision ddbar_decision(const TopologicalInput& t, const CohomologyNumbers& numbers,
                             std::optional<DdbarMode> mode);

struct FrolicherOutcome {
    bool consistent = false;
    long h01 = 0, h02 = 0, h11 = 0, h21 = 0;
    std::string trace;  // contradiction chain when !consistent
};

/// Consequences of first-step degeneration of the Frolicher sequence:
/// h01 = b1, h02 = b-, h21 = b1, h11 = b+ + 1. With `regular` set, the
/// kernel of H^{1,1} -> H^{2,1} has dimension b- + 1, which must be
/// feasible; the fake-projective-plane input (0,1,0) fails it.
FrolicherOutcome frolicher_E1_check(const TopologicalInput& t, bool regular);

}  // namespace twistor

#endif
