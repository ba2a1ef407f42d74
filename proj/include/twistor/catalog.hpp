#ifndef TWISTOR_CATALOG_HPP
#define TWISTOR_CATALOG_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistor/form.hpp"
#include "twistor/metric.hpp"

namespace twistor {

struct CatalogEntry {
    std::string name;
    Form value;
    std::string source;  // where the object lives in the write-up, for reports
    std::pair<int, int> bidegree;
    // machine-checkable predicate outcomes; the coverage audit verifies these
    std::vector<std::pair<std::string, bool>> expected_properties;
};

/// Named forms and the fixed metric of the torus twistor chart, under the
/// trivialization lambda1 -> m, lambda2 -> 1 (and conjugates).
class Catalog {
  public:
    static const Catalog& instance();

    /// Throws UnknownNameError listing registered names.
    const CatalogEntry& lookup(const std::string& name) const;
    std::vector<std::string> names() const;

    /// Coframe (omega_0, omega_2, dm/(1+m*mb)), all norm-squares 2.
    const HermitianMetric& metric() const { return metric_; }

    struct IdentityPair {
        std::string name;
        Form lhs, rhs;
    };
    /// The four omega_bar_k double expressions (mu/sigma form vs the
    /// lambda-Omega route through the dz frame).
    const std::vector<IdentityPair>& omega_identity_pairs() const { return omega_pairs_; }
    /// Chart reductions lambda_i Omega_bar_j -> their sigma expressions.
    const std::vector<IdentityPair>& chart_reduction_pairs() const { return reduction_pairs_; }
    /// The three H^{1,1} proof expansions.
    const std::vector<IdentityPair>& h11_expansion_identities() const { return h11_expansions_; }
    /// The four H^{1,2} proof expansions.
    const std::vector<IdentityPair>& h12_expansion_identities() const { return h12_expansions_; }

    /// Members of a representative family: "h01", "h02", "h11", "h12",
    /// "eta", "aeppli_extra".
    const std::vector<std::string>& group(const std::string& key) const;

  private:
    Catalog();
    std::map<std::string, CatalogEntry> entries_;
    std::map<std::string, std::vector<std::string>> groups_;
    std::vector<IdentityPair> omega_pairs_, reduction_pairs_, h11_expansions_, h12_expansions_;
    HermitianMetric metric_;
};

}  // namespace twistor

#endif
