#ifndef TWISTOR_CHECKS_HPP
#define TWISTOR_CHECKS_HPP

#include <string>
#include <vector>

namespace twistor {

struct CheckResult {
    std::string name;
    std::string claim;    // what the check re-verifies; JSON key "paper"
    bool pass = false;
    std::string witness;  // nonzero witness or arithmetic trace on failure
    std::string notes;    // reported-but-not-required outcomes (text reports only)
    double runtime_ms = 0.0;
};

struct CheckInfo {
    std::string name;
    std::string claim;
};

/// Registered check names in run order (C0 coverage audit, then C1..C12).
std::vector<std::string> check_names();
/// Throws UnknownNameError listing registered names.
CheckInfo check_info(const std::string& name);

CheckResult run_check(const std::string& name);
std::vector<CheckResult> run_all();

}  // namespace twistor

#endif
