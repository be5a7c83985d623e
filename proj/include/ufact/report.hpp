#pragma once

#include <string>
#include <vector>

namespace ufact {

struct ResidualCheck {
    std::string name;
    double value = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

/// Named residuals checked against tolerances; passed() iff every check is.
struct VerificationReport {
    std::vector<ResidualCheck> checks;

    void add(std::string name, double value, double tolerance);
    bool passed() const;
};

std::string to_string(const VerificationReport& report);

}  // namespace ufact
