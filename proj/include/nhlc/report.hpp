#pragma once

#include <string>
#include <vector>

namespace nhlc {

struct Violation {
    std::string check;
    std::string witness;
    std::string expected;
    std::string actual;
};

/// Empty violation list means the checked object is valid.
struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void add(std::string check, std::string witness, std::string expected, std::string actual)
    {
        violations.push_back({std::move(check), std::move(witness), std::move(expected), std::move(actual)});
    }
    void merge(const ValidationReport& other)
    {
        violations.insert(violations.end(), other.violations.begin(), other.violations.end());
    }
};

}  // namespace nhlc
