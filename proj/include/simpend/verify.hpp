#pragma once

#include <string>
#include <vector>

namespace simpend {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;  // failure explanation, empty when passed

    bool operator==(const CheckResult&) const = default;
};

// The suite names in report order: presentation, monad, adjunction, frieze,
// tl-embedding.
std::vector<std::string> verify_suite_names();

// Runs one named suite. Seeds are fixed and iteration orders deterministic,
// so identical runs produce identical reports. Throws ValidationError for an
// unknown name.
std::vector<CheckResult> verify_suite(const std::string& name);

}  // namespace simpend
