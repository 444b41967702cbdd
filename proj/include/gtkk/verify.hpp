#pragma once

// Exhaustive cross-check suite over all shapes with n parts and total ≤
// max_weight. Each property records how many cases it checked and, on
// failure, the first counterexample.

#include "gtkk/crystal.hpp"
#include "gtkk/json_io.hpp"

#include <string>
#include <vector>

namespace gtkk {

struct VerifyOptions {
    int n = 3;
    Entry max_weight = 3;
    TensorConvention convention = TensorConvention::Standard;
    unsigned threads = 1;
};

struct PropertyResult {
    std::string name;
    bool passed = true;
    std::uint64_t checked = 0;
    json counterexample;  // null when passed
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<PropertyResult> properties;

    bool all_passed() const;
    const PropertyResult* find(const std::string& name) const;
    json to_json() const;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace gtkk
