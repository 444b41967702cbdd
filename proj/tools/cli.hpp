#pragma once

#include "gtkk/crystal.hpp"
#include "gtkk/gt.hpp"
#include "gtkk/perm.hpp"

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtkk::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2, kGuard = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string command;  // "gt.enumerate", "kk.char", "verify", ...
    int n = 0;
    std::optional<Partition> shape, lambda, mu;
    std::optional<Word> word;
    std::optional<Permutation> w, u, v;
    std::string pattern_path, left_path, right_path, output_path;
    std::string format = "json";
    Entry max_weight = 3;
    unsigned threads = 1;
    bool force = false;
    bool count_only = false;
    bool dual = false;
    bool opposite = false;
    bool decompose = false;
    bool mirror_tensor = false;
    std::string help;  // set when --help was requested
};

/// Arguments exclude the program name. Throws UsageError on bad input and
/// GuardError when a requested pair or pattern set exceeds the default
/// limit and --force is absent.
RunConfig parse_args(const std::vector<std::string>& args);

/// Returns an ExitCode. Library errors propagate.
int run(const RunConfig& config, std::ostream& out);

/// parse_args + run with every error mapped to its exit code.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gtkk::cli
