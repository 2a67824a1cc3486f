#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace polycert::cli {

inline constexpr const char* kVersion = "1.0.0";

enum ExitCode : int { Certified = 0, Rejected = 1, InputError = 2 };

struct RuleReport {
    std::size_t number = 0;  // 1-based
    std::string rule;
    std::string constraint;
    std::string verdict;  // "PROVEN" | "UNKNOWN"
    std::string reason;
    std::string detail;
    std::optional<std::string> counterexample;
    std::vector<std::string> steps;
};

struct Report {
    std::string input;
    std::string verdict;  // "CERTIFIED" | "REJECTED" | "ERROR"
    std::vector<RuleReport> rules;
    std::optional<std::string> error;
    std::int64_t timing_ms = 0;
    std::string version = kVersion;
};

/// Canonical JSON: sorted keys, two-space indent, trailing newline.
std::string serialize(const Report& report);
std::string serialize(const std::vector<Report>& batch);

struct VerifyOptions {
    std::size_t samples = 1000;
    std::size_t backtrack = 64;
};

struct VerifyOutcome {
    int exit_code = InputError;
    Report report;
    std::string log;   // human-readable, for stdout
    std::string diag;  // diagnostics, for stderr
};

VerifyOutcome verify_text(const std::string& input_name, const std::string& text, const VerifyOptions& options);
VerifyOutcome verify_file(const std::string& path, const VerifyOptions& options);

/// `polycert verify ...` / `polycert synth ...`; returns the exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace polycert::cli
