#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace galcoh::cli {

enum ExitCode : int { kOk = 0, kInternal = 1, kInvalid = 2, kUnsupported = 3, kUsage = 64 };

struct CommandResult {
    bool ok = true;
    std::string command;  // "local hilbert", "h1 c4 encode", ...
    nlohmann::json payload = nlohmann::json::object();
    std::vector<std::string> diagnostics;
    int exit_code = kOk;
};

/// argv without the program name. Never throws.
CommandResult run(const std::vector<std::string>& args);

/// {"schema": 1, "status", "command", "payload", "diagnostics"}; keys sorted,
/// two-space indent, trailing newline. Identical input gives identical bytes.
std::string render(const CommandResult& r);

std::string usage();

/// Built-in corpora behind `corpus run --suite NAME`.
std::vector<std::string> corpus_suites();
nlohmann::json run_corpus(const std::string& suite, int precision_bits);

/// Irreducible polynomials of degree <= 4 used for Galois-tag cross-checks.
const std::vector<std::string>& curated_galois_corpus();

}  // namespace galcoh::cli
