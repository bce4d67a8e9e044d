#pragma once

#include <stdexcept>
#include <string>

namespace galcoh {

/// Input violates an operation's precondition (malformed, out of domain,
/// not étale, not a cocycle, ...). The CLI maps this to exit code 2.
class InvalidInput : public std::invalid_argument {
public:
    explicit InvalidInput(const std::string& what) : std::invalid_argument(what) {}
};

/// Input is well formed but lies outside the supported scope (degree caps,
/// wild ramification, missing structure). The CLI maps this to exit code 3.
class Unsupported : public std::runtime_error {
public:
    explicit Unsupported(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace galcoh
