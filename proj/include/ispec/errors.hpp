#pragma once

#include <stdexcept>
#include <string>

namespace ispec {

// Bad input: dimension mismatch, malformed file, violated precondition.
// The CLI maps this to exit code 2.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Problem dimension exceeds a configured enumeration cap. CLI exit code 3.
class CapExceededError : public std::runtime_error {
public:
    explicit CapExceededError(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace ispec
