#pragma once

#include <stdexcept>
#include <string>

namespace skex {

/// Error with a stable machine-readable code (used verbatim on the wire
/// protocol and in CLI diagnostics).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& message)
        : std::runtime_error(code + ": " + message), code_(std::move(code)) {}

    const std::string& code() const { return code_; }

private:
    std::string code_;
};

[[noreturn]] inline void raise(const std::string& code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace skex
