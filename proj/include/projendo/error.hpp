#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace projendo {

/// Precondition or input violation. `code()` is a stable machine-readable tag
/// (e.g. "field-mismatch", "singular-matrix") surfaced by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& detail)
        : std::runtime_error(detail), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

/// An internal invariant failed. Signals a bug, never bad input.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

[[noreturn]] inline void fail(std::string code, const std::string& detail) {
    throw Error(std::move(code), detail);
}

inline void require(bool condition, const char* code, const std::string& detail) {
    if (!condition) throw Error(code, detail);
}

} // namespace projendo
