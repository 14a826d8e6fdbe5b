#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace scatspec {

// Invalid input: malformed term text, out-of-domain arguments (n = 0, Zero
// where a nonempty chain is required, ...). Carries a stable machine code.
class DomainError : public std::runtime_error {
public:
    DomainError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

// Syntax error in a chain expression, with the byte offset of the failure.
class ParseError : public DomainError {
public:
    ParseError(const std::string& what, std::size_t position)
        : DomainError("parse-error", what + " (at position " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// An exhaustive enumeration would exceed the documented desk-scale bound.
class GuardError : public std::runtime_error {
public:
    GuardError(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

}  // namespace scatspec
