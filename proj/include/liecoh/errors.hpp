#pragma once

#include <stdexcept>
#include <string>

namespace liecoh {

/// Base error. Every error carries a stable machine-readable code next to the
/// human-readable message; the CLI maps codes into structured JSON payloads.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& msg)
        : std::runtime_error(msg), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

/// Malformed input: bad dimensions, bad file contents, unknown names.
class InputError : public Error {
public:
    explicit InputError(const std::string& msg) : Error("input", msg) {}
    InputError(std::string code, const std::string& msg) : Error(std::move(code), msg) {}
};

class ParseError : public InputError {
public:
    explicit ParseError(const std::string& msg) : InputError("parse", msg) {}
};

/// Raised when a sign/order query is made on a scalar that depends on the
/// formal transcendental: the rational-function field carries no canonical order.
class UnorderedScalar : public Error {
public:
    explicit UnorderedScalar(const std::string& msg) : Error("unordered-scalar", msg) {}
};

class NotASubalgebra : public Error {
public:
    explicit NotASubalgebra(const std::string& msg) : Error("not-a-subalgebra", msg) {}
};

class NotAnIdeal : public Error {
public:
    explicit NotAnIdeal(const std::string& msg) : Error("not-an-ideal", msg) {}
};

/// Differential form handed to the homotopy builder is not closed.
class NotClosed : public Error {
public:
    explicit NotClosed(const std::string& msg) : Error("not-closed", msg) {}
};

/// A cochain complex whose differentials fail D∘D = 0; signals corrupted data.
class DSquaredNonzero : public Error {
public:
    explicit DSquaredNonzero(const std::string& msg) : Error("d-squared-nonzero", msg) {}
};

class SizeCapExceeded : public Error {
public:
    explicit SizeCapExceeded(const std::string& msg) : Error("size-cap", msg) {}
};

} // namespace liecoh
