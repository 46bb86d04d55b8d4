#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace weylkit {

// Base class for all domain errors. `code()` is a stable machine-readable
// tag used by the CLI when mapping failures to report outcomes.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}

    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class DivisionByZero : public Error {
public:
    explicit DivisionByZero(const std::string& what = "division by zero")
        : Error("division-by-zero", what) {}
};

class ZeroElement : public Error {
public:
    explicit ZeroElement(const std::string& what = "operation undefined for the zero element")
        : Error("zero-element", what) {}
};

class DegreeLimitExceeded : public Error {
public:
    explicit DegreeLimitExceeded(const std::string& what)
        : Error("degree-limit-exceeded", what) {}
};

class InvalidRelation : public Error {
public:
    explicit InvalidRelation(const std::string& what)
        : Error("invalid-relation", what) {}
};

class NotInvolutive : public Error {
public:
    explicit NotInvolutive(const std::string& what)
        : Error("not-involutive", what) {}
};

class ConstraintViolated : public Error {
public:
    explicit ConstraintViolated(const std::string& what)
        : Error("constraint-violated", what) {}
};

class NotFamilyForm : public Error {
public:
    explicit NotFamilyForm(const std::string& what)
        : Error("not-family-form", what) {}
};

class NotCentralizing : public Error {
public:
    explicit NotCentralizing(const std::string& what)
        : Error("not-centralizing", what) {}
};

// Signals that the graded elimination failed even though the input
// centralizes; for genuine centralizer members this contradicts the
// K[P] structure theorem, so callers treat it as an internal defect
// and surface it loudly.
class NotInPolynomialAlgebra : public Error {
public:
    explicit NotInPolynomialAlgebra(const std::string& what)
        : Error("not-in-polynomial-algebra", what) {}
};

class ParityViolated : public Error {
public:
    explicit ParityViolated(const std::string& what)
        : Error("parity-violated", what) {}
};

class JacobianNotConstant : public Error {
public:
    explicit JacobianNotConstant(const std::string& what)
        : Error("jacobian-not-constant", what) {}
};

class PeelingStuck : public Error {
public:
    explicit PeelingStuck(const std::string& what)
        : Error("peeling-stuck", what) {}
};

class NotInvolution : public Error {
public:
    explicit NotInvolution(const std::string& what)
        : Error("not-involution", what) {}
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, std::vector<std::string> expected, const std::string& what)
        : Error("parse-error", what), position_(position), expected_(std::move(expected)) {}

    std::size_t position() const noexcept { return position_; }
    const std::vector<std::string>& expected() const noexcept { return expected_; }

private:
    std::size_t position_;
    std::vector<std::string> expected_;
};

class InternalError : public Error {
public:
    explicit InternalError(const std::string& what)
        : Error("internal-error", what) {}
};

} // namespace weylkit
