#pragma once

#include <stdexcept>
#include <string>

namespace dahakit {

struct BackendMismatch : std::invalid_argument {
    explicit BackendMismatch(const std::string& what)
        : std::invalid_argument("backend mismatch: " + what) {}
};

struct DivisionByZero : std::domain_error {
    explicit DivisionByZero(const std::string& what = "division by zero") : std::domain_error(what) {}
};

struct NotInvertible : std::domain_error {
    explicit NotInvertible(const std::string& what) : std::domain_error("not invertible: " + what) {}
};

struct SingularMatrix : std::domain_error {
    explicit SingularMatrix(const std::string& what) : std::domain_error("singular matrix: " + what) {}
};

struct ClosureOverflow : std::runtime_error {
    explicit ClosureOverflow(const std::string& witness)
        : std::runtime_error("closure overflow at weight " + witness), witness(witness) {}
    std::string witness;
};

struct UnsupportedType : std::invalid_argument {
    explicit UnsupportedType(const std::string& label)
        : std::invalid_argument("unsupported root system type: " + label) {}
};

struct IncompatibleParameters : std::invalid_argument {
    explicit IncompatibleParameters(const std::string& what) : std::invalid_argument(what) {}
};

// signals a bug (e.g. a divided difference that leaves a remainder)
struct InternalError : std::logic_error {
    explicit InternalError(const std::string& what) : std::logic_error("internal error: " + what) {}
};

}  // namespace dahakit
