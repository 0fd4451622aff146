#pragma once

#include <stdexcept>
#include <string>

namespace bnsi {

// An enumeration, search or table would exceed its desk-scale guard.
// CLI maps this to exit code 3.
struct GuardExceeded : std::runtime_error {
    explicit GuardExceeded(const std::string& msg) : std::runtime_error(msg) {}
};

struct UnsupportedField : std::invalid_argument {
    explicit UnsupportedField(const std::string& msg) : std::invalid_argument(msg) {}
};

struct ZeroInverse : std::domain_error {
    ZeroInverse() : std::domain_error("inverse of zero field element") {}
};

struct DimensionMismatch : std::invalid_argument {
    explicit DimensionMismatch(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DependentRows : std::invalid_argument {
    explicit DependentRows(const std::string& msg) : std::invalid_argument(msg) {}
};

struct EmptyKeepSet : std::invalid_argument {
    EmptyKeepSet() : std::invalid_argument("induced subproblem needs a nonempty index set") {}
};

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

// Two error vectors of weight <= delta_s map to the same syndrome; the
// encoder matrix is not valid.
struct DuplicateSyndrome : std::runtime_error {
    explicit DuplicateSyndrome(const std::string& msg) : std::runtime_error(msg) {}
};

struct TableTooLarge : GuardExceeded {
    explicit TableTooLarge(const std::string& msg) : GuardExceeded(msg) {}
};

// Syndrome has no pre-image of weight <= delta_s: the true error weight
// exceeded the contract.
struct SyndromeNotFound : std::runtime_error {
    explicit SyndromeNotFound(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionViolated : std::invalid_argument {
    explicit PreconditionViolated(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DistanceTooSmall : std::invalid_argument {
    explicit DistanceTooSmall(const std::string& msg) : std::invalid_argument(msg) {}
};

struct FieldTooSmall : std::invalid_argument {
    explicit FieldTooSmall(const std::string& msg) : std::invalid_argument(msg) {}
};

struct DegenerateCode : std::invalid_argument {
    explicit DegenerateCode(const std::string& msg) : std::invalid_argument(msg) {}
};

struct InvalidEncoder : std::invalid_argument {
    explicit InvalidEncoder(const std::string& msg) : std::invalid_argument(msg) {}
};

}  // namespace bnsi
