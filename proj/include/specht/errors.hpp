#pragma once

#include <stdexcept>
#include <string>

namespace specht {

/// Raised when a modulus is not a supported prime.
class InvalidModulus : public std::invalid_argument {
public:
    explicit InvalidModulus(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when an argument lies outside the domain of an operation
/// (len_p(0), a non-James input to a James-only operation, ...).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

class InvalidPartition : public std::invalid_argument {
public:
    explicit InvalidPartition(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace specht
