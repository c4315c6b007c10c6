#pragma once

#include <stdexcept>
#include <string>

namespace cyclosum {

/// Base for all domain errors. `kind()` is the stable machine-readable name
/// used by the CLI ("NotPrime: 15 is not prime", exit code 2).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define CYCLOSUM_DEFINE_ERROR(Name)                                       \
    class Name : public Error {                                           \
    public:                                                               \
        explicit Name(const std::string& what) : Error(#Name, what) {}    \
    }

CYCLOSUM_DEFINE_ERROR(NotPrime);
CYCLOSUM_DEFINE_ERROR(CongruenceFailed);
CYCLOSUM_DEFINE_ERROR(DegenerateField);
CYCLOSUM_DEFINE_ERROR(ZeroArgument);
CYCLOSUM_DEFINE_ERROR(NotAUnit);
CYCLOSUM_DEFINE_ERROR(NotDivisible);
CYCLOSUM_DEFINE_ERROR(BadOrder);
CYCLOSUM_DEFINE_ERROR(BadField);
CYCLOSUM_DEFINE_ERROR(TheoremViolation);
CYCLOSUM_DEFINE_ERROR(BadD);
CYCLOSUM_DEFINE_ERROR(BadN);
CYCLOSUM_DEFINE_ERROR(CacheMismatch);

#undef CYCLOSUM_DEFINE_ERROR

} // namespace cyclosum
