#pragma once

#include <stdexcept>
#include <string>

namespace pconf {

// Kind decides the CLI exit code: 1 domain/usage, 2 identity falsified, 3 numerical budget.
enum class ErrorKind { Domain, IdentityFalsified, NumericalBudget };

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& name, const std::string& what)
        : std::runtime_error(name + ": " + what), kind_(kind), name_(name) {}
    ErrorKind kind() const noexcept { return kind_; }
    const std::string& name() const noexcept { return name_; }

private:
    ErrorKind kind_;
    std::string name_;
};

#define PCONF_DEFINE_ERROR(Name, Kind)                                        \
    class Name : public Error {                                               \
    public:                                                                   \
        explicit Name(const std::string& what = "")                           \
            : Error(ErrorKind::Kind, #Name, what) {}                          \
    };

PCONF_DEFINE_ERROR(NonDivisible, IdentityFalsified)
PCONF_DEFINE_ERROR(HalfIntegerM, IdentityFalsified)
PCONF_DEFINE_ERROR(DegenerateDenominator, IdentityFalsified)
PCONF_DEFINE_ERROR(UnclassifiedSingularity, IdentityFalsified)
PCONF_DEFINE_ERROR(PoleHit, NumericalBudget)
PCONF_DEFINE_ERROR(QuadratureDivergence, NumericalBudget)
PCONF_DEFINE_ERROR(TruncationBudgetExceeded, NumericalBudget)
PCONF_DEFINE_ERROR(BranchTrackingFailure, NumericalBudget)
PCONF_DEFINE_ERROR(GammaPole, Domain)
PCONF_DEFINE_ERROR(BarnesZero, Domain)
PCONF_DEFINE_ERROR(NonExactPower, Domain)
PCONF_DEFINE_ERROR(ZeroInitialValue, Domain)
PCONF_DEFINE_ERROR(DegenerateLambda, Domain)
PCONF_DEFINE_ERROR(NonGeneric, Domain)
PCONF_DEFINE_ERROR(ExcludedReMu, Domain)

#undef PCONF_DEFINE_ERROR

}  // namespace pconf
