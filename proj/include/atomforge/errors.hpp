#pragma once

#include <stdexcept>
#include <string>

namespace atomforge {

// Every failure the library can signal carries a stable code string; the CLI
// maps codes to exit statuses (2 = bad input, 3 = factorization overflow,
// 1 = certificate verification failure).
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

#define ATOMFORGE_ERROR(Name)                                        \
    class Name : public Error {                                      \
    public:                                                          \
        explicit Name(const std::string& what = #Name)               \
            : Error(#Name, what) {}                                  \
    }

ATOMFORGE_ERROR(ZeroElement);
ATOMFORGE_ERROR(IsUnit);
ATOMFORGE_ERROR(NotComaximal);
ATOMFORGE_ERROR(UnsupportedRing);
ATOMFORGE_ERROR(FactorizationOverflow);
ATOMFORGE_ERROR(BudgetExceeded);
ATOMFORGE_ERROR(OutsideSoundnessWindow);
ATOMFORGE_ERROR(WrongRingShape);
ATOMFORGE_ERROR(NotCoprime);
ATOMFORGE_ERROR(InvalidPrimeList);
ATOMFORGE_ERROR(InvariantViolation);
ATOMFORGE_ERROR(NotPositive);
ATOMFORGE_ERROR(ZeroLeadingCoefficient);
ATOMFORGE_ERROR(InvalidParameters);
ATOMFORGE_ERROR(InvalidInput);
ATOMFORGE_ERROR(VerificationFailure);

#undef ATOMFORGE_ERROR

} // namespace atomforge
