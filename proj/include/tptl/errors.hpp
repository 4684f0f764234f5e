#pragma once

#include <stdexcept>
#include <string>

namespace tptl {

class TptlError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define TPTL_ERROR(Name)                     \
    class Name : public TptlError {          \
    public:                                  \
        using TptlError::TptlError;          \
    }

TPTL_ERROR(OpenFormula);
TPTL_ERROR(EmptyWord);
TPTL_ERROR(NotNormalized);
TPTL_ERROR(NoValidPartition);
TPTL_ERROR(NotVeryWeak);
TPTL_ERROR(NotUnilateral);
TPTL_ERROR(StateCapExceeded);
TPTL_ERROR(DnfBlowupLimit);
TPTL_ERROR(Infeasible);
TPTL_ERROR(PunctualInterval);
TPTL_ERROR(NonIntegerBound);
TPTL_ERROR(NotInFragment);

#undef TPTL_ERROR

}  // namespace tptl
