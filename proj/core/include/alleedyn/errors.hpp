#pragma once

#include <stdexcept>
#include <string>

namespace alleedyn {

/// Base class for all toolkit errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NonPositiveParam : Error { using Error::Error; };
struct AlleeOutOfRange : Error { using Error::Error; };
struct InvalidStep : Error { using Error::Error; };
struct ConditionNotMet : Error { using Error::Error; };
struct SingularDenominator : Error { using Error::Error; };
struct NotAnEquilibrium : Error { using Error::Error; };
struct StepUnderflow : Error { using Error::Error; };
struct NonFiniteState : Error { using Error::Error; };
struct InvalidRange : Error { using Error::Error; };

}  // namespace alleedyn
