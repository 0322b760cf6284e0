#pragma once

#include <stdexcept>
#include <string>

namespace hodgeprobe {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// exact_linalg
struct FieldMismatch : Error { using Error::Error; };
struct NotSymmetric : Error { using Error::Error; };
struct Degenerate : Error { using Error::Error; };

// exterior
struct AmbientMismatch : Error { using Error::Error; };
struct DegreeMismatch : Error { using Error::Error; };
struct DegreeZero : Error { using Error::Error; };
struct EvenP : Error { using Error::Error; };

// weil
struct InvariantViolation : Error { using Error::Error; };
struct PropertyFailure : Error { using Error::Error; };
struct NotSurjective : Error { using Error::Error; };
struct NotComplexLinear : Error { using Error::Error; };
struct NotIntegral : Error { using Error::Error; };
struct DegreeTooLow : Error { using Error::Error; };

// analysis
struct DegenerateSplit : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct DegenerateCase : Error { using Error::Error; };
struct StrategyUnavailable : Error { using Error::Error; };

// cli
struct ParseError : Error { using Error::Error; };
struct ValidationError : Error { using Error::Error; };
struct UnknownLabel : Error { using Error::Error; };

} // namespace hodgeprobe
