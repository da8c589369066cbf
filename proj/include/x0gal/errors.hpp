#pragma once

#include <stdexcept>
#include <string>

namespace x0gal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// q-expansion arithmetic
struct LevelMismatch : Error { using Error::Error; };
struct WeightMismatch : Error { using Error::Error; };
struct PrecisionError : Error { using Error::Error; };
struct ZeroSeries : Error { using Error::Error; };
struct ZeroDivide : Error { using Error::Error; };

// relation recovery
struct LinearDependence : Error { using Error::Error; };
struct NoRelationWithinBound : Error { using Error::Error; };
struct AmbiguousKernel : Error { using Error::Error; };
struct InsufficientPrecision : Error { using Error::Error; };
struct WrongVanishingOrders : Error { using Error::Error; };
struct ResultConstantInT : Error { using Error::Error; };

// finite-field layer
struct NotPrime : Error { using Error::Error; };
struct NotSquarefree : Error { using Error::Error; };

// group identification
struct UnsupportedDegree : Error { using Error::Error; };
struct EmptyCandidates : Error { using Error::Error; };

// input handling
struct ParseError : Error { using Error::Error; };

}  // namespace x0gal
