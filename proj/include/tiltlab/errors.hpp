#pragma once

#include <stdexcept>
#include <string>

namespace tiltlab {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Quiver construction / shape errors.
struct CyclicQuiver : Error { using Error::Error; };
struct BadArrow : Error { using Error::Error; };
struct UnknownVertex : Error { using Error::Error; };
struct NotSourceOrSink : Error { using Error::Error; };
struct NotSource : Error { using Error::Error; };
struct NotSink : Error { using Error::Error; };
struct NotTypeA : Error { using Error::Error; };
struct BadInterval : Error { using Error::Error; };
struct QuiverMismatch : Error { using Error::Error; };
struct ShapeMismatch : Error { using Error::Error; };

// Enumeration / decomposition errors.
struct NotRepFinite : Error { using Error::Error; };
struct NotARoot : Error { using Error::Error; };
struct NegativeExt : Error { using Error::Error; };
struct DirectednessViolation : Error { using Error::Error; };
struct InconsistentDecomposition : Error { using Error::Error; };
struct TableMismatch : Error { using Error::Error; };
struct NotAPartialOrder : Error { using Error::Error; };
struct NotMonotone : Error { using Error::Error; };
struct HasSimpleSummandAtX : Error { using Error::Error; };
struct ContainsSimpleAtX : Error { using Error::Error; };
struct GuardExceeded : Error { using Error::Error; };

// Internal consistency failures that should never fire on valid input.
struct EngineBug : Error { using Error::Error; };

}  // namespace tiltlab
