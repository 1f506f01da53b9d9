#pragma once

#include <stdexcept>
#include <string>

namespace lempert {

// Base class for every failure the library reports deliberately.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionMismatch : Error { using Error::Error; };
struct OutsideDomain : Error { using Error::Error; };
struct NoAutomorphism : Error { using Error::Error; };

struct BranchFailure : Error { using Error::Error; };
struct DenominatorUnderflow : Error { using Error::Error; };
struct RadiusTooLarge : Error { using Error::Error; };

struct ZeroOnContour : Error { using Error::Error; };
struct NoRootInDisc : Error { using Error::Error; };
struct MultipleRoots : Error { using Error::Error; };
struct NewtonDivergence : Error { using Error::Error; };
struct DegeneratePairing : Error { using Error::Error; };
struct DegenerateGradient : Error { using Error::Error; };
struct MixedGeodesics : Error { using Error::Error; };

struct AllSamplesDegenerate : Error { using Error::Error; };
struct NotALeftInverse : Error { using Error::Error; };

}  // namespace lempert
