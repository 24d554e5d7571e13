#pragma once

#include <stdexcept>
#include <string>

// Exception taxonomy for the whole library. Every throwing operation names
// one of these types so callers (and the CLI) can map failures precisely.

namespace qsr {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// graph construction / element access
struct VertexOutOfRange : Error { using Error::Error; };
struct SelfLoop : Error { using Error::Error; };
struct CapacityExceeded : Error { using Error::Error; };
struct SameVertex : Error { using Error::Error; };
struct OverlappingSets : Error { using Error::Error; };
struct TooLarge : Error { using Error::Error; };

// graph6 codec
struct MalformedHeader : Error { using Error::Error; };
struct MalformedBody : Error { using Error::Error; };
struct TruncatedBody : Error { using Error::Error; };
struct TrailingGarbage : Error { using Error::Error; };

// qsr analysis
struct NotRegular : Error { using Error::Error; };
struct AdjacentCountNotConstant : Error { using Error::Error; };
struct CompleteGraph : Error { using Error::Error; };
struct EdgelessGraph : Error { using Error::Error; };
struct UnrealizedCount : Error { using Error::Error; };
struct ParameterMismatch : Error { using Error::Error; };
struct DegreeTooSmall : Error { using Error::Error; };

// canon
struct InvalidPartition : Error { using Error::Error; };

// enumeration
struct InvalidSpec : Error { using Error::Error; };
struct BudgetExceeded : Error { using Error::Error; };
struct TooLargeForOracle : Error { using Error::Error; };

// catalog
struct UnknownName : Error { using Error::Error; };

}  // namespace qsr
