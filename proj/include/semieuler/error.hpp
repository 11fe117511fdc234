#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace semieuler {

/// Failure kinds raised by the library. The names double as the
/// machine-readable reason tokens printed by the command-line tool.
enum class ErrorCode {
    // scalars
    DivisionByNonUnit,
    PoleAtPoint,
    FieldMismatch,
    InvalidField,
    ParseError,
    // exact_linalg
    ShapeMismatch,
    NonSquare,
    NotSkew,
    OddDimension,
    OddSkewRank,
    NotUnitDeterminant,
    // complexes
    NotAComplex,
    NotAChainMap,
    LengthExceedsTwist,
    // pairings
    NotChainCompatible,
    NotSymmetric,
    CharTwo,
    NotPerfect,
    NotPerfectOnCohomology,
    // specialization / lab
    SkewnessViolation,
    EvenTwist,
    InfeasibleRanks,
    Internal,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail, std::optional<long> degree = std::nullopt);

    ErrorCode code() const noexcept { return code_; }
    /// Offending degree (or index p) when the failure is localized.
    std::optional<long> degree() const noexcept { return degree_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorCode code_;
    std::string detail_;
    std::optional<long> degree_;
};

}  // namespace semieuler
