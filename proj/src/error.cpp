#include "semieuler/error.hpp"

namespace semieuler {

std::string_view error_name(ErrorCode code)
{
    switch (code) {
    case ErrorCode::DivisionByNonUnit: return "DivisionByNonUnit";
    case ErrorCode::PoleAtPoint: return "PoleAtPoint";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::InvalidField: return "InvalidField";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NotSkew: return "NotSkew";
    case ErrorCode::OddDimension: return "OddDimension";
    case ErrorCode::OddSkewRank: return "OddSkewRank";
    case ErrorCode::NotUnitDeterminant: return "NotUnitDeterminant";
    case ErrorCode::NotAComplex: return "NotAComplex";
    case ErrorCode::NotAChainMap: return "NotAChainMap";
    case ErrorCode::LengthExceedsTwist: return "LengthExceedsTwist";
    case ErrorCode::NotChainCompatible: return "NotChainCompatible";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::CharTwo: return "CharTwo";
    case ErrorCode::NotPerfect: return "NotPerfect";
    case ErrorCode::NotPerfectOnCohomology: return "NotPerfectOnCohomology";
    case ErrorCode::SkewnessViolation: return "SkewnessViolation";
    case ErrorCode::EvenTwist: return "EvenTwist";
    case ErrorCode::InfeasibleRanks: return "InfeasibleRanks";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

namespace {

std::string compose(ErrorCode code, const std::string& detail, std::optional<long> degree)
{
    std::string msg(error_name(code));
    if (degree)
        msg += " at degree " + std::to_string(*degree);
    if (!detail.empty())
        msg += ": " + detail;
    return msg;
}

}  // namespace

Error::Error(ErrorCode code, const std::string& detail, std::optional<long> degree)
    : std::runtime_error(compose(code, detail, degree)), code_(code), detail_(detail), degree_(degree)
{
}

}  // namespace semieuler
