#include "oddref/error.hpp"

namespace oddref {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::DivideByZero: return "DivideByZero";
    case ErrorKind::NotSplitOverRationals: return "NotSplitOverRationals";
    case ErrorKind::InvalidRational: return "InvalidRational";
    case ErrorKind::InvalidParity: return "InvalidParity";
    case ErrorKind::InvalidPartition: return "InvalidPartition";
    case ErrorKind::SameParity: return "SameParity";
    case ErrorKind::NotHook: return "NotHook";
    case ErrorKind::ParityMismatch: return "ParityMismatch";
    case ErrorKind::InvalidLWeight: return "InvalidLWeight";
    case ErrorKind::NotStandardParity: return "NotStandardParity";
    case ErrorKind::IncompatibleCounts: return "IncompatibleCounts";
    case ErrorKind::WrongRank: return "WrongRank";
    case ErrorKind::NegativeMultiplicity: return "NegativeMultiplicity";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::TooManyTableaux: return "TooManyTableaux";
    case ErrorKind::PoleAtEvaluation: return "PoleAtEvaluation";
    case ErrorKind::NotASolution: return "NotASolution";
    case ErrorKind::DegenerateReproduction: return "DegenerateReproduction";
    case ErrorKind::OrderMismatch: return "OrderMismatch";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    }
    return "Unknown";
}

}  // namespace oddref
