#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace oddref {

/// Domain error kinds. The names are part of the CLI contract (emitted verbatim).
enum class ErrorKind {
    NotDivisible,
    DivideByZero,
    NotSplitOverRationals,
    InvalidRational,
    InvalidParity,
    InvalidPartition,
    SameParity,
    NotHook,
    ParityMismatch,
    InvalidLWeight,
    NotStandardParity,
    IncompatibleCounts,
    WrongRank,
    NegativeMultiplicity,
    NonTermination,
    NotContained,
    TooManyTableaux,
    PoleAtEvaluation,
    NotASolution,
    DegenerateReproduction,
    OrderMismatch,
    IndexOutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }
    std::string_view name() const noexcept { return to_string(kind_); }

private:
    ErrorKind kind_;
};

}  // namespace oddref
