#ifndef RANKAUDIT_ERROR_HPP
#define RANKAUDIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace rankaudit {

/// Failure categories for every operation in the library. The CLI maps
/// load-time failures to exit 1 and run-time failures to exit 2; the code
/// itself is what tests assert on.
enum class ErrorCode {
    DimensionMismatch,
    DuplicateName,
    NonFiniteValue,
    NonPositiveWeight,
    UnknownAlternative,
    UnknownCriterion,
    InvalidRank,
    DuplicateLabel,
    MismatchedAlternatives,
    TooFewEntries,
    ExtraKeyConflict,
    MinimizeNotInverted,
    ZeroColumnNorm,
    DegenerateIdeal,
    ZeroInMinimizeColumn,
    AllFiltered,
    TargetIsOptimal,
    PipelineEliminatedAlternatives,
    NotAnRrt1Comparator,
    NTooSmall,
    NotATournament,
    AlreadyAcyclic,
    CycleDetected,
    ParseError,
    MissingObjective,
    MissingWeight,
    UnknownStage,
    InvalidConfig,
};

const char* to_string(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

} // namespace rankaudit

#endif // RANKAUDIT_ERROR_HPP
