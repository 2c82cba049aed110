#ifndef ZSF_ERRORS_HPP
#define ZSF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace zsf {

// Machine-readable failure codes. Exceptions carry one of these so callers
// (CLI, tests) can branch without string matching.
enum class ErrorCode {
    PoleOfGamma,
    ParameterPole,
    DivergesAtOne,
    DegenerateConnection,
    BudgetExceeded,
    DegeneratePoint,
    NotUnimodular,
    UnsupportedSpace,
    QuadratureFailure,
    NonConvergent,
    OutOfStrip,
    OutsideTube,
    SlowConvergence,
    SpectralPole,
    NeedMoreTerms,
    InsufficientDecade,
    OutOfRange,
    GridTooCoarse,
    TailTruncation,
    InsufficientDecay,
    RealizationMismatch,
    NonIntegrablePair,
    ParsevalHypothesisFailed,
    InvalidArgument,
};

const char* error_code_name(ErrorCode c);

// Violated precondition or unsupported input.
class DomainError : public std::invalid_argument {
public:
    DomainError(ErrorCode code, const std::string& what)
        : std::invalid_argument(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Runtime numerical failure (non-convergence, budget exhaustion, ...).
class NumericError : public std::runtime_error {
public:
    NumericError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
          code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Gamma evaluated at a non-positive integer; carries the pole index.
class PoleOfGamma : public DomainError {
public:
    explicit PoleOfGamma(long k)
        : DomainError(ErrorCode::PoleOfGamma,
                      "Gamma pole at z = -" + std::to_string(k)),
          k_(k) {}
    long pole_index() const { return k_; }

private:
    long k_;
};

} // namespace zsf

#endif
