#pragma once

#include <stdexcept>
#include <string>

namespace pk {

enum class ErrorCode {
  ParseError,
  DegeneratePair,
  NotCoprime,
  UnsupportedSymbol,
  PoleOnEvaluationPoint,
  PoleOnGrid,
  IllConditioned,
  NotInHardySpace,
  NotRegularPoint,
  NotInKernel,
  EmptyKernel,
  NotContained,
  KernelTooSmall,
  AlphaTooSmall,
  PoleRegionViolation,
  RankDeficientInput,
  VerificationMismatch,
  Internal,
};

inline const char* error_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DegeneratePair: return "DegeneratePair";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::UnsupportedSymbol: return "UnsupportedSymbol";
    case ErrorCode::PoleOnEvaluationPoint: return "PoleOnEvaluationPoint";
    case ErrorCode::PoleOnGrid: return "PoleOnGrid";
    case ErrorCode::IllConditioned: return "IllConditioned";
    case ErrorCode::NotInHardySpace: return "NotInHardySpace";
    case ErrorCode::NotRegularPoint: return "NotRegularPoint";
    case ErrorCode::NotInKernel: return "NotInKernel";
    case ErrorCode::EmptyKernel: return "EmptyKernel";
    case ErrorCode::NotContained: return "NotContained";
    case ErrorCode::KernelTooSmall: return "KernelTooSmall";
    case ErrorCode::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorCode::PoleRegionViolation: return "PoleRegionViolation";
    case ErrorCode::RankDeficientInput: return "RankDeficientInput";
    case ErrorCode::VerificationMismatch: return "VerificationMismatch";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace pk
