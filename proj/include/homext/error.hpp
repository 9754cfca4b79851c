#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homext {

enum class ErrorKind {
  InvalidRing,
  InvalidModule,
  InvalidMorphism,
  RingMismatch,
  ParentMismatch,
  SourceMismatch,
  TargetMismatch,
  Incompatible,
  NotSurjective,
  NotInjective,
  AlphaNotKernelIso,
  AlphaNotCokernelIso,
  AxiomViolation,
  BoundExceeded,
  ParseError,
};

std::string_view error_kind_name(ErrorKind kind);

// Every library failure carries a kind so callers (the CLI in particular)
// can name the violated invariant.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidRing: return "InvalidRing";
    case ErrorKind::InvalidModule: return "InvalidModule";
    case ErrorKind::InvalidMorphism: return "InvalidMorphism";
    case ErrorKind::RingMismatch: return "RingMismatch";
    case ErrorKind::ParentMismatch: return "ParentMismatch";
    case ErrorKind::SourceMismatch: return "SourceMismatch";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::Incompatible: return "Incompatible";
    case ErrorKind::NotSurjective: return "NotSurjective";
    case ErrorKind::NotInjective: return "NotInjective";
    case ErrorKind::AlphaNotKernelIso: return "AlphaNotKernelIso";
    case ErrorKind::AlphaNotCokernelIso: return "AlphaNotCokernelIso";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace homext
