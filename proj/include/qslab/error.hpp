#pragma once

#include <stdexcept>
#include <string>

namespace qslab {

// Failure categories surfaced through the C API as status codes.
enum class Errc {
  domain_error = 1,
  degenerate_lame,
  vacuum_singular,
  extinction_regime,
  no_scaling_invariance,
  stability_violation,
  inconsistent_triple,
  parse_error,
  semantic_error,
  io_error,
  nan_abort,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) { throw Error(code, msg); }

inline const char* errc_name(Errc c) {
  switch (c) {
    case Errc::domain_error: return "DomainError";
    case Errc::degenerate_lame: return "DegenerateLame";
    case Errc::vacuum_singular: return "VacuumSingular";
    case Errc::extinction_regime: return "ExtinctionRegime";
    case Errc::no_scaling_invariance: return "NoScalingInvariance";
    case Errc::stability_violation: return "StabilityViolation";
    case Errc::inconsistent_triple: return "InconsistentTriple";
    case Errc::parse_error: return "ParseError";
    case Errc::semantic_error: return "SemanticError";
    case Errc::io_error: return "IoError";
    case Errc::nan_abort: return "NanAbort";
    case Errc::internal: return "InternalError";
  }
  return "UnknownError";
}

}  // namespace qslab
