#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace latknot {

enum class ErrorCode {
  IndexOutOfRange,
  DegenerateArc,
  BindingDegree,
  Disconnected,
  NotStarShaped,
  SelfIntersection,
  NoGenericDirection,
  CrossingCapExceeded,
  ZeroPolynomial,
  ArcCountOutOfRange,
  TorusParameterMismatch,
  Parse,
  InternalInvariant,
};

inline std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
  case ErrorCode::DegenerateArc: return "DegenerateArc";
  case ErrorCode::BindingDegree: return "BindingDegree";
  case ErrorCode::Disconnected: return "Disconnected";
  case ErrorCode::NotStarShaped: return "NotStarShaped";
  case ErrorCode::SelfIntersection: return "SelfIntersection";
  case ErrorCode::NoGenericDirection: return "NoGenericDirection";
  case ErrorCode::CrossingCapExceeded: return "CrossingCapExceeded";
  case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
  case ErrorCode::ArcCountOutOfRange: return "ArcCountOutOfRange";
  case ErrorCode::TorusParameterMismatch: return "TorusParameterMismatch";
  case ErrorCode::Parse: return "Parse";
  case ErrorCode::InternalInvariant: return "InternalInvariant";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string &what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

private:
  ErrorCode code_;
};

namespace detail {

[[noreturn]] inline void internal_error(const std::string &what) {
  throw Error(ErrorCode::InternalInvariant, what);
}

inline void ensure(bool cond, const char *what) {
  if (!cond)
    internal_error(what);
}

} // namespace detail
} // namespace latknot
