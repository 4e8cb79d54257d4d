#ifndef ISG_ERROR_HPP
#define ISG_ERROR_HPP

#include <stdexcept>
#include <string>

namespace isg {

enum class ErrorCode {
  DegreeMismatch,
  ClosureTooLarge,
  NotASubsemigroup,
  ZeroProjection,
  NoLeadingCoefficient,
  NumericalDegeneracy,
  NotUnitary,
  InvalidAlgebra,
  ParseError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::ClosureTooLarge: return "ClosureTooLarge";
    case ErrorCode::NotASubsemigroup: return "NotASubsemigroup";
    case ErrorCode::ZeroProjection: return "ZeroProjection";
    case ErrorCode::NoLeadingCoefficient: return "NoLeadingCoefficient";
    case ErrorCode::NumericalDegeneracy: return "NumericalDegeneracy";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::InvalidAlgebra: return "InvalidAlgebra";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace isg

#endif
