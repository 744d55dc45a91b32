#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace k3dual {

enum class ErrorCode {
  ZeroPolynomial,
  DegreeTooLow,
  DegreeMismatch,
  ParseError,
  DegenerateModel,
  NonMinimal,
  InconsistentValuations,
  UnknownLattice,
  DegenerateLattice,
  NotTwoElementary,
  NotApplicable,
  NotOnCurve,
  BasePointRamified,
  SingularCurve,
  SingularH,
  UnitViolation,
  ZeroScale,
  SingularBranchFiber,
  MissingFactorization,
  NormalizationViolated,
  DegenerateInput,
  GenericityViolated,
  ParameterConstraintViolated,
  NoRationalCubicRoot,
  NonSquareDiscriminant,
  DivisionGuard,
};

std::string_view to_string(ErrorCode code);
// Returns false when the name is not a known code.
bool parse_error_code(std::string_view name, ErrorCode& out);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& detail);

}  // namespace k3dual
