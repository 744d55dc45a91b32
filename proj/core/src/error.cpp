#include "k3dual/error.hpp"

#include <array>
#include <utility>

namespace k3dual {

namespace {

constexpr std::array<std::pair<ErrorCode, std::string_view>, 26> kNames{{
    {ErrorCode::ZeroPolynomial, "ZeroPolynomial"},
    {ErrorCode::DegreeTooLow, "DegreeTooLow"},
    {ErrorCode::DegreeMismatch, "DegreeMismatch"},
    {ErrorCode::ParseError, "ParseError"},
    {ErrorCode::DegenerateModel, "DegenerateModel"},
    {ErrorCode::NonMinimal, "NonMinimal"},
    {ErrorCode::InconsistentValuations, "InconsistentValuations"},
    {ErrorCode::UnknownLattice, "UnknownLattice"},
    {ErrorCode::DegenerateLattice, "DegenerateLattice"},
    {ErrorCode::NotTwoElementary, "NotTwoElementary"},
    {ErrorCode::NotApplicable, "NotApplicable"},
    {ErrorCode::NotOnCurve, "NotOnCurve"},
    {ErrorCode::BasePointRamified, "BasePointRamified"},
    {ErrorCode::SingularCurve, "SingularCurve"},
    {ErrorCode::SingularH, "SingularH"},
    {ErrorCode::UnitViolation, "UnitViolation"},
    {ErrorCode::ZeroScale, "ZeroScale"},
    {ErrorCode::SingularBranchFiber, "SingularBranchFiber"},
    {ErrorCode::MissingFactorization, "MissingFactorization"},
    {ErrorCode::NormalizationViolated, "NormalizationViolated"},
    {ErrorCode::DegenerateInput, "DegenerateInput"},
    {ErrorCode::GenericityViolated, "GenericityViolated"},
    {ErrorCode::ParameterConstraintViolated, "ParameterConstraintViolated"},
    {ErrorCode::NoRationalCubicRoot, "NoRationalCubicRoot"},
    {ErrorCode::NonSquareDiscriminant, "NonSquareDiscriminant"},
    {ErrorCode::DivisionGuard, "DivisionGuard"},
}};

}  // namespace

std::string_view to_string(ErrorCode code) {
  for (const auto& [c, name] : kNames)
    if (c == code) return name;
  return "Unknown";
}

bool parse_error_code(std::string_view name, ErrorCode& out) {
  for (const auto& [c, n] : kNames) {
    if (n == name) {
      out = c;
      return true;
    }
  }
  return false;
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

void fail(ErrorCode code, const std::string& detail) { throw Error(code, detail); }

}  // namespace k3dual
