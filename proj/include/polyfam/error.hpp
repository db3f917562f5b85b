#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace polyfam {

/// Every domain failure the library reports. Names match the operation
/// contracts so that CLI messages can quote them verbatim.
enum class Errc {
  UnboundedRegion,
  DimensionMismatch,
  EmptyPolytope,
  NegativeScalar,
  NotFullDimensional,
  NotInHyperplane,
  HoldoutMismatch,
  IncompleteFan,
  NotNormal,
  FanMismatch,
  NoRealizationFound,
  OutsideCone,
  LinearityNotCertified,
  FanNotSimplicial,
  FanNotComplete,
  FanNotWeylInvariant,
  UnboundedFiber,
  KappaNotInLattice,
  KappaNotInteriorOfCone,
  UniquenessViolation,
  EmbeddingNotLinear,
  SingularInterpolation,
  ZeroPolynomial,
  InvalidArgument,
};

std::string_view errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] void fail(Errc code, const std::string& detail = {});

}  // namespace polyfam
