#include "polyfam/error.hpp"

namespace polyfam {

std::string_view errc_name(Errc code) {
  switch (code) {
    case Errc::UnboundedRegion: return "UnboundedRegion";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::EmptyPolytope: return "EmptyPolytope";
    case Errc::NegativeScalar: return "NegativeScalar";
    case Errc::NotFullDimensional: return "NotFullDimensional";
    case Errc::NotInHyperplane: return "NotInHyperplane";
    case Errc::HoldoutMismatch: return "HoldoutMismatch";
    case Errc::IncompleteFan: return "IncompleteFan";
    case Errc::NotNormal: return "NotNormal";
    case Errc::FanMismatch: return "FanMismatch";
    case Errc::NoRealizationFound: return "NoRealizationFound";
    case Errc::OutsideCone: return "OutsideCone";
    case Errc::LinearityNotCertified: return "LinearityNotCertified";
    case Errc::FanNotSimplicial: return "FanNotSimplicial";
    case Errc::FanNotComplete: return "FanNotComplete";
    case Errc::FanNotWeylInvariant: return "FanNotWeylInvariant";
    case Errc::UnboundedFiber: return "UnboundedFiber";
    case Errc::KappaNotInLattice: return "KappaNotInLattice";
    case Errc::KappaNotInteriorOfCone: return "KappaNotInteriorOfCone";
    case Errc::UniquenessViolation: return "UniquenessViolation";
    case Errc::EmbeddingNotLinear: return "EmbeddingNotLinear";
    case Errc::SingularInterpolation: return "SingularInterpolation";
    case Errc::ZeroPolynomial: return "ZeroPolynomial";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(std::string(errc_name(code)) + (detail.empty() ? "" : ": " + detail)),
      code_(code) {}

void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace polyfam
