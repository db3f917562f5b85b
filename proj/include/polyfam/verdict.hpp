#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfam/rational.hpp"

namespace polyfam {

enum class VerdictStatus { Verified, Refuted, NoneFound, NotApplicable };

std::string status_name(VerdictStatus s);

struct Verdict {
  VerdictStatus status = VerdictStatus::NoneFound;
  std::optional<Point> kappa;
  std::int64_t budget = 0;
  /// Parameters exhibiting a refutation (empty unless refuted).
  std::vector<Point> witness;
  /// Number of individual checks carried out.
  std::int64_t checks = 0;
  std::string detail;

  bool verified() const { return status == VerdictStatus::Verified; }
  bool refuted() const { return status == VerdictStatus::Refuted; }
};

}  // namespace polyfam
