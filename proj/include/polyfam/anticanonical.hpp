#pragma once

// Budgeted verification and search for the anticanonical parameter kappa:
// N(Delta(g - kappa)) = N(interior of Delta(g)) for admissible lattice g.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfam/family.hpp"
#include "polyfam/verdict.hpp"

namespace polyfam {

struct AnticanonicalWitness {
  Point gamma;
  std::int64_t count = 0;     // N(Delta(gamma - kappa))
  std::int64_t interior = 0;  // interior count of Delta(gamma)
};

struct AnticanonicalVerdict {
  VerdictStatus status = VerdictStatus::NotApplicable;
  Point kappa;
  std::int64_t budget = 0;
  std::optional<AnticanonicalWitness> witness;
  std::vector<Point> tested;
  std::string detail;

  bool verified() const { return status == VerdictStatus::Verified; }
  bool refuted() const { return status == VerdictStatus::Refuted; }
};

/// T(B): lattice points g of B*S or kappa + B*S (S the simplex on 0 and the
/// cone generators) with g in C° and g - kappa in C, sorted.
std::vector<Point> anticanonical_test_set(const LinearFamily& f, const Point& kappa, std::int64_t budget);

/// Throws KappaNotInLattice. Not-applicable when the test set is empty or
/// Delta is not full-dimensional on C°.
AnticanonicalVerdict is_anticanonical(const LinearFamily& f, const Point& kappa, std::int64_t budget);

struct AnticanonicalSearch {
  /// One representative (least norm, then lexicographic) per surviving class
  /// modulo the lineality lattice of C.
  std::vector<Point> candidates;
  std::int64_t radius = 0;
  std::int64_t budget = 0;
  std::int64_t classes_tested = 0;
  std::int64_t points_scanned = 0;
};

/// Scans kappa with lattice coordinates in [-radius, radius]. Throws
/// UniquenessViolation if two classes survive.
AnticanonicalSearch find_anticanonical(const LinearFamily& f, std::int64_t radius, std::int64_t budget);

/// Interior lattice count of Delta(kappa) is exactly 1. Throws
/// KappaNotInteriorOfCone unless kappa lies in C°.
bool single_interior_point_check(const LinearFamily& f, const Point& kappa);

/// kappa in C°.
bool is_fano(const LinearFamily& f, const Point& kappa);

struct RaySumSample {
  Point gamma;
  Rational derivative;     // L_kappa vol at gamma
  Rational facet_volumes;  // sum of lattice facet volumes of Delta(gamma)
};

struct RaySumResult {
  bool ok = false;
  std::vector<RaySumSample> samples;
};

/// Deterministic interior samples: the deep point plus multiples of generators.
std::vector<Point> interior_samples(const LinearFamily& f, std::size_t count = 5);

/// Throws LinearityNotCertified when verify_linearity refutes the family.
RaySumResult ray_sum_check(const LinearFamily& f, const Point& kappa, std::vector<Point> samples = {});

/// Same class modulo the lineality space of C.
bool same_class(const LinearFamily& f, const Point& a, const Point& b);

struct FiberedComparison {
  std::size_t multiplicity = 0;
  AnticanonicalSearch search;
  Point claimed;
  bool agrees = false;
  std::string note;
};

/// Runs the search and compares the survivor with the all-ones support vector.
FiberedComparison fibered_comparison(const LinearFamily& f, std::size_t multiplicity, std::int64_t radius,
                                     std::int64_t budget);

}  // namespace polyfam
