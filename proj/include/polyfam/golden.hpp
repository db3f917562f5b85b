#pragma once

// Named fans and families used by the CLI, the fixtures and the test suites.

#include <string>
#include <vector>

#include "polyfam/family.hpp"
#include "polyfam/fan.hpp"

namespace polyfam::golden {

/// Rays (1,0), (0,1), (-1,-1).
Fan projective_plane();
/// Rays e1, e2, -e1, -e2 with the four quadrants.
Fan product_of_lines();
/// Hirzebruch surface F_a: rays (1,0), (0,1), (-1,a), (0,-1).
Fan hirzebruch(std::int64_t a);
/// Rays +1, -1 in R^1.
Fan line();

/// Fan by name: "p2", "p1xp1", "f1", "f2", "line".
Fan fan_named(const std::string& name);
std::vector<std::string> fan_names();

/// [0, 3g] for g >= 0: normals (1), (-1), offset rows 0 and -3.
LinearFamily tripled_segment();
/// Box base [-p, q]^2 in lambda-space (rays +-e1, +-e2).
LinearFamily box_base();
/// Source cone {(t1, t2, x) : 0 <= x <= t1, x <= t2} projected to (t1, t2).
ChamberedFamily min_projection();

/// Family by name; see family_names().
LinearFamily family_named(const std::string& name);
/// Families expected to be linear.
std::vector<std::string> family_names();

}  // namespace polyfam::golden
