#include "polyfam/golden.hpp"

#include "polyfam/error.hpp"

namespace polyfam::golden {

Fan projective_plane() { return Fan{2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}}}; }

Fan product_of_lines() { return Fan{2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}; }

Fan hirzebruch(std::int64_t a) { return Fan{2, {{1, 0}, {0, 1}, {-1, a}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}}; }

Fan line() { return Fan{1, {{1}, {-1}}, {{0}, {1}}}; }

Fan fan_named(const std::string& name) {
  if (name == "p2") return projective_plane();
  if (name == "p1xp1") return product_of_lines();
  if (name == "f1") return hirzebruch(1);
  if (name == "f2") return hirzebruch(2);
  if (name == "line") return line();
  fail(Errc::InvalidArgument, "unknown fan '" + name + "'");
}

std::vector<std::string> fan_names() { return {"p2", "p1xp1", "f1", "f2", "line"}; }

LinearFamily tripled_segment() {
  LinearFamily f;
  f.kind = "custom";
  f.cone = ParameterCone::from_inequalities(1, {{1}});
  f.ambient_dim = 1;
  f.normals = {{1}, {-1}};
  f.offset_map = {{Rational(0)}, {Rational(-3)}};
  f.coordinate_names = {"x1"};
  return f;
}

LinearFamily box_base() {
  auto f = toric_family(product_of_lines());
  f.coordinate_names = {"l1", "l2"};
  return f;
}

ChamberedFamily min_projection() {
  auto source = ParameterCone::from_inequalities(3, {{0, 0, 1}, {1, 0, -1}, {0, 1, -1}});
  Matrix pi = {{Rational(1), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}};
  return projected_family(source, pi);
}

LinearFamily family_named(const std::string& name) {
  if (name.rfind("toric-", 0) == 0) return toric_family(fan_named(name.substr(6)));
  if (name == "segment3") return tripled_segment();
  if (name == "gz2") return gz_family(2);
  if (name == "gz3") return gz_family(3);
  if (name == "gz4") return gz_family(4);
  if (name == "fibered-gl2") return fibered_family(box_base(), 1);
  if (name == "fibered-gl2-double") return fibered_family(box_base(), 2);
  if (name == "projected-min-naive") return min_projection().naive;
  if (name == "projected-min-1") return min_projection().chambers.at(0).family;
  if (name == "projected-min-2") return min_projection().chambers.at(1).family;
  fail(Errc::InvalidArgument, "unknown family '" + name + "'");
}

std::vector<std::string> family_names() {
  return {"toric-p2", "toric-p1xp1", "toric-f1",    "toric-f2",           "toric-line",      "segment3",
          "gz2",      "gz3",         "gz4",         "fibered-gl2",        "fibered-gl2-double", "projected-min-1",
          "projected-min-2"};
}

}  // namespace polyfam::golden
