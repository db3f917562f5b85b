#include "polyfam/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "polyfam/error.hpp"

namespace polyfam::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t read_size(const Json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw SchemaError("expected a non-negative integer");
  return j.get<std::size_t>();
}

std::int64_t read_int(const Json& j) {
  if (!j.is_number_integer()) throw SchemaError("expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

Json rational_json(const Rational& q) { return format_rational(q); }

Json point_json(const Point& p) {
  Json a = Json::array();
  for (const auto& x : p) a.push_back(rational_json(x));
  return a;
}

Json int_vector_json(const IntVector& v) {
  Json a = Json::array();
  for (auto x : v) a.push_back(x);
  return a;
}

Json int_matrix_json(const IntMatrix& m) {
  Json a = Json::array();
  for (const auto& r : m) a.push_back(int_vector_json(r));
  return a;
}

Rational read_rational(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

Point read_point(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of rationals");
  Point p;
  for (const auto& x : j) p.push_back(read_rational(x));
  return p;
}

IntVector read_int_vector(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integers");
  IntVector v;
  for (const auto& x : j) v.push_back(read_int(x));
  return v;
}

IntMatrix read_int_matrix(const Json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of integer rows");
  IntMatrix m;
  for (const auto& r : j) m.push_back(read_int_vector(r));
  return m;
}

Point parse_point_list(const std::string& text) {
  Point p;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      p.push_back(parse_rational(item));
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
  }
  if (p.empty() && !text.empty()) throw SchemaError("empty vector literal");
  return p;
}

Json to_json(const Polytope& p) {
  Json j;
  j["ambient_dim"] = p.ambient_dim();
  Json h = Json::array();
  for (const auto& hs : p.hrep()) h.push_back({{"normal", int_vector_json(hs.normal)}, {"offset", rational_json(hs.offset)}});
  j["hrep"] = std::move(h);
  Json v = Json::array();
  for (const auto& x : p.vrep()) v.push_back(point_json(x));
  j["vrep"] = std::move(v);
  return j;
}

Polytope polytope_from_json(const Json& input) {
  const Json j = unwrap(input, "polytope");
  const std::size_t n = read_size(field(j, "ambient_dim"));
  if (j.contains("vrep") && !j.at("vrep").empty()) {
    std::vector<Point> pts;
    for (const auto& x : j.at("vrep")) {
      pts.push_back(read_point(x));
      if (pts.back().size() != n) throw SchemaError("vertex length differs from ambient_dim");
    }
    return halfspaces(pts);
  }
  std::vector<HalfSpace> h;
  for (const auto& r : field(j, "hrep")) {
    HalfSpace s{read_int_vector(field(r, "normal")), read_rational(field(r, "offset"))};
    if (s.normal.size() != n) throw SchemaError("normal length differs from ambient_dim");
    h.push_back(std::move(s));
  }
  return vertices(n, h);
}

Json to_json(const Fan& f) {
  Json j;
  j["ambient_dim"] = f.ambient_dim;
  j["rays"] = int_matrix_json(f.rays);
  Json cones = Json::array();
  for (const auto& c : f.max_cones) cones.push_back(c);
  j["max_cones"] = std::move(cones);
  return j;
}

Fan fan_from_json(const Json& input) {
  const Json j = unwrap(input, "fan");
  Fan f;
  f.ambient_dim = read_size(field(j, "ambient_dim"));
  f.rays = read_int_matrix(field(j, "rays"));
  for (const auto& c : field(j, "max_cones")) {
    std::vector<std::size_t> cone;
    if (!c.is_array()) throw SchemaError("max_cones entries must be arrays of ray indices");
    for (const auto& i : c) cone.push_back(read_size(i));
    f.max_cones.push_back(std::move(cone));
  }
  return f;
}

Json to_json(const ParameterCone& c) {
  Json j;
  j["dim"] = c.dim();
  j["hrep"] = int_matrix_json(c.hrep());
  j["lineality"] = int_matrix_json(c.lineality());
  j["rays"] = int_matrix_json(c.rays());
  return j;
}

ParameterCone cone_from_json(const Json& j) {
  const std::size_t d = read_size(field(j, "dim"));
  IntMatrix lattice;
  if (j.contains("lattice")) lattice = read_int_matrix(j.at("lattice"));
  if (j.contains("hrep")) return ParameterCone::from_inequalities(d, read_int_matrix(j.at("hrep")), lattice);
  std::vector<Point> gens;
  for (const auto& g : field(j, "generators")) gens.push_back(read_point(g));
  return ParameterCone::from_generators(d, gens, lattice);
}

Json to_json(const LinearFamily& f) {
  Json j;
  j["kind"] = f.kind;
  j["cone"] = to_json(f.cone);
  j["ambient_dim"] = f.ambient_dim;
  j["normals"] = int_matrix_json(f.normals);
  Json l = Json::array();
  for (const auto& r : f.offset_map) l.push_back(point_json(r));
  j["offset_map"] = std::move(l);
  j["lattice"] = int_matrix_json(f.cone.lattice());
  j["coordinate_names"] = f.coordinate_names;
  return j;
}

LinearFamily family_from_json(const Json& input) {
  const Json j = unwrap(input, "family");
  LinearFamily f;
  f.kind = j.value("kind", std::string("custom"));
  static const std::vector<std::string> kinds{"toric", "gz", "fibered", "projected", "custom"};
  if (std::find(kinds.begin(), kinds.end(), f.kind) == kinds.end()) throw SchemaError("unknown family kind '" + f.kind + "'");
  Json cone = field(j, "cone");
  if (j.contains("lattice") && !cone.contains("lattice")) cone["lattice"] = j.at("lattice");
  f.cone = cone_from_json(cone);
  f.ambient_dim = read_size(field(j, "ambient_dim"));
  f.normals = read_int_matrix(field(j, "normals"));
  for (const auto& r : field(j, "offset_map")) f.offset_map.push_back(read_point(r));
  if (j.contains("coordinate_names")) f.coordinate_names = j.at("coordinate_names").get<std::vector<std::string>>();
  validate(f);
  return f;
}

Json to_json(const HomogeneousPolynomial& f) {
  Json j;
  j["num_vars"] = f.num_vars();
  j["degree"] = f.degree();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exponents", e}, {"coeff", rational_json(c)}});
  j["terms"] = std::move(terms);
  return j;
}

HomogeneousPolynomial polynomial_from_json(const Json& input) {
  const Json j = unwrap(input, "polynomial");
  const int degree = static_cast<int>(read_size(field(j, "degree")));
  const auto& terms = field(j, "terms");
  std::size_t vars = 0;
  if (j.contains("num_vars"))
    vars = read_size(j.at("num_vars"));
  else if (!terms.empty())
    vars = field(terms.front(), "exponents").size();
  HomogeneousPolynomial f(vars, degree);
  for (const auto& t : terms) {
    Exponent e;
    for (const auto& x : field(t, "exponents")) e.push_back(static_cast<int>(read_size(x)));
    try {
      f.add_term(e, read_rational(field(t, "coeff")));
    } catch (const Error& err) {
      throw SchemaError(err.what());
    }
  }
  return f;
}

Json to_json(const EhrhartQuasiPolynomial& e) {
  Json j;
  j["period"] = e.period;
  j["degree"] = e.degree;
  Json c = Json::array();
  for (const auto& p : e.constituents) c.push_back(point_json(p));
  j["constituents"] = std::move(c);
  return j;
}

Json to_json(const Verdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["kappa"] = v.kappa ? point_json(*v.kappa) : Json(nullptr);
  j["budget"] = v.budget;
  Json w = Json::array();
  for (const auto& p : v.witness) w.push_back(point_json(p));
  j["witness"] = v.witness.empty() ? Json(nullptr) : std::move(w);
  j["checks"] = v.checks;
  j["detail"] = v.detail;
  return j;
}

Json to_json(const AnticanonicalVerdict& v) {
  Json j;
  j["status"] = status_name(v.status);
  j["kappa"] = point_json(v.kappa);
  j["budget"] = v.budget;
  if (v.witness)
    j["witness"] = {{"gamma", point_json(v.witness->gamma)}, {"count", v.witness->count}, {"interior", v.witness->interior}};
  else
    j["witness"] = nullptr;
  Json t = Json::array();
  for (const auto& g : v.tested) t.push_back(point_json(g));
  j["tested"] = std::move(t);
  if (!v.detail.empty()) j["detail"] = v.detail;
  return j;
}

Json to_json(const AnticanonicalSearch& s) {
  Json j;
  Json c = Json::array();
  for (const auto& k : s.candidates) c.push_back(point_json(k));
  j["candidates"] = std::move(c);
  j["radius"] = s.radius;
  j["budget"] = s.budget;
  j["classes_tested"] = s.classes_tested;
  j["points_scanned"] = s.points_scanned;
  j["unique"] = s.candidates.size() <= 1;
  return j;
}

Json to_json(const RaySumResult& r) {
  Json j;
  j["ok"] = r.ok;
  Json s = Json::array();
  for (const auto& x : r.samples)
    s.push_back({{"gamma", point_json(x.gamma)},
                 {"derivative", rational_json(x.derivative)},
                 {"facet_volumes", rational_json(x.facet_volumes)}});
  j["samples"] = std::move(s);
  return j;
}

Json to_json(const GradedAlgebraSummary& s) {
  Json j;
  j["dims"] = s.dims;
  j["duality_ok"] = s.duality_ok;
  return j;
}

Json unwrap(const Json& j, const char* key) {
  const Json* cur = &j;
  if (cur->is_object() && cur->contains("result") && cur->contains("command")) cur = &cur->at("result");
  if (cur->is_object() && cur->contains(key) && cur->at(key).is_object()) cur = &cur->at(key);
  return *cur;
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace polyfam::io
