// Command-line front end: JSON in, JSON run reports out.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "polyfam/algebra.hpp"
#include "polyfam/anticanonical.hpp"
#include "polyfam/error.hpp"
#include "polyfam/family.hpp"
#include "polyfam/fan.hpp"
#include "polyfam/golden.hpp"
#include "polyfam/json_io.hpp"
#include "polyfam/lattice.hpp"

using namespace polyfam;
using io::Json;

namespace {

constexpr int kExitSchema = 2;
constexpr int kExitDomain = 3;
constexpr int kExitInternal = 4;

struct Options {
  std::uint64_t seed = 0;
  unsigned jobs = 0;
  bool timing = false;
  std::string out;
};

/// Parsed inputs of one subcommand; run() produces the result object.
struct Command {
  std::string name;
  Json inputs = Json::object();
  std::function<Json()> run;
};

Json input_file(const std::string& path) { return {{"path", path}, {"data", io::read_file(path)}}; }

LinearFamily load_family(const std::string& path) { return io::family_from_json(io::read_file(path)); }

Point kappa_arg(const std::string& text, const LinearFamily& f) {
  Point k = io::parse_point_list(text);
  if (k.size() != f.param_dim()) throw io::SchemaError("--kappa needs " + std::to_string(f.param_dim()) + " entries");
  return k;
}

Matrix read_matrix(const Json& input) {
  const Json j = input.is_object() && input.contains("matrix") ? input.at("matrix") : input;
  if (!j.is_array()) throw io::SchemaError("projection matrix must be an array of rows");
  Matrix m;
  for (const auto& r : j) m.push_back(io::read_point(r));
  return m;
}

Json chambered_json(const ChamberedFamily& c) {
  Json chambers = Json::array();
  for (const auto& ch : c.chambers) chambers.push_back({{"cone", io::to_json(ch.cone)}, {"family", io::to_json(ch.family)}});
  return {{"chambers", std::move(chambers)}, {"naive", io::to_json(c.naive)}};
}

int error_exit(int code, const std::string& kind, const std::string& message) {
  Json e{{"error", kind}, {"message", message}};
  std::cerr << e.dump() << "\n";
  return code;
}

int emit(const Options& opt, const Command& cmd, const Json& result, std::int64_t elapsed) {
  Json report;
  report["command"] = cmd.name;
  report["inputs"] = cmd.inputs;
  report["result"] = result;
  report["exact"] = true;
  report["elapsed_ms"] = opt.timing ? elapsed : 0;
  if (!opt.out.empty()) {
    std::ofstream f(opt.out);
    if (!f) return error_exit(kExitSchema, "SchemaError", "cannot write '" + opt.out + "'");
    f << result.dump(2) << "\n";
  }
  std::cout << report.dump(2) << "\n";
  return 0;
}


void add_polytope_commands(CLI::App& app, Command& cmd) {
  auto* poly = app.add_subcommand("polytope", "lattice-point and volume queries on one polytope")->require_subcommand(1);
  for (const std::string sub : {"count", "interior", "volume", "facets", "ehrhart", "reciprocity"}) {
    auto* s = poly->add_subcommand(sub);
    auto path = std::make_shared<std::string>();
    auto period = std::make_shared<std::int64_t>(1);
    auto mmax = std::make_shared<std::int64_t>(3);
    s->add_option("file", *path, "polytope JSON")->required();
    if (sub == "ehrhart") s->add_option("--period", *period, "quasi-period of the Ehrhart function");
    if (sub == "reciprocity") s->add_option("--mmax", *mmax, "largest dilation checked");
    s->callback([&cmd, sub, path, period, mmax] {
      cmd.name = "polytope " + sub;
      cmd.inputs = {{"file", input_file(*path)}};
      if (sub == "ehrhart") cmd.inputs["period"] = *period;
      if (sub == "reciprocity") cmd.inputs["mmax"] = *mmax;
      cmd.run = [sub, path, period, mmax]() -> Json {
        const Polytope p = io::polytope_from_json(io::read_file(*path));
        if (sub == "count") return {{"count", count(p)}};
        if (sub == "interior") return {{"interior", count_interior(p)}};
        if (sub == "volume") return {{"volume", io::rational_json(volume(p))}, {"dim", p.dim()}};
        if (sub == "facets") {
          Json list = Json::array();
          for (const auto& [normal, facet] : facets(p))
            list.push_back({{"normal", io::int_vector_json(normal)},
                            {"lattice_volume", io::rational_json(facet_lattice_volume(facet, normal))},
                            {"vertices", io::to_json(facet)["vrep"]}});
          return {{"facets", std::move(list)}};
        }
        if (sub == "ehrhart") return {{"ehrhart", io::to_json(ehrhart(p, *period))}};
        return {{"ok", check_reciprocity(p, *mmax)}};
      };
    });
  }
}

void add_fan_commands(CLI::App& app, Command& cmd, const Options& opt) {
  auto* fan = app.add_subcommand("fan", "fan construction and properties")->require_subcommand(1);
  {
    auto* s = fan->add_subcommand("build", "emit a named fan");
    auto name = std::make_shared<std::string>();
    s->add_option("--named", *name, "p2, p1xp1, f1, f2 or line")->required();
    s->callback([&cmd, name] {
      cmd.name = "fan build";
      cmd.inputs = {{"named", *name}};
      cmd.run = [name]() -> Json { return {{"fan", io::to_json(golden::fan_named(*name))}}; };
    });
  }
  {
    auto* s = fan->add_subcommand("normal", "normal fan of a polytope");
    auto path = std::make_shared<std::string>();
    s->add_option("file", *path, "polytope JSON")->required();
    s->callback([&cmd, path] {
      cmd.name = "fan normal";
      cmd.inputs = {{"file", input_file(*path)}};
      cmd.run = [path]() -> Json { return {{"fan", io::to_json(normal_fan(io::polytope_from_json(io::read_file(*path))))}}; };
    });
  }
  {
    auto* s = fan->add_subcommand("properties", "completeness, simpliciality, smoothness, f- and h-vectors");
    auto path = std::make_shared<std::string>();
    s->add_option("file", *path, "fan JSON")->required();
    s->callback([&cmd, &opt, path] {
      cmd.name = "fan properties";
      cmd.inputs = {{"file", input_file(*path)}, {"seed", opt.seed}};
      cmd.run = [&opt, path]() -> Json {
        const Fan f = io::fan_from_json(io::read_file(*path));
        validate(f);
        const auto p = fan_properties(f, opt.seed);
        Json r{{"complete", p.complete},
               {"complete_certain", p.complete_certain},
               {"simplicial", p.simplicial},
               {"smooth", p.smooth},
               {"f_vector", f_vector(f)}};
        r["h_vector"] = p.simplicial && p.complete ? Json(h_vector(f)) : Json(nullptr);
        return r;
      };
    });
  }
}

void add_family_commands(CLI::App& app, Command& cmd, const Options& opt) {
  auto* fam = app.add_subcommand("family", "linear families of polytopes")->require_subcommand(1);
  {
    auto* s = fam->add_subcommand("build", "construct a family");
    auto toric = std::make_shared<std::string>();
    auto gz = std::make_shared<std::size_t>(0);
    auto fibered = std::make_shared<std::string>();
    auto multiplicity = std::make_shared<std::size_t>(1);
    auto projected = std::make_shared<std::vector<std::string>>();
    auto chamber = std::make_shared<int>(-1);
    auto named = std::make_shared<std::string>();
    auto* g = s->add_option_group("source");
    g->add_option("--toric", *toric, "fan JSON");
    g->add_option("--gz", *gz, "GL(n) Gelfand-Zetlin family");
    g->add_option("--fibered", *fibered, "base family JSON (toric, Weyl-invariant)");
    g->add_option("--projected", *projected, "cone JSON and projection matrix JSON")->expected(2);
    g->add_option("--named", *named, "built-in family name");
    g->require_option(1);
    s->add_option("--multiplicity", *multiplicity, "GZ fibers per base point (fibered)");
    s->add_option("--chamber", *chamber, "select one chamber (projected)");
    s->callback([&cmd, toric, gz, fibered, multiplicity, projected, chamber, named] {
      cmd.name = "family build";
      if (!toric->empty()) cmd.inputs["toric"] = input_file(*toric);
      if (*gz) cmd.inputs["gz"] = *gz;
      if (!fibered->empty()) {
        cmd.inputs["fibered"] = input_file(*fibered);
        cmd.inputs["multiplicity"] = *multiplicity;
      }
      if (!projected->empty()) {
        cmd.inputs["projected"] = {input_file((*projected)[0]), input_file((*projected)[1])};
        if (*chamber >= 0) cmd.inputs["chamber"] = *chamber;
      }
      if (!named->empty()) cmd.inputs["named"] = *named;
      cmd.run = [toric, gz, fibered, multiplicity, projected, chamber, named]() -> Json {
        if (!toric->empty()) return {{"family", io::to_json(toric_family(io::fan_from_json(io::read_file(*toric))))}};
        if (*gz) return {{"family", io::to_json(gz_family(*gz))}};
        if (!fibered->empty()) return {{"family", io::to_json(fibered_family(load_family(*fibered), *multiplicity))}};
        if (!named->empty()) return {{"family", io::to_json(golden::family_named(*named))}};
        const Json cone_json = io::read_file((*projected)[0]);
        const ParameterCone cone = io::cone_from_json(io::unwrap(cone_json, "cone"));
        const ChamberedFamily c = projected_family(cone, read_matrix(io::read_file((*projected)[1])));
        if (*chamber < 0) return chambered_json(c);
        if (static_cast<std::size_t>(*chamber) >= c.chambers.size())
          fail(Errc::InvalidArgument, "chamber index out of range");
        return {{"family", io::to_json(c.chambers[static_cast<std::size_t>(*chamber)].family)}};
      };
    });
  }
  {
    auto* s = fam->add_subcommand("eval", "instantiate Delta(gamma)");
    auto path = std::make_shared<std::string>();
    auto gamma = std::make_shared<std::string>();
    s->add_option("file", *path, "family JSON")->required();
    s->add_option("--gamma", *gamma, "comma-separated parameter")->required();
    s->callback([&cmd, path, gamma] {
      cmd.name = "family eval";
      cmd.inputs = {{"file", input_file(*path)}, {"gamma", *gamma}};
      cmd.run = [path, gamma]() -> Json {
        const LinearFamily f = load_family(*path);
        const Point g = io::parse_point_list(*gamma);
        const Polytope p = f.evaluate(g);
        return {{"polytope", io::to_json(p)}, {"count", count(p)}, {"interior", count_interior(p)},
                {"volume", io::rational_json(volume(p))}};
      };
    });
  }
  {
    auto* s = fam->add_subcommand("verify-linearity", "sampled Minkowski additivity check");
    auto path = std::make_shared<std::string>();
    auto budget = std::make_shared<std::int64_t>(20);
    s->add_option("file", *path, "family JSON")->required();
    s->add_option("--budget", *budget, "number of sampled pairs");
    s->callback([&cmd, &opt, path, budget] {
      cmd.name = "family verify-linearity";
      cmd.inputs = {{"file", input_file(*path)}, {"budget", *budget}, {"seed", opt.seed}};
      cmd.run = [&opt, path, budget]() -> Json { return io::to_json(verify_linearity(load_family(*path), *budget, opt.seed)); };
    });
  }
  {
    auto* s = fam->add_subcommand("fan", "normal fan shared by the family");
    auto path = std::make_shared<std::string>();
    auto budget = std::make_shared<std::int64_t>(20);
    s->add_option("file", *path, "family JSON")->required();
    s->add_option("--budget", *budget, "linearity budget");
    s->callback([&cmd, path, budget] {
      cmd.name = "family fan";
      cmd.inputs = {{"file", input_file(*path)}, {"budget", *budget}};
      cmd.run = [path, budget]() -> Json {
        const Fan f = family_fan(load_family(*path), *budget);
        const auto p = fan_properties(f);
        return {{"fan", io::to_json(f)}, {"complete", p.complete}, {"simplicial", p.simplicial}, {"smooth", p.smooth}};
      };
    });
  }
}

/// GZ blocks of a fibered family: base coordinates are named l1..ln.
std::size_t fibered_multiplicity(const LinearFamily& f) {
  std::size_t n = 0;
  for (const auto& name : f.coordinate_names)
    if (!name.empty() && name[0] == 'l') ++n;
  const std::size_t block = n * (n - 1) / 2;
  return block == 0 || f.ambient_dim < n ? 0 : (f.ambient_dim - n) / block;
}

void add_anticanonical_commands(CLI::App& app, Command& cmd) {
  auto* anti = app.add_subcommand("anticanonical", "anticanonical parameter checks")->require_subcommand(1);
  for (const std::string sub : {"verify", "search", "fano", "interior", "ray-sum"}) {
    auto* s = anti->add_subcommand(sub);
    auto path = std::make_shared<std::string>();
    auto kappa = std::make_shared<std::string>();
    auto budget = std::make_shared<std::int64_t>(5);
    auto radius = std::make_shared<std::int64_t>(3);
    auto gammas = std::make_shared<std::vector<std::string>>();
    s->add_option("file", *path, "family JSON")->required();
    if (sub == "search") {
      s->add_option("--radius", *radius, "box radius in lattice coordinates");
      s->add_option("--budget", *budget, "dilation bound of the test set");
    } else {
      s->add_option("--kappa", *kappa, "comma-separated parameter")->required();
    }
    if (sub == "verify") s->add_option("--budget", *budget, "dilation bound of the test set");
    if (sub == "ray-sum") s->add_option("--gamma", *gammas, "sample parameters (default: 5 interior samples)");
    s->callback([&cmd, sub, path, kappa, budget, radius, gammas] {
      cmd.name = "anticanonical " + sub;
      cmd.inputs = {{"file", input_file(*path)}};
      if (sub == "search") {
        cmd.inputs["radius"] = *radius;
        cmd.inputs["budget"] = *budget;
      } else {
        cmd.inputs["kappa"] = *kappa;
      }
      if (sub == "verify") cmd.inputs["budget"] = *budget;
      if (sub == "ray-sum" && !gammas->empty()) cmd.inputs["gamma"] = *gammas;
      cmd.run = [sub, path, kappa, budget, radius, gammas]() -> Json {
        const LinearFamily f = load_family(*path);
        if (sub == "search") {
          if (f.kind == "fibered") {
            const auto c = fibered_comparison(f, fibered_multiplicity(f), *radius, *budget);
            Json r = io::to_json(c.search);
            r["comparison"] = {{"multiplicity", c.multiplicity}, {"claimed", io::point_json(c.claimed)}, {"agrees", c.agrees}, {"note", c.note}};
            return r;
          }
          return io::to_json(find_anticanonical(f, *radius, *budget));
        }
        const Point k = kappa_arg(*kappa, f);
        if (sub == "verify") return io::to_json(is_anticanonical(f, k, *budget));
        if (sub == "fano") return {{"kappa", io::point_json(k)}, {"fano", is_fano(f, k)}};
        if (sub == "interior")
          return {{"kappa", io::point_json(k)}, {"single_interior_point", single_interior_point_check(f, k)}};
        std::vector<Point> samples;
        for (const auto& g : *gammas) samples.push_back(io::parse_point_list(g));
        return io::to_json(ray_sum_check(f, k, samples));
      };
    });
  }
}

/// Family JSON gives its volume polynomial; polynomial JSON is used as is.
HomogeneousPolynomial polynomial_input(const Json& j) {
  const Json inner = io::unwrap(j, "polynomial");
  if (inner.is_object() && inner.contains("terms")) return io::polynomial_from_json(inner);
  return volume_polynomial(io::family_from_json(j));
}

void add_algebra_commands(CLI::App& app, Command& cmd) {
  auto* alg = app.add_subcommand("algebra", "volume polynomial and its graded algebra")->require_subcommand(1);
  for (const std::string sub : {"volume-poly", "dims", "class-equal", "antican-class", "h-vector"}) {
    auto* s = alg->add_subcommand(sub);
    auto path = std::make_shared<std::string>();
    auto v = std::make_shared<std::string>();
    auto w = std::make_shared<std::string>();
    auto kappa = std::make_shared<std::string>();
    s->add_option("file", *path, sub == "h-vector" ? "fan JSON" : "family or polynomial JSON")->required();
    if (sub == "class-equal") {
      s->add_option("--v", *v, "first support vector")->required();
      s->add_option("--w", *w, "second support vector")->required();
    }
    if (sub == "antican-class") s->add_option("--kappa", *kappa, "comma-separated parameter")->required();
    s->callback([&cmd, sub, path, v, w, kappa] {
      cmd.name = "algebra " + sub;
      cmd.inputs = {{"file", input_file(*path)}};
      if (sub == "class-equal") {
        cmd.inputs["v"] = *v;
        cmd.inputs["w"] = *w;
      }
      if (sub == "antican-class") cmd.inputs["kappa"] = *kappa;
      cmd.run = [sub, path, v, w, kappa]() -> Json {
        const Json data = io::read_file(*path);
        if (sub == "h-vector") return {{"h_vector", h_vector_oracle(io::fan_from_json(data))}};
        if (sub == "antican-class") {
          const LinearFamily f = io::family_from_json(data);
          const Point k = kappa_arg(*kappa, f);
          return {{"kappa", io::point_json(k)}, {"ok", anticanonical_class_check(f, k)}};
        }
        const auto poly = polynomial_input(data);
        if (sub == "volume-poly") return {{"polynomial", io::to_json(poly)}};
        if (sub == "dims") return io::to_json(graded_dimensions(poly));
        const Point pv = io::parse_point_list(*v), pw = io::parse_point_list(*w);
        if (pv.size() != poly.num_vars() || pw.size() != poly.num_vars())
          throw io::SchemaError("--v and --w need " + std::to_string(poly.num_vars()) + " entries");
        return {{"equal", class_equal(poly, pv, pw)}};
      };
    });
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  Command cmd;
  CLI::App app{"Exact computations on linear families of lattice polytopes"};
  app.require_subcommand(1);
  app.add_option("--seed", opt.seed, "seed for every sampled check");
  app.add_option("--jobs", opt.jobs, "worker threads for lattice counting (default: POLYFAM_JOBS or 1)");
  app.add_flag("--timing", opt.timing, "report wall-clock time in elapsed_ms (otherwise 0)");
  app.add_option("-o,--out", opt.out, "also write the result object to this path");
  add_polytope_commands(app, cmd);
  add_fan_commands(app, cmd, opt);
  add_family_commands(app, cmd, opt);
  add_anticanonical_commands(app, cmd);
  add_algebra_commands(app, cmd);
  // Global options may follow the subcommand words.
  std::function<void(CLI::App*)> fall = [&](CLI::App* a) {
    for (auto* sub : a->get_subcommands({})) {
      sub->fallthrough();
      fall(sub);
    }
  };
  fall(&app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitSchema;
  } catch (const io::SchemaError& e) {
    return error_exit(kExitSchema, "SchemaError", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_exit(kExitSchema, "SchemaError", e.what());
  }

  unsigned jobs = opt.jobs;
  if (jobs == 0)
    if (const char* env = std::getenv("POLYFAM_JOBS")) jobs = static_cast<unsigned>(std::strtoul(env, nullptr, 10));
  set_counting_jobs(jobs == 0 ? 1 : jobs);

  try {
    const auto start = std::chrono::steady_clock::now();
    const Json result = cmd.run();
    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return emit(opt, cmd, result, elapsed);
  } catch (const io::SchemaError& e) {
    return error_exit(kExitSchema, "SchemaError", e.what());
  } catch (const nlohmann::json::exception& e) {
    return error_exit(kExitSchema, "SchemaError", e.what());
  } catch (const Error& e) {
    const int code = e.code() == Errc::UniquenessViolation ? kExitInternal : kExitDomain;
    return error_exit(code, std::string(errc_name(e.code())), e.what());
  } catch (const std::exception& e) {
    return error_exit(kExitInternal, "InternalError", e.what());
  }
}
