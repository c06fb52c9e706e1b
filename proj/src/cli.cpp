#include "eulercert/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <ostream>
#include <sstream>

#include "eulercert/io.hpp"

namespace eulercert {

void WorkspaceConfig::check(std::size_t dim) const {
  if (dimension && *dimension != dim)
    throw InputError("input has dimension " + std::to_string(dim) + " but the workspace dimension is " +
                     std::to_string(*dimension));
  if (equality_mode == EqualityMode::Exact && dim > 2)
    throw InputError("equality_mode exact requires dimension <= 2");
}

namespace {

EqualityMode parse_equality_mode(const std::string& s) {
  if (s == "exact") return EqualityMode::Exact;
  if (s == "sampled") return EqualityMode::Sampled;
  if (s == "auto") return EqualityMode::Auto;
  throw InputError("unknown equality_mode '" + s + "' (expected exact or sampled)");
}

WorkspaceConfig load_config(const std::string& filename) {
  const Json j = read_json_file(filename);
  if (!j.is_object()) throw InputError(filename + ": /: expected an object");
  WorkspaceConfig c;
  auto where = [&](const char* key) { return filename + ": /" + key + ": "; };
  for (const auto& [key, v] : j.items()) {
    if (key == "dimension") {
      if (!v.is_number_integer() || v.get<long long>() < 1 || v.get<long long>() > 3)
        throw InputError(where("dimension") + "expected an integer in 1..3");
      c.dimension = v.get<std::size_t>();
    } else if (key == "norm") {
      if (!v.is_string()) throw InputError(where("norm") + "expected a string");
      try {
        c.norm = parse_norm(v.get<std::string>());
      } catch (const std::exception& e) {
        throw InputError(where("norm") + e.what());
      }
    } else if (key == "tol_dist") {
      const double t = v.is_number() ? v.get<double>()
                       : v.is_string() ? upper_double(parse_number(v.get<std::string>()))
                                       : -1.0;
      if (!(t > 0)) throw InputError(where("tol_dist") + "expected a positive number");
      c.tol_dist = t;
    } else if (key == "equality_mode") {
      if (!v.is_string()) throw InputError(where("equality_mode") + "expected a string");
      c.equality_mode = parse_equality_mode(v.get<std::string>());
    } else if (key == "sample_density") {
      if (!v.is_number_integer() || v.get<long long>() < 1)
        throw InputError(where("sample_density") + "expected a positive integer");
      c.sample_density = v.get<int>();
    } else {
      throw InputError(filename + ": /" + key + ": unknown config field");
    }
  }
  return c;
}

Rational parse_epsilon(const std::string& text) {
  Rational e;
  try {
    e = parse_number(text);
  } catch (const std::exception& ex) {
    throw InputError("bad epsilon '" + text + "': " + ex.what());
  }
  if (e <= 0) throw InputError("epsilon must be positive");
  return e;
}

void emit(const Json& j, const std::string& output, std::ostream& out) {
  if (output.empty()) {
    out << j.dump(2) << '\n';
    return;
  }
  std::ofstream file(output);
  if (!file) throw InputError(output + ": cannot write file");
  file << j.dump(2) << '\n';
}

ConstructibleFunction load_cf(const std::string& file, const WorkspaceConfig& cfg) {
  const Json j = read_json_file(file);
  try {
    ConstructibleFunction f = cf_from_json(j);
    cfg.check(f.dimension());
    return f;
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

SheafSum load_sheaf(const std::string& file, const WorkspaceConfig& cfg) {
  const Json j = read_json_file(file);
  try {
    SheafSum s = sheaf_from_json(j);
    cfg.check(s.dimension());
    return s;
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

template <class F>
auto load(const std::string& file, F&& parse) {
  const Json j = read_json_file(file);
  try {
    return parse(j);
  } catch (const InputError& e) {
    throw InputError(file + ": " + e.what());
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler calculus on PL constructible functions"};
  app.name("eulercert");
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_file, norm_flag, equality_flag;
  double tol_flag = 0;
  int density_flag = 0, dimension_flag = 0;
  app.add_option("--config", config_file, "workspace config JSON");
  app.add_option("--norm", norm_flag, "l1, l2 or linf");
  app.add_option("--tol", tol_flag, "slack added to irrational distances");
  app.add_option("--equality-mode", equality_flag, "exact or sampled");
  app.add_option("--sample-density", density_flag, "random samples per unit volume");
  app.add_option("--dimension", dimension_flag, "workspace dimension");

  std::string in1, in2, map_file, center, target, epsilon, output, metric, schedule;
  int steps = 0;

  auto* integrate = app.add_subcommand("integrate", "print the Euler integral");
  integrate->add_option("cf", in1)->required();
  auto* oracle = app.add_subcommand("oracle-integrate", "Euler integral through the cell decomposition");
  oracle->add_option("cf", in1)->required();
  auto* push = app.add_subcommand("pushforward", "direct image along an affine map");
  push->add_option("cf", in1)->required();
  push->add_option("--map", map_file)->required();
  auto* chi = app.add_subcommand("chi", "local Euler characteristic of a sheaf sum");
  chi->add_option("sheaf", in1)->required();
  auto* flag = app.add_subcommand("flag", "graded sheaf of a homothety flag");
  flag->add_option("polytope", in1)->required();
  flag->add_option("--center", center)->required();
  flag->add_option("--steps", steps)->required()->check(CLI::PositiveNumber);
  auto* bound = app.add_subcommand("bound", "upper bound on the convolution distance");
  bound->add_option("F", in1)->required();
  bound->add_option("G", in2)->required();
  auto* conc = app.add_subcommand("concentrate", "certificate concentrating a function to a point");
  conc->add_option("cf", in1)->required();
  conc->add_option("--target", target)->required();
  conc->add_option("--epsilon", epsilon)->required();
  conc->add_option("--output,-o", output);
  auto* lnk = app.add_subcommand("link", "certificate linking two functions of equal integral");
  lnk->add_option("cf1", in1)->required();
  lnk->add_option("cf2", in2)->required();
  lnk->add_option("--epsilon", epsilon)->required();
  lnk->add_option("--output,-o", output);
  auto* ver = app.add_subcommand("verify", "check a certificate");
  ver->add_option("certificate", in1)->required();
  auto* probe = app.add_subcommand("probe", "metric versus bound table");
  probe->add_option("cf", in1)->required();
  probe->add_option("--metric", metric)->required()->check(CLI::IsMember({"l1", "sup", "gap"}));
  probe->add_option("--target", target)->required();
  probe->add_option("--schedule", schedule)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    WorkspaceConfig cfg = config_file.empty() ? WorkspaceConfig{} : load_config(config_file);
    if (!norm_flag.empty()) cfg.norm = parse_norm(norm_flag);
    if (app.count("--tol")) {
      if (!(tol_flag > 0)) throw InputError("--tol must be positive");
      cfg.tol_dist = tol_flag;
    }
    if (!equality_flag.empty()) cfg.equality_mode = parse_equality_mode(equality_flag);
    if (app.count("--sample-density")) {
      if (density_flag < 1) throw InputError("--sample-density must be positive");
      cfg.sample_density = density_flag;
    }
    if (app.count("--dimension")) {
      if (dimension_flag < 1 || dimension_flag > 3) throw InputError("--dimension must be 1..3");
      cfg.dimension = static_cast<std::size_t>(dimension_flag);
    }
    if (cfg.dimension) cfg.check(*cfg.dimension);
    const Settings settings = cfg.settings();

    auto point_arg = [&](const std::string& text, std::size_t dim) {
      const Point p = parse_point(text);
      if (p.dimension() != dim)
        throw InputError("point '" + text + "' has dimension " + std::to_string(p.dimension()) + ", expected " +
                         std::to_string(dim));
      return p;
    };

    if (*integrate) {
      out << euler_integral(load_cf(in1, cfg)) << '\n';
    } else if (*oracle) {
      out << oracle_integral(load_cf(in1, cfg)) << '\n';
    } else if (*push) {
      const ConstructibleFunction f = load_cf(in1, cfg);
      const AffineMap m = load(map_file, [](const Json& j) { return map_from_json(j); });
      if (m.domain_dimension() != f.dimension()) throw InputError("map domain does not match the function dimension");
      out << to_json(normalize(pushforward(f, m))).dump(2) << '\n';
    } else if (*chi) {
      out << to_json(local_euler(load_sheaf(in1, cfg))).dump(2) << '\n';
    } else if (*flag) {
      const Polytope p = load(in1, [](const Json& j) { return polytope_from_json(j); });
      cfg.check(p.dimension());
      const Flag fl = build_flag(p, point_arg(center, p.dimension()), steps, settings.metric);
      out << Json{{"sheaf", to_json(graded_sheaf(fl))}, {"eta", decimal_up(fl.eta.value)}}.dump(2) << '\n';
    } else if (*bound) {
      const SheafSum f = load_sheaf(in1, cfg), g = load_sheaf(in2, cfg);
      if (f.dimension() != g.dimension()) throw InputError("F and G have different dimensions");
      const SumBound sb = sum_bound(f, g, settings.metric);
      out << to_string(sb.bound) << '\n';
      for (const auto& [i, j] : sb.matching.pairs) out << "pair " << i << ' ' << j << '\n';
      for (auto i : sb.matching.unmatched_f) out << "unmatched F " << i << '\n';
      for (auto j : sb.matching.unmatched_g) out << "unmatched G " << j << '\n';
    } else if (*conc) {
      const ConstructibleFunction f = load_cf(in1, cfg);
      emit(to_json(concentrate_to_point(f, point_arg(target, f.dimension()), parse_epsilon(epsilon), settings)),
           output, out);
    } else if (*lnk) {
      const ConstructibleFunction f = load_cf(in1, cfg), g = load_cf(in2, cfg);
      if (f.dimension() != g.dimension()) throw InputError("functions have different dimensions");
      emit(to_json(link(f, g, parse_epsilon(epsilon), settings)), output, out);
    } else if (*ver) {
      const Certificate c = load(in1, [](const Json& j) { return certificate_from_json(j); });
      cfg.check(c.source.dimension());
      const VerifyReport r = verify(c, settings);
      for (const auto& f : r.failures) out << "FAIL: " << f << '\n';
      out << (r.pass ? "PASS" : "FAIL") << '\n';
      return r.pass ? 0 : 1;
    } else if (*probe) {
      const ConstructibleFunction f = load_cf(in1, cfg);
      std::vector<Rational> sched;
      std::stringstream ss(schedule);
      for (std::string item; std::getline(ss, item, ',');) sched.push_back(parse_epsilon(item));
      if (sched.empty()) throw InputError("empty schedule");
      out << probe_csv(probe_metric(parse_metric(metric), f, point_arg(target, f.dimension()), sched, settings));
    }
    return 0;
  } catch (const std::invalid_argument& e) {  // input, geometry, dimension and integral errors
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

}  // namespace eulercert
