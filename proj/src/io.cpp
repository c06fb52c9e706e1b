#include "eulercert/io.hpp"

#include <fstream>
#include <sstream>

namespace eulercert {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError((path.empty() ? std::string("/") : path) + ": " + what);
}

const Json& field(const Json& j, const std::string& path, const char* key) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path, std::string("missing field \"") + key + "\"");
  return *it;
}

const Json& array_at(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

long long integer(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<long long>();
}

std::size_t dimension_field(const Json& j, const std::string& path) {
  const long long d = integer(field(j, path, "dimension"), path + "/dimension");
  if (d < 1 || d > static_cast<long long>(kMaxDimension)) fail(path + "/dimension", "dimension must be 1..3");
  return static_cast<std::size_t>(d);
}

Rational decimal_from_json(const Json& j, const std::string& path) {
  try {
    if (j.is_string()) return parse_number(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path, "expected a decimal string");
}

// Runs `body`, re-throwing geometry and argument errors with the path.
template <class F>
auto at_path(const std::string& path, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Json to_json(const Point& p) {
  Json out = Json::array();
  for (const auto& c : p.coords()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Polytope& p) {
  Json vs = Json::array();
  for (const auto& v : p.vertices()) vs.push_back(to_json(v));
  return Json{{"vertices", vs}};
}

Json to_json(const ConstructibleFunction& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) terms.push_back(Json{{"coeff", t.coeff}, {"polytope", to_json(t.support)}});
  return Json{{"dimension", f.dimension()}, {"terms", terms}};
}

Json to_json(const SheafSum& s) {
  Json sums = Json::array();
  for (const auto& m : s.summands()) {
    const auto& inner = m.support.inner();
    sums.push_back(Json{{"outer", to_json(m.support.outer())},
                        {"inner", inner ? to_json(*inner) : Json(nullptr)},
                        {"shift", m.shift},
                        {"multiplicity", m.multiplicity}});
  }
  return Json{{"dimension", s.dimension()}, {"summands", sums}};
}

Json to_json(const AffineMap& f) {
  Json rows = Json::array();
  for (const auto& row : f.matrix()) {
    Json r = Json::array();
    for (const auto& a : row) r.push_back(to_json(a));
    rows.push_back(r);
  }
  return Json{{"matrix", rows}, {"offset", to_json(f.offset())}};
}

Json to_json(const Certificate& c) {
  Json steps = Json::array();
  for (const auto& s : c.steps)
    steps.push_back(Json{{"F", to_json(s.f)},
                         {"G", to_json(s.g)},
                         {"bound", decimal_up(s.declared_bound)},
                         {"chi_F", to_json(s.chi_f)},
                         {"chi_G", to_json(s.chi_g)}});
  return Json{{"epsilon", decimal_up(c.epsilon)},
              {"source", to_json(c.source)},
              {"target", to_json(c.target)},
              {"steps", steps}};
}

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) fail(path, "expected a rational string \"p/q\"");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
}

Point point_from_json(const Json& j, const std::string& path) {
  array_at(j, path);
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rational_from_json(j[i], path + "/" + std::to_string(i)));
  return Point(std::move(coords));
}

Polytope polytope_from_json(const Json& j, const std::string& path) {
  const std::string vpath = path + "/vertices";
  const Json& vs = array_at(field(j, path, "vertices"), vpath);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    pts.push_back(point_from_json(vs[i], vpath + "/" + std::to_string(i)));
    if (pts.back().dimension() != pts.front().dimension())
      fail(vpath + "/" + std::to_string(i), "vertex dimension differs from vertex 0");
  }
  return at_path(vpath, [&] { return Polytope::from_vertices(std::move(pts)); });
}

ConstructibleFunction cf_from_json(const Json& j, const std::string& path) {
  const std::size_t dim = dimension_field(j, path);
  const std::string tpath = path + "/terms";
  const Json& ts = array_at(field(j, path, "terms"), tpath);
  ConstructibleFunction f(dim);
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const std::string p = tpath + "/" + std::to_string(i);
    const long long c = integer(field(ts[i], p, "coeff"), p + "/coeff");
    const Polytope poly = polytope_from_json(field(ts[i], p, "polytope"), p + "/polytope");
    if (poly.dimension() != dim) fail(p + "/polytope", "polytope dimension does not match \"dimension\"");
    f.add_term(c, poly);
  }
  return f;
}

SheafSum sheaf_from_json(const Json& j, const std::string& path) {
  const std::size_t dim = dimension_field(j, path);
  const std::string spath = path + "/summands";
  const Json& ss = array_at(field(j, path, "summands"), spath);
  std::vector<Summand> out;
  for (std::size_t i = 0; i < ss.size(); ++i) {
    const std::string p = spath + "/" + std::to_string(i);
    const Polytope outer = polytope_from_json(field(ss[i], p, "outer"), p + "/outer");
    if (outer.dimension() != dim) fail(p + "/outer", "polytope dimension does not match \"dimension\"");
    const auto it = ss[i].find("inner");
    std::optional<Polytope> inner;
    if (it != ss[i].end() && !it->is_null()) {
      inner = polytope_from_json(*it, p + "/inner");
      if (inner->dimension() != dim) fail(p + "/inner", "polytope dimension does not match \"dimension\"");
    }
    const long long shift = integer(field(ss[i], p, "shift"), p + "/shift");
    const long long mult = integer(field(ss[i], p, "multiplicity"), p + "/multiplicity");
    if (mult < 1) fail(p + "/multiplicity", "multiplicity must be positive");
    if (shift < -1000000 || shift > 1000000) fail(p + "/shift", "shift out of range");
    const Support support =
        inner ? at_path(p, [&] { return Support::difference(outer, *inner); }) : Support::plain(outer);
    out.push_back({support, static_cast<int>(shift), mult});
  }
  return SheafSum(dim, std::move(out));
}

AffineMap map_from_json(const Json& j, const std::string& path) {
  const Json& rows = array_at(field(j, path, "matrix"), path + "/matrix");
  std::vector<std::vector<Rational>> matrix;
  for (std::size_t i = 0; i < rows.size(); ++i)
    matrix.push_back(point_from_json(rows[i], path + "/matrix/" + std::to_string(i)).coords());
  const Point offset = point_from_json(field(j, path, "offset"), path + "/offset");
  return at_path(path, [&] { return AffineMap(std::move(matrix), offset); });
}

Certificate certificate_from_json(const Json& j, const std::string& path) {
  Certificate c{decimal_from_json(field(j, path, "epsilon"), path + "/epsilon"),
                cf_from_json(field(j, path, "source"), path + "/source"),
                cf_from_json(field(j, path, "target"), path + "/target"),
                {}};
  const std::string spath = path + "/steps";
  const Json& steps = array_at(field(j, path, "steps"), spath);
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const std::string p = spath + "/" + std::to_string(i);
    const Json& s = steps[i];
    c.steps.push_back({sheaf_from_json(field(s, p, "F"), p + "/F"), sheaf_from_json(field(s, p, "G"), p + "/G"),
                       decimal_from_json(field(s, p, "bound"), p + "/bound"),
                       cf_from_json(field(s, p, "chi_F"), p + "/chi_F"),
                       cf_from_json(field(s, p, "chi_G"), p + "/chi_G")});
  }
  return c;
}

Point parse_point(const std::string& text) {
  std::vector<Rational> coords;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty coordinate in point '" + text + "'");
    try {
      coords.push_back(parse_number(item.substr(b, e - b + 1)));
    } catch (const std::exception& ex) {
      throw InputError("bad point '" + text + "': " + ex.what());
    }
  }
  if (coords.empty() || coords.size() > kMaxDimension) throw InputError("point '" + text + "' must have 1..3 coordinates");
  return Point(std::move(coords));
}

Json read_json_file(const std::string& filename) {
  std::ifstream in(filename);
  if (!in) throw InputError(filename + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(filename + ": malformed JSON: " + e.what());
  }
}

}  // namespace eulercert
