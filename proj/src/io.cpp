#include "jetsym/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "jetsym/expression.hpp"

namespace jetsym {

namespace {

const Json& field(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw Error(what + ": missing field '" + key + "'");
  return j.at(key);
}

std::string as_string(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw Error(what + ": expected a string");
}

std::vector<std::string> string_list(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + ": expected a list");
  std::vector<std::string> out;
  for (const auto& e : j) out.push_back(as_string(e, what));
  return out;
}

Rational as_rational(const Json& j, const std::string& what) { return parse_rational(as_string(j, what)); }

// "2,1" or a classical alias such as "alpha".
MultiIndex multi_index(const std::string& key, const std::vector<std::string>& base) {
  if (auto alias = parse_jet_name(key, base)) return *alias;
  MultiIndex s;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (part.empty() || part.find_first_not_of("0123456789 ") != std::string::npos)
      throw Error("bad multi-index '" + key + "'");
    s.push_back(static_cast<unsigned>(std::stoul(part)));
  }
  if (s.size() != base.size()) throw Error("multi-index '" + key + "' does not match the base");
  return s;
}

std::vector<std::pair<MultiIndex, std::string>> jet_map(const Json& j, const std::vector<std::string>& base,
                                                        const std::string& what) {
  if (!j.is_object()) throw Error(what + ": expected a map from multi-index to expression");
  std::vector<std::pair<MultiIndex, std::string>> out;
  for (const auto& [key, value] : j.items()) out.emplace_back(multi_index(key, base), as_string(value, what));
  return out;
}

VectorField field_from_map(const Json& j, const VarList& vars, const std::string& what) {
  if (!j.is_object()) throw Error(what + ": expected a map from coordinate to expression");
  std::vector<std::pair<std::string, std::string>> comps;
  for (const auto& [key, value] : j.items()) {
    comps.emplace_back(key, as_string(value, what));
    try {
      (void)VectorField::parse(vars, {comps.back()});
    } catch (const ParseError& e) {
      throw Error(what + ", component '" + key + "': " + e.what());
    }
  }
  return VectorField::parse(vars, comps);
}

}  // namespace

Json parse_json(std::string_view text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(source + ": invalid JSON", e.byte);
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

DistributionModel distribution_from_json(const Json& j) {
  const auto vars = make_varlist(string_list(field(j, "chart", "model"), "chart"));
  std::vector<VectorField> gens;
  for (const auto& g : field(j, "generators", "model")) gens.push_back(field_from_map(g, vars, "generator"));
  DistributionModel out{Distribution(vars, gens), std::nullopt};
  if (j.contains("point")) {
    PointAssignment p(vars->size());
    std::vector<bool> seen(vars->size(), false);
    for (const auto& [key, value] : j.at("point").items()) {
      const auto it = std::find(vars->begin(), vars->end(), key);
      if (it == vars->end()) throw Error("point: unknown coordinate '" + key + "'");
      const auto i = static_cast<std::size_t>(it - vars->begin());
      p[i] = as_rational(value, "point");
      seen[i] = true;
    }
    for (std::size_t i = 0; i < seen.size(); ++i)
      if (!seen[i]) throw Error("point: no value for '" + (*vars)[i] + "'");
    out.point = p;
  }
  return out;
}

EquationChart equation_from_json(const Json& j) {
  const auto base = string_list(field(j, "base", "PDE model"), "base");
  const auto& ord = field(j, "order", "PDE model");
  if (!ord.is_number_unsigned()) throw Error("PDE model: order must be a positive integer");
  const auto params = j.contains("parameters") ? string_list(j.at("parameters"), "parameters") : std::vector<std::string>{};
  const auto top = jet_map(field(j, "top", "PDE model"), base, "top");
  const auto lower = j.contains("lower") ? jet_map(j.at("lower"), base, "lower")
                                         : std::vector<std::pair<MultiIndex, std::string>>{};
  const std::string name = j.contains("name") ? as_string(j.at("name"), "name") : "file";
  return EquationChart(name, base, params, ord.get<unsigned>(), top, lower);
}

GradedLieAlgebra lie_algebra_from_json(const Json& j) {
  const auto& layers = field(j, "layers", "Lie algebra");
  if (!layers.is_object()) throw Error("layers: expected a map from degree to labels");
  std::vector<std::pair<int, std::vector<std::string>>> by_degree;
  for (const auto& [key, value] : layers.items()) {
    int d = 0;
    try {
      std::size_t used = 0;
      d = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw Error("layers: bad degree '" + key + "'");
    }
    by_degree.emplace_back(d, string_list(value, "layer"));
  }
  // Deepest-first ordering would scramble g_{-1}; keep -1, -2, ... then 0, 1, ...
  std::sort(by_degree.begin(), by_degree.end(), [](const auto& a, const auto& b) {
    if ((a.first < 0) != (b.first < 0)) return a.first < 0;
    return a.first < 0 ? a.first > b.first : a.first < b.first;
  });
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (const auto& [d, ls] : by_degree)
    for (const auto& l : ls) {
      if (std::find(labels.begin(), labels.end(), l) != labels.end()) throw Error("layers: duplicate label '" + l + "'");
      labels.push_back(l);
      degrees.push_back(d);
    }
  GradedLieAlgebra a(labels, degrees);
  auto index = [&](const Json& v) {
    const std::string l = as_string(v, "bracket");
    const auto i = a.index_of(l);
    if (!i) throw Error("brackets: unknown label '" + l + "'");
    return *i;
  };
  if (j.contains("brackets"))
    for (const auto& b : j.at("brackets")) {
      const std::size_t x = index(field(b, "x", "bracket")), y = index(field(b, "y", "bracket"));
      if (x == y) throw Error("brackets: [" + a.label(x) + ", " + a.label(x) + "] must not be given");
      QVector v(a.dim());
      const auto& value = field(b, "value", "bracket");
      if (value.is_object()) {
        for (const auto& [l, c] : value.items()) v[index(Json(l))] += as_rational(c, "bracket value");
      } else if (value.is_array()) {
        for (const auto& pair : value) {
          if (!pair.is_array() || pair.size() != 2) throw Error("bracket value: expected [label, rational] pairs");
          v[index(pair[0])] += as_rational(pair[1], "bracket value");
        }
      } else {
        throw Error("bracket value: expected a map or a list of pairs");
      }
      a.set_bracket(x, y, v);
    }
  return a;
}

std::vector<NamedExpr> generating_functions_from_json(const Json& j) {
  const Json& list = j.is_object() ? field(j, "functions", "generating functions") : j;
  if (!list.is_array()) throw Error("generating functions: expected a list");
  std::vector<NamedExpr> out;
  for (const auto& e : list) {
    if (e.is_string()) {
      out.emplace_back(e.get<std::string>(), e.get<std::string>());
    } else {
      const std::string f = as_string(field(e, "f", "generating function"), "f");
      out.emplace_back(e.contains("name") ? as_string(e.at("name"), "name") : f, f);
    }
  }
  return out;
}

std::vector<std::pair<std::string, VectorField>> fields_from_json(const Json& j, const VarList& vars) {
  if (j.contains("chart") && string_list(j.at("chart"), "chart") != *vars)
    throw Error("fields: chart does not match the model chart");
  std::vector<std::pair<std::string, VectorField>> out;
  for (const auto& f : field(j, "fields", "fields file")) {
    const std::string name = as_string(field(f, "name", "field"), "name");
    out.emplace_back(name, field_from_map(field(f, "components", "field " + name), vars, "field " + name));
  }
  return out;
}

std::vector<std::pair<std::string, VectorField>> fields_from_json(const Json& j) {
  return fields_from_json(j, make_varlist(string_list(field(j, "chart", "fields file"), "chart")));
}

Weights weights_from_json(const Json& j) {
  const Json& m = j.contains("weights") ? j.at("weights") : j;
  if (!m.is_object()) throw Error("weights: expected a map from name to integer or integer list");
  Weights out;
  for (const auto& [key, value] : m.items()) {
    if (value.is_number_integer()) {
      out[key] = {value.get<int>()};
    } else if (value.is_array()) {
      for (const auto& c : value) {
        if (!c.is_number_integer()) throw Error("weights: non-integer entry for '" + key + "'");
        out[key].push_back(c.get<int>());
      }
    } else {
      throw Error("weights: bad entry for '" + key + "'");
    }
  }
  return out;
}

std::map<std::string, int> coordinate_weights_from_json(const Json& j) {
  std::map<std::string, int> out;
  for (const auto& [key, w] : weights_from_json(j)) {
    if (w.size() != 1) throw Error("weights: coordinate '" + key + "' needs a single integer");
    out[key] = w[0];
  }
  return out;
}

// ---------------------------------------------------------------------------

Json to_json(const Rational& q) { return q.get_str(); }

Json to_json(const QVector& v) {
  Json out = Json::array();
  for (const auto& q : v) out.push_back(to_json(q));
  return out;
}

Json to_json(const VectorField& v) {
  Json out = Json::object();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out[(*v.vars())[i]] = v[i].to_string();
  return out;
}

Json to_json(const Distribution& d) {
  Json gens = Json::array();
  for (const auto& b : d.basis()) gens.push_back(to_json(b));
  return {{"chart", *d.vars()}, {"generators", gens}};
}

Json to_json(const GradedLieAlgebra& a) {
  Json layers = Json::object();
  for (int d : a.degrees_present()) {
    Json labels = Json::array();
    for (std::size_t i : a.layer(d)) labels.push_back(a.label(i));
    layers[std::to_string(d)] = labels;
  }
  Json brackets = Json::array();
  for (std::size_t x = 0; x < a.dim(); ++x)
    for (std::size_t y = x + 1; y < a.dim(); ++y) {
      const QVector& v = a.bracket(x, y);
      Json value = Json::object();
      for (std::size_t c = 0; c < v.size(); ++c)
        if (sgn(v[c]) != 0) value[a.label(c)] = to_json(v[c]);
      if (!value.empty()) brackets.push_back({{"x", a.label(x)}, {"y", a.label(y)}, {"value", value}});
    }
  return {{"layers", layers}, {"brackets", brackets}};
}

Json growth_json(const std::vector<std::size_t>& g) { return Json(g); }

}  // namespace jetsym
