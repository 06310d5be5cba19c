#include "qpot/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qpot/error.hpp"

namespace qpot {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error("MalformedSpec", what); }

Int int_from_json(const Json& j) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_string()) {
    Rat q = rat_from_string(j.get<std::string>());
    if (rat_den(q) != 1) bad("expected an integer, got '" + j.get<std::string>() + "'");
    return rat_num(q);
  }
  bad("expected an integer");
}

}  // namespace

Json rat_to_json(const Rat& q) { return rat_to_string(q); }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  bad("expected a rational (integer or \"p/q\" string)");
}

Json affine_to_json(const AffineFunctional& f) {
  Json j = Json::object();
  j["constant"] = rat_to_json(f.constant());
  Json coeffs = Json::object();
  for (const auto& [name, c] : f.coefficients()) coeffs[name] = rat_to_json(c);
  j["coefficients"] = coeffs;
  return j;
}

AffineFunctional affine_from_json(const Json& j) {
  if (!j.is_object()) bad("area must be an object");
  AffineFunctional f;
  if (j.contains("constant")) f = AffineFunctional(rat_from_json(j.at("constant")));
  if (j.contains("coefficients")) {
    if (!j.at("coefficients").is_object()) bad("area coefficients must be an object");
    for (const auto& [name, v] : j.at("coefficients").items())
      f.set_coefficient(name, rat_from_json(v));
  }
  return f;
}

Json potential_to_json(const Potential& p) {
  Json j = Json::object();
  j["variables"] = p.variables;
  j["parameters"] = p.parameters;
  Json terms = Json::array();
  for (const auto& t : p.terms) {
    Json jt = Json::object();
    jt["coefficient"] = rat_to_json(t.coefficient);
    Json exps = Json::array();
    for (const auto& e : t.exponents) {
      long long small;
      try {
        small = e.convert_to<long long>();
        exps.push_back(small);
      } catch (...) {
        exps.push_back(e.str());
      }
    }
    jt["exponents"] = exps;
    jt["area"] = affine_to_json(t.area);
    if (!t.class_tags.empty()) jt["classes"] = t.class_tags;
    terms.push_back(jt);
  }
  j["terms"] = terms;
  return j;
}

Potential potential_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms")) bad("potential must be an object with terms");
  Potential p;
  if (j.contains("variables")) p.variables = j.at("variables").get<std::vector<std::string>>();
  if (j.contains("parameters")) p.parameters = j.at("parameters").get<std::vector<std::string>>();
  for (const auto& jt : j.at("terms")) {
    NovikovTerm t;
    t.coefficient = jt.contains("coefficient") ? rat_from_json(jt.at("coefficient")) : Rat(1);
    if (!jt.contains("exponents") || !jt.at("exponents").is_array())
      bad("term needs an exponents array");
    for (const auto& e : jt.at("exponents")) t.exponents.push_back(int_from_json(e));
    if (jt.contains("area")) t.area = affine_from_json(jt.at("area"));
    if (jt.contains("classes"))
      for (const auto& c : jt.at("classes")) t.class_tags.insert(c.get<std::string>());
    if (jt.contains("class")) t.class_tags.insert(jt.at("class").get<std::string>());
    p.terms.push_back(std::move(t));
  }
  p.validate();
  return p;
}

Json polytope_to_json(const Polytope& p) {
  Json j = Json::object();
  j["dim"] = p.dim();
  Json facets = Json::array();
  for (const auto& f : p.facets()) {
    Json jf = Json::object();
    Json normal = Json::array();
    for (const auto& x : f.normal) normal.push_back(x.convert_to<long long>());
    jf["normal"] = normal;
    jf["offset"] = rat_to_json(f.offset);
    facets.push_back(jf);
  }
  j["facets"] = facets;
  return j;
}

Polytope polytope_from_json(const Json& j, bool allow_unbounded) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("facets"))
    bad("polytope must be an object with dim and facets");
  int dim = j.at("dim").get<int>();
  std::vector<FacetIneq> facets;
  for (const auto& jf : j.at("facets")) {
    FacetIneq f;
    if (!jf.contains("normal")) bad("facet needs a normal");
    for (const auto& x : jf.at("normal")) f.normal.push_back(int_from_json(x));
    f.offset = jf.contains("offset") ? rat_from_json(jf.at("offset")) : Rat(0);
    facets.push_back(std::move(f));
  }
  return Polytope::from_facets(dim, std::move(facets), allow_unbounded);
}

SubtorusAction action_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("matrix")) bad("action must be an object with a matrix");
  SubtorusAction act;
  std::vector<IntVec> rows;
  for (const auto& jr : j.at("matrix")) {
    IntVec r;
    for (const auto& x : jr) r.push_back(int_from_json(x));
    rows.push_back(std::move(r));
  }
  if (rows.empty()) bad("action matrix must have at least one row");
  act.matrix = IntMatrix::from_rows(rows);
  if (j.contains("offsets"))
    for (const auto& x : j.at("offsets")) act.offsets.push_back(rat_from_json(x));
  else
    act.offsets.assign(act.matrix.rows(), Rat(0));
  if (j.contains("level"))
    for (const auto& x : j.at("level")) act.level.push_back(rat_from_json(x));
  else
    act.level.assign(act.matrix.rows(), Rat(0));
  if (static_cast<int>(act.offsets.size()) != act.matrix.rows() ||
      static_cast<int>(act.level.size()) != act.matrix.rows())
    bad("offsets and level must have one entry per matrix row");
  if (j.contains("overrides")) {
    for (const auto& [tag, v] : j.at("overrides").items()) {
      std::string s = v.get<std::string>();
      if (s == "semistable")
        act.overrides[tag] = Verdict::Semistable;
      else if (s == "unstable")
        act.overrides[tag] = Verdict::Unstable;
      else
        bad("override verdict must be 'semistable' or 'unstable'");
    }
  }
  if (j.contains("constraints")) {
    std::vector<Constraint> cs;
    for (const auto& jc : j.at("constraints")) {
      Constraint c;
      AffineFunctional lhs;
      if (jc.contains("constant")) lhs.add_constant(rat_from_json(jc.at("constant")));
      if (jc.contains("linear"))
        for (const auto& [name, v] : jc.at("linear").items())
          lhs.set_coefficient(name, rat_from_json(v));
      c.lhs = lhs;
      c.value = jc.contains("value") ? rat_from_json(jc.at("value")) : Rat(0);
      cs.push_back(std::move(c));
    }
    act.explicit_constraints = std::move(cs);
  }
  return act;
}

NamingConfig naming_from_json(const Json& j) {
  NamingConfig cfg;
  if (!j.is_object() || !j.contains("naming")) return cfg;
  const Json& n = j.at("naming");
  if (n.contains("variables")) cfg.variables = n.at("variables").get<std::vector<std::string>>();
  if (n.contains("parameters")) {
    const Json& p = n.at("parameters");
    if (p.is_string()) {
      if (p.get<std::string>() != "keep") bad("naming.parameters must be \"keep\" or a map");
      cfg.keep_parameters = true;
    } else if (p.is_object()) {
      for (const auto& [from, to] : p.items()) cfg.parameter_map[from] = to.get<std::string>();
    } else {
      bad("naming.parameters must be \"keep\" or a map");
    }
  }
  return cfg;
}

LiftSpec liftspec_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("fiber_variable") || !j.contains("weights"))
    bad("lift spec needs fiber_variable and weights");
  LiftSpec spec;
  spec.fiber_variable = j.at("fiber_variable").get<std::string>();
  spec.degree = j.contains("degree") ? j.at("degree").get<int>() : 0;
  if (j.contains("fiber_class_area")) spec.fiber_class_area = affine_from_json(j.at("fiber_class_area"));
  for (const auto& [tag, v] : j.at("weights").items()) spec.weights[tag] = int_from_json(v);
  if (j.contains("base_variables"))
    spec.base_variables = j.at("base_variables").get<std::vector<std::string>>();
  return spec;
}

Json report_to_json(const StabilityReport& r) {
  Json j = Json::object();
  j["level_meets_interior"] = r.level_meets_interior;
  Json classes = Json::object();
  for (const auto& [tag, v] : r.class_verdicts)
    classes[tag] = v == Verdict::Semistable ? "semistable" : "unstable";
  j["classes"] = classes;
  Json faces = Json::array();
  for (const auto& f : r.faces) {
    Json jf = Json::object();
    jf["active"] = f.active_facets;
    jf["dim"] = f.dim;
    jf["meets_level"] = f.meets_level;
    if (f.meets_level) jf["free"] = f.free_action;
    faces.push_back(jf);
  }
  j["faces"] = faces;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("MalformedSpec", "cannot open file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json load_json_file(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::exception& e) {
    throw Error("MalformedSpec", "invalid JSON in '" + path + "': " + e.what());
  }
}

}  // namespace qpot
