#include "qpot/corpus.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>

#include "qpot/error.hpp"
#include "qpot/lifting.hpp"
#include "qpot/potential_gen.hpp"
#include "qpot/textparse.hpp"

#ifndef QPOT_CORPUS_DIR
#define QPOT_CORPUS_DIR "corpus"
#endif

namespace qpot {

namespace fs = std::filesystem;

std::string corpus_dir() {
  if (const char* env = std::getenv("QP_CORPUS_DIR")) return env;
  return QPOT_CORPUS_DIR;
}

std::vector<std::string> list_cases(const std::string& root) {
  std::vector<std::string> names;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(root, ec)) {
    if (!entry.is_directory()) continue;
    if (fs::exists(entry.path() / "input.json")) names.push_back(entry.path().filename().string());
  }
  std::sort(names.begin(), names.end());
  return names;
}

namespace {

Potential potential_from_input(const Json& input) {
  if (input.contains("quadric_n")) return quadric_potential(input.at("quadric_n").get<int>());
  if (input.contains("potential")) return potential_from_json(input.at("potential"));
  if (input.contains("polytope")) {
    bool unbounded = input.value("allow_unbounded", false);
    return toric_potential(polytope_from_json(input.at("polytope"), unbounded));
  }
  throw Error("MalformedSpec", "input needs a potential, polytope, or quadric_n");
}

std::string run_reduce(const Json& input) {
  SubtorusAction act = action_from_json(input.at("action"));
  NamingConfig naming = naming_from_json(input.at("action"));
  Potential w = potential_from_input(input);
  StabilityReport report;
  if (input.contains("polytope")) {
    Polytope p = polytope_from_json(input.at("polytope"));
    report = classify_classes(p, act);
  } else {
    report = report_from_overrides(w, act);
  }
  return render(quotient_potential(w, act, report, naming));
}

std::string run_dual_count(const Json& input) {
  Polytope p = input.contains("quadric_n")
                   ? quadric_moment_polytope(input.at("quadric_n").get<int>())
                   : polytope_from_json(input.at("polytope"));
  Polytope dual = dual_newton_polytope(p);
  auto verts = dual.vertices();
  auto pts = lattice_points(dual);
  std::string out;
  out += "vertices: " + std::to_string(verts.size()) + "\n";
  out += "lattice_points: " + std::to_string(pts.size()) + "\n";
  out += "vertex_set:\n";
  for (const auto& v : verts) out += format_point(v) + "\n";
  out += "lattice_point_set:\n";
  for (const auto& q : pts) {
    RatVec r(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] = Rat(q[i]);
    out += format_point(r) + "\n";
  }
  out.pop_back();  // callers append the final newline
  return out;
}

}  // namespace

std::string run_input(const Json& input) {
  if (!input.is_object() || !input.contains("run"))
    throw Error("MalformedSpec", "input.json needs a run field");
  std::string kind = input.at("run").get<std::string>();
  if (kind == "potential") {
    bool unbounded = input.value("allow_unbounded", false);
    return render(toric_potential(polytope_from_json(input.at("polytope"), unbounded)));
  }
  if (kind == "quadric") return render(quadric_potential(input.at("n").get<int>()));
  if (kind == "stability") {
    Polytope p = polytope_from_json(input.at("polytope"));
    SubtorusAction act = action_from_json(input.at("action"));
    std::string text = render_report(classify_classes(p, act));
    while (!text.empty() && text.back() == '\n') text.pop_back();
    return text;
  }
  if (kind == "reduce") return run_reduce(input);
  if (kind == "lift") {
    Potential base = potential_from_json(input.at("potential"));
    LiftSpec spec = liftspec_from_json(input.at("lift"));
    return render(lift_potential(base, spec));
  }
  if (kind == "roundtrip") {
    Potential base = potential_from_json(input.at("potential"));
    LiftSpec spec = liftspec_from_json(input.at("lift"));
    Potential lifted = lift_potential(base, spec);
    SubtorusAction act = action_from_json(input.at("action"));
    NamingConfig naming = naming_from_json(input.at("action"));
    StabilityReport report = report_from_overrides(lifted, act);
    return render(quotient_potential(lifted, act, report, naming));
  }
  if (kind == "dual_count") return run_dual_count(input);
  throw Error("UnknownCase", "unknown run kind '" + kind + "'");
}

std::string diff_canonical(const std::string& expected, const std::string& computed) {
  Potential pe, pc;
  try {
    pe = parse_potential(expected);
    pc = parse_potential(computed);
  } catch (const std::exception&) {
    return "  expected: " + expected + "\n  computed: " + computed;
  }
  std::string out;
  for (const auto& t : pe.terms) {
    std::string r = render_term(t, pe);
    bool found = false;
    for (const auto& u : pc.terms)
      if (render_term(u, pc) == r && u.coefficient == t.coefficient) found = true;
    if (!found) out += std::string("  missing term: ") + (t.coefficient < 0 ? "-" : "") + r + "\n";
  }
  for (const auto& u : pc.terms) {
    std::string r = render_term(u, pc);
    bool found = false;
    for (const auto& t : pe.terms)
      if (render_term(t, pe) == r && u.coefficient == t.coefficient) found = true;
    if (!found)
      out += std::string("  unexpected term: ") + (u.coefficient < 0 ? "-" : "") + r + "\n";
  }
  if (out.empty())
    out = "  expected: " + expected + "\n  computed: " + computed;
  else
    out.pop_back();
  return out;
}

CaseResult run_case(const std::string& root, const std::string& name) {
  CaseResult res;
  res.name = name;
  fs::path dir = fs::path(root) / name;
  if (!fs::exists(dir / "input.json"))
    throw Error("UnknownCase", "no corpus case named '" + name + "' under " + root);
  try {
    Json input = load_json_file((dir / "input.json").string());
    res.computed = run_input(input) + "\n";
    res.expected = read_file((dir / "expected.txt").string());
    res.match = res.computed == res.expected;
    if (!res.match) {
      std::string e = res.expected;
      while (!e.empty() && e.back() == '\n') e.pop_back();
      std::string c = res.computed;
      while (!c.empty() && c.back() == '\n') c.pop_back();
      res.message = diff_canonical(e, c);
    }
  } catch (const std::exception& ex) {
    res.match = false;
    res.message = ex.what();
  }
  return res;
}

VerifyReport verify_all(const std::string& root) {
  VerifyReport rep;
  for (const auto& name : list_cases(root)) {
    CaseResult r = run_case(root, name);
    ++rep.total;
    if (!r.match) ++rep.failures;
    rep.results.push_back(std::move(r));
  }
  return rep;
}

}  // namespace qpot
