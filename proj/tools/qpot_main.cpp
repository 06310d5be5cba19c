// Command-line front door: computes disk potentials, stability reports,
// GIT reductions, lifts, and dual Newton polytopes; `verify` runs the corpus.
#include <CLI11.hpp>
#include <iostream>

#include "qpot/corpus.hpp"
#include "qpot/error.hpp"
#include "qpot/lifting.hpp"
#include "qpot/potential_gen.hpp"
#include "qpot/textparse.hpp"

namespace {

using namespace qpot;

struct Options {
  bool json = false;
  bool allow_unbounded = false;
  std::string params;
};

std::map<std::string, Rat> parse_assignments(const std::string& text) {
  std::map<std::string, Rat> point;
  size_t pos = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = text.substr(pos, comma == std::string::npos ? comma : comma - pos);
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw Error("MalformedSpec", "--params expects name=value pairs, got '" + item + "'");
    std::string name = item.substr(0, eq);
    point[name] = rat_from_string(item.substr(eq + 1));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return point;
}

Potential apply_params(const Potential& p, const std::string& assignments) {
  std::map<std::string, Rat> point = parse_assignments(assignments);
  Potential out;
  out.variables = p.variables;
  for (auto t : p.terms) {
    t.area = AffineFunctional(evaluate_area(t, point));
    out.terms.push_back(std::move(t));
  }
  return collect(out);
}

void emit_potential(Potential p, const Options& opt) {
  if (!opt.params.empty()) p = apply_params(p, opt.params);
  if (opt.json)
    std::cout << potential_to_json(p).dump(2) << "\n";
  else
    std::cout << render(p) << "\n";
}

Potential load_potential_file(const std::string& path) {
  std::string text = read_file(path);
  size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && text[i] == '{')
    return potential_from_json(load_json_file(path));
  return parse_potential(text);
}

void emit_polytope_text(const Polytope& p) {
  std::cout << "dim " << p.dim() << "\n";
  int i = 0;
  for (const auto& f : p.facets()) {
    std::cout << "facet " << i++ << ": normal=(";
    for (size_t j = 0; j < f.normal.size(); ++j)
      std::cout << (j ? "," : "") << f.normal[j].str();
    std::cout << ") offset=" << rat_to_string(f.offset) << "\n";
  }
  std::cout << "vertices:";
  for (const auto& v : p.vertices()) std::cout << " " << format_point(v);
  std::cout << "\n";
}

int run_verify(bool json) {
  std::string root = corpus_dir();
  VerifyReport rep = verify_all(root);
  if (json) {
    Json j = Json::object();
    j["corpus"] = root;
    j["total"] = rep.total;
    j["failures"] = rep.failures;
    Json cases = Json::array();
    for (const auto& r : rep.results) {
      Json c = Json::object();
      c["name"] = r.name;
      c["match"] = r.match;
      if (!r.match) c["detail"] = r.message;
      cases.push_back(c);
    }
    j["cases"] = cases;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : rep.results) {
      std::cout << (r.match ? "PASS " : "FAIL ") << r.name << "\n";
      if (!r.match && !r.message.empty()) std::cout << r.message << "\n";
    }
    std::cout << rep.total << " cases, " << rep.failures << " failures\n";
  }
  if (rep.total == 0) {
    std::cerr << "suspicious: corpus at '" << root << "' contains no cases\n";
    return 1;
  }
  return rep.failures == 0 ? 0 : 1;
}

int dispatch(const std::string& cmd, const std::vector<std::string>& args, const Options& opt) {
  if (cmd == "potential") {
    Polytope p = polytope_from_json(load_json_file(args[0]), opt.allow_unbounded);
    emit_potential(toric_potential(p), opt);
    return 0;
  }
  if (cmd == "quadric") {
    int n = 0;
    try {
      n = std::stoi(args[0]);
    } catch (const std::exception&) {
      throw Error("MalformedSpec", "quadric expects an integer dimension");
    }
    emit_potential(quadric_potential(n), opt);
    return 0;
  }
  if (cmd == "stability") {
    Polytope p = polytope_from_json(load_json_file(args[0]));
    SubtorusAction act = action_from_json(load_json_file(args[1]));
    StabilityReport rep = classify_classes(p, act);
    if (opt.json)
      std::cout << report_to_json(rep).dump(2) << "\n";
    else
      std::cout << render_report(rep);
    return 0;
  }
  if (cmd == "reduce") {
    Json actj = load_json_file(args[1]);
    SubtorusAction act = action_from_json(actj);
    NamingConfig naming = naming_from_json(actj);
    std::string text = read_file(args[0]);
    size_t i = text.find_first_not_of(" \t\r\n");
    bool is_json = i != std::string::npos && text[i] == '{';
    Potential w;
    StabilityReport report;
    if (is_json) {
      Json inj = load_json_file(args[0]);
      if (inj.contains("facets")) {
        Polytope p = polytope_from_json(inj, opt.allow_unbounded);
        w = toric_potential(p);
        report = classify_classes(p, act);
      } else {
        w = potential_from_json(inj);
        report = report_from_overrides(w, act);
      }
    } else {
      w = parse_potential(text);
      report = report_from_overrides(w, act);
    }
    emit_potential(quotient_potential(w, act, report, naming), opt);
    return 0;
  }
  if (cmd == "lift") {
    Potential base = load_potential_file(args[0]);
    LiftSpec spec = liftspec_from_json(load_json_file(args[1]));
    emit_potential(lift_potential(base, spec), opt);
    return 0;
  }
  if (cmd == "dual") {
    Polytope p = polytope_from_json(load_json_file(args[0]));
    Polytope dual = dual_newton_polytope(p);
    if (opt.json) {
      Json j = polytope_to_json(dual);
      Json verts = Json::array();
      for (const auto& v : dual.vertices()) verts.push_back(format_point(v));
      j["vertices"] = verts;
      j["lattice_point_count"] = lattice_points(dual).size();
      std::cout << j.dump(2) << "\n";
    } else {
      emit_polytope_text(dual);
      std::cout << "lattice_points: " << lattice_points(dual).size() << "\n";
    }
    return 0;
  }
  if (cmd == "verify") return run_verify(opt.json);
  throw Error("MalformedSpec", "unknown command '" + cmd + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Novikov-Laurent disk potentials and GIT reduction"};
  app.require_subcommand(1);
  Options opt;

  struct Sub {
    CLI::App* cmd;
    std::vector<std::string> args;
  };
  std::map<std::string, Sub> subs;
  auto add = [&](const std::string& name, const std::string& desc,
                 const std::vector<std::string>& positionals) {
    CLI::App* c = app.add_subcommand(name, desc);
    auto& slot = subs[name];
    slot.cmd = c;
    slot.args.resize(positionals.size());
    for (size_t i = 0; i < positionals.size(); ++i)
      c->add_option(positionals[i], slot.args[i])->required();
    c->add_flag("--json", opt.json, "machine-readable output");
    c->add_option("--params", opt.params, "evaluate areas at a point, e.g. u1=0,u2=1/2");
    c->add_flag("--allow-unbounded", opt.allow_unbounded, "skip the boundedness check");
  };
  add("potential", "Cho-Oh toric potential of a moment polytope", {"polytope.json"});
  add("quadric", "quadric disk potential for dimension n", {"n"});
  add("stability", "classify disk classes at a moment level", {"polytope.json", "action.json"});
  add("reduce", "quotient potential through the reduction pipeline",
      {"potential.json|polytope.json", "action.json"});
  add("lift", "going-up lift along a rank-1 fiber", {"potential.json", "liftspec.json"});
  add("dual", "dual Newton polytope of the facet normals", {"polytope.json"});
  add("verify", "run every corpus case and report matches", {});

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    for (auto& [name, sub] : subs)
      if (sub.cmd->parsed()) return dispatch(name, sub.args, opt);
    return 2;
  } catch (const qpot::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const qpot::Error& e) {
    std::cerr << e.what() << "\n";
    return e.kind() == "MalformedSpec" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
