#include "qpot/git_reduction.hpp"

#include <algorithm>

#include "qpot/error.hpp"
#include "qpot/linprog.hpp"

namespace qpot {

namespace {

void apply_overrides(std::map<std::string, Verdict>& verdicts,
                     const std::map<std::string, Verdict>& overrides) {
  for (const auto& [tag, v] : overrides) {
    if (tag == "*") continue;
    verdicts[tag] = v;
  }
}

std::optional<Verdict> wildcard(const std::map<std::string, Verdict>& overrides) {
  auto it = overrides.find("*");
  if (it == overrides.end()) return std::nullopt;
  return it->second;
}

}  // namespace

StabilityReport classify_classes(const Polytope& p, const SubtorusAction& act) {
  if (act.matrix.cols() != p.dim())
    throw Error("DimensionMismatch", "action matrix columns must match polytope dimension");
  if (static_cast<int>(act.offsets.size()) != act.matrix.rows() ||
      static_cast<int>(act.level.size()) != act.matrix.rows())
    throw Error("DimensionMismatch", "offsets and level must match action rank");

  StabilityReport rep;
  std::vector<IntVec> action_rows = act.matrix.row_vectors();
  auto faces = p.enumerate_faces();
  for (const auto& face : faces) {
    FaceReport fr;
    fr.active_facets = face.active_facets;
    fr.dim = face.dim;
    fr.meets_level = project_face_contains(face, act.matrix, act.offsets, act.level);
    if (fr.meets_level) {
      auto stab = face_stabilizer_lattice(p, face);
      auto common = lattice_intersection(action_rows, stab, p.dim());
      fr.free_action = common.empty();
      fr.residual_isotropy = common;
    }
    if (face.active_facets.size() == 1) {
      std::string tag = "f" + std::to_string(face.active_facets[0]);
      rep.class_verdicts[tag] = fr.meets_level ? Verdict::Semistable : Verdict::Unstable;
    }
    rep.faces.push_back(std::move(fr));
  }

  // Whole-polytope face carries the interior test.
  std::vector<RatVec> projected;
  for (const auto& v : p.vertices()) {
    RatVec w(act.matrix.rows(), Rat(0));
    for (int i = 0; i < act.matrix.rows(); ++i) {
      for (int j = 0; j < act.matrix.cols(); ++j) w[i] += Rat(act.matrix.at(i, j)) * v[j];
      w[i] += act.offsets[i];
    }
    projected.push_back(std::move(w));
  }
  rep.level_meets_interior = in_relative_interior(projected, act.level);

  apply_overrides(rep.class_verdicts, act.overrides);
  return rep;
}

StabilityReport report_from_overrides(const Potential& w, const SubtorusAction& act) {
  StabilityReport rep;
  auto def = wildcard(act.overrides);
  for (const auto& t : w.terms)
    for (const auto& tag : t.class_tags) {
      auto it = act.overrides.find(tag);
      if (it != act.overrides.end())
        rep.class_verdicts[tag] = it->second;
      else if (def)
        rep.class_verdicts[tag] = *def;
    }
  apply_overrides(rep.class_verdicts, act.overrides);
  return rep;
}

Potential semistable_potential(const Potential& w, const StabilityReport& report) {
  Potential out;
  out.variables = w.variables;
  out.parameters = w.parameters;
  for (const auto& t : w.terms) {
    if (t.class_tags.empty())
      throw Error("MissingVerdict", "term without class tag cannot be classified");
    bool unstable = false;
    for (const auto& tag : t.class_tags) {
      auto it = report.class_verdicts.find(tag);
      if (it == report.class_verdicts.end())
        throw Error("MissingVerdict", "no verdict for class '" + tag + "'");
      if (it->second == Verdict::Unstable) unstable = true;
    }
    if (!unstable) out.terms.push_back(t);
  }
  return out;
}

Potential quotient_potential(const Potential& w, const SubtorusAction& act,
                             const StabilityReport& report, const NamingConfig& naming,
                             const AdaptedBasis* basis_override) {
  int m = static_cast<int>(w.variables.size());
  if (act.matrix.cols() != m)
    throw Error("DimensionMismatch", "action matrix columns must match potential variables");

  Potential ss = semistable_potential(w, report);

  AdaptedBasis basis =
      basis_override ? *basis_override : adapted_basis(act.matrix.row_vectors(), m);
  int s = basis.complement_projection.rows();

  std::vector<std::string> zvars;
  if (naming.variables) {
    if (static_cast<int>(naming.variables->size()) != s)
      throw Error("DimensionMismatch", "naming supplies wrong number of output variables");
    zvars = *naming.variables;
  } else {
    for (int i = 1; i <= s; ++i) zvars.push_back("z" + std::to_string(i));
  }
  Potential sub = substitute_exponents(ss, basis.complement_projection, zvars);

  std::vector<Constraint> constraints;
  if (act.explicit_constraints) {
    constraints = *act.explicit_constraints;
  } else {
    if (static_cast<int>(w.parameters.size()) != m)
      throw Error("DimensionMismatch",
                  "level constraints need one action parameter per variable; "
                  "supply explicit constraints instead");
    for (int i = 0; i < act.matrix.rows(); ++i) {
      Constraint c;
      c.lhs = AffineFunctional(act.offsets[i]);
      for (int j = 0; j < m; ++j) c.lhs.set_coefficient(w.parameters[j], Rat(act.matrix.at(i, j)));
      c.value = act.level[i];
      constraints.push_back(std::move(c));
    }
  }
  Potential red = eliminate_parameters(sub, constraints);

  // Rename surviving parameters.
  std::map<std::string, std::string> rename;
  if (!naming.parameter_map.empty()) {
    rename = naming.parameter_map;
  } else if (!naming.keep_parameters) {
    int i = 1;
    for (const auto& p : red.parameters) rename[p] = "v" + std::to_string(i++);
  }
  if (!rename.empty()) {
    Potential named;
    named.variables = red.variables;
    for (const auto& p : red.parameters) {
      auto it = rename.find(p);
      named.parameters.push_back(it == rename.end() ? p : it->second);
    }
    for (auto t : red.terms) {
      for (const auto& [from, to] : rename) t.area.rename_parameter(from, to);
      named.terms.push_back(std::move(t));
    }
    red = std::move(named);
  }
  return collect(red);
}

std::string render_report(const StabilityReport& report) {
  std::string out;
  out += "level_meets_interior: ";
  out += report.level_meets_interior ? "true" : "false";
  out += "\n";
  for (const auto& [tag, v] : report.class_verdicts) {
    out += "class " + tag + ": ";
    out += v == Verdict::Semistable ? "semistable" : "unstable";
    out += "\n";
  }
  for (const auto& f : report.faces) {
    out += "face {";
    for (size_t i = 0; i < f.active_facets.size(); ++i)
      out += (i ? "," : "") + std::to_string(f.active_facets[i]);
    out += "}: meets_level=";
    out += f.meets_level ? "true" : "false";
    if (f.meets_level) {
      out += " free=";
      out += f.free_action ? "true" : "false";
    }
    out += "\n";
  }
  return out;
}

}  // namespace qpot
