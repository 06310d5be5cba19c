#include "qpot/lifting.hpp"

#include "qpot/error.hpp"

namespace qpot {

Potential lift_potential(const Potential& base, const LiftSpec& spec) {
  Potential out;
  if (spec.base_variables) {
    if (spec.base_variables->size() != base.variables.size())
      throw Error("DimensionMismatch", "base variable rename count mismatch");
    out.variables = *spec.base_variables;
  } else {
    out.variables = base.variables;
  }
  out.variables.push_back(spec.fiber_variable);
  out.parameters = base.parameters;
  for (const auto& t : base.terms) {
    if (t.class_tags.empty())
      throw Error("MissingWeight", "term without class tag cannot be lifted");
    std::optional<Int> weight;
    for (const auto& tag : t.class_tags) {
      auto it = spec.weights.find(tag);
      if (it == spec.weights.end())
        throw Error("MissingWeight", "no fiber weight for class '" + tag + "'");
      if (weight && *weight != it->second)
        throw Error("MissingWeight", "merged classes with conflicting fiber weights");
      weight = it->second;
    }
    NovikovTerm nt = t;
    nt.exponents.push_back(*weight);
    out.terms.push_back(std::move(nt));
  }
  out.validate();
  return collect(out);
}

std::map<std::string, Int> chern_weights(const std::vector<std::string>& relation_classes,
                                         int degree) {
  if (relation_classes.size() != 2)
    throw Error("UnsupportedShape",
                "only the two-class spherical relation is supported");
  return {{relation_classes[0], Int(0)}, {relation_classes[1], Int(degree)}};
}

}  // namespace qpot
