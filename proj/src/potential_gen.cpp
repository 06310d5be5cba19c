#include "qpot/potential_gen.hpp"

#include "qpot/error.hpp"

namespace qpot {

Potential toric_potential(const Polytope& p, const std::vector<std::string>& variable_names,
                          const std::vector<std::string>& parameter_names) {
  int m = p.dim();
  Potential w;
  if (!variable_names.empty()) {
    if (static_cast<int>(variable_names.size()) != m)
      throw Error("DimensionMismatch", "variable name count must match dimension");
    w.variables = variable_names;
  } else {
    for (int i = 1; i <= m; ++i) w.variables.push_back("y" + std::to_string(i));
  }
  if (!parameter_names.empty()) {
    if (static_cast<int>(parameter_names.size()) != m)
      throw Error("DimensionMismatch", "parameter name count must match dimension");
    w.parameters = parameter_names;
  } else {
    for (int i = 1; i <= m; ++i) w.parameters.push_back("u" + std::to_string(i));
  }
  int idx = 0;
  for (const auto& f : p.facets()) {
    NovikovTerm t;
    t.coefficient = 1;
    t.exponents = f.normal;
    AffineFunctional area(-f.offset);
    for (int j = 0; j < m; ++j) area.set_coefficient(w.parameters[j], Rat(f.normal[j]));
    t.area = area;
    t.class_tags = {"f" + std::to_string(idx)};
    w.terms.push_back(std::move(t));
    ++idx;
  }
  return collect(w);
}

Polytope quadric_moment_polytope(int n) {
  if (n < 2) throw Error("InvalidDimension", "quadric dimension must be at least 2");
  std::vector<FacetIneq> facets;
  auto e = [&](int i) {
    IntVec v(n, Int(0));
    v[i] = 1;
    return v;
  };
  IntVec f0(n, Int(0));
  f0[0] = 1;
  f0[1] = 1;
  facets.push_back({f0, Rat(0)});  // u1 + u2 >= 0
  IntVec f1(n, Int(0));
  f1[0] = -1;
  f1[1] = 1;
  facets.push_back({f1, Rat(0)});  // u2 - u1 >= 0
  for (int j = 2; j < n; ++j) {
    IntVec v(n, Int(0));
    v[j] = 1;
    v[j - 1] = -1;
    facets.push_back({v, Rat(0)});  // u_{j+1} - u_j >= 0
  }
  IntVec fn = e(n - 1);
  for (auto& x : fn) x = -x;
  facets.push_back({fn, Rat(-n)});  // n - u_n >= 0
  return Polytope::from_facets(n, std::move(facets));
}

Potential quadric_potential(int n) {
  if (n < 2) throw Error("InvalidDimension", "quadric dimension must be at least 2");
  Potential w = toric_potential(quadric_moment_polytope(n));
  NovikovTerm extra;
  extra.coefficient = 2;
  extra.exponents.assign(n, Int(0));
  extra.exponents[1] = 1;
  AffineFunctional area;
  area.set_coefficient("u2", Rat(1));
  extra.area = area;
  extra.class_tags = {"extra"};
  w.terms.push_back(std::move(extra));
  return collect(w);
}

const Potential& PotentialRegistry::register_potential(const std::string& name,
                                                       const Potential& spec) {
  spec.validate();
  Potential normalized = collect(spec);
  auto [it, inserted] = entries_.insert_or_assign(name, std::move(normalized));
  (void)inserted;
  return it->second;
}

const Potential& PotentialRegistry::get(const std::string& name) const {
  auto it = entries_.find(name);
  if (it == entries_.end()) throw Error("UnknownCase", "no potential registered as '" + name + "'");
  return it->second;
}

}  // namespace qpot
