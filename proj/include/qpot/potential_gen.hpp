#pragma once

#include <map>
#include <string>

#include "qpot/novikov.hpp"
#include "qpot/polytope.hpp"

namespace qpot {

// One term per facet: coefficient 1, exponent vector = facet normal,
// Novikov exponent <normal, u> - offset, class tag "f<i>". Parameters are
// named u1..um unless custom names are supplied.
Potential toric_potential(const Polytope& p,
                          const std::vector<std::string>& variable_names = {},
                          const std::vector<std::string>& parameter_names = {});

// Simplex { n >= u_n >= ... >= u_2 >= |u_1| } with facets f0..fn.
Polytope quadric_moment_polytope(int n);

// Toric terms of the quadric simplex plus the extra term 2*y2*T^{u2}
// (class tag "extra"); n + 2 terms in total.
Potential quadric_potential(int n);

// Validated, normalized storage for user-supplied potentials.
class PotentialRegistry {
 public:
  // Throws Error("MalformedSpec") on invalid data.
  const Potential& register_potential(const std::string& name, const Potential& spec);
  const Potential& get(const std::string& name) const;
  bool contains(const std::string& name) const { return entries_.count(name) > 0; }

 private:
  std::map<std::string, Potential> entries_;
};

}  // namespace qpot
