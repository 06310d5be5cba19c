#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpot/affine.hpp"
#include "qpot/intmatrix.hpp"

namespace qpot {

// One Laurent summand: coefficient * prod y_i^{a_i} * T^{area(u)}.
// Terms merged by collect() carry the union of their class tags.
struct NovikovTerm {
  Rat coefficient;
  IntVec exponents;  // aligned with Potential::variables
  AffineFunctional area;
  std::set<std::string> class_tags;

  Int degree() const;
};

// Finite Novikov-Laurent sum over declared variables and action parameters.
struct Potential {
  std::vector<std::string> variables;
  std::vector<std::string> parameters;
  std::vector<NovikovTerm> terms;

  // Throws Error("MalformedSpec") if term data refers outside the declared lists.
  void validate() const;
};

// Canonical order: descending total degree, then descending lex on exponent
// vectors, then descending area comparison (declared parameter order, then
// constant). Collation key is the pair (exponents, area); merged coefficients
// are summed exactly and zero terms dropped.
Potential collect(const Potential& p);

// Replace every exponent vector a by projection * a; areas are untouched.
Potential substitute_exponents(const Potential& p, const IntMatrix& projection,
                               const std::vector<std::string>& new_variables);

// Affine constraint ell(u) = value.
struct Constraint {
  AffineFunctional lhs;
  Rat value;
};

// Solve the constraints for a subset of parameters by exact Gaussian
// elimination (input order; pivot = last-declared unsolved parameter) and
// rewrite every area with the solved parameters eliminated. Remaining
// parameters stay symbolic. Throws InconsistentConstraints when unsolvable.
Potential eliminate_parameters(const Potential& p, const std::vector<Constraint>& constraints);

Rat evaluate_area(const NovikovTerm& t, const std::map<std::string, Rat>& point);

// Deterministic canonical rendering; doubles as the CLI input grammar.
std::string render(const Potential& p);
std::string render_term(const NovikovTerm& t, const Potential& p);

// Structural equality after collect(), class tags ignored.
bool same_potential(const Potential& a, const Potential& b);

}  // namespace qpot
