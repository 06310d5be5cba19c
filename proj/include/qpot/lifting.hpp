#pragma once

#include <map>
#include <optional>
#include <string>

#include "qpot/novikov.hpp"

namespace qpot {

// Going-up data for a rank-1 fiber: each base class gains the fiber variable
// raised to its integer weight; coefficients and areas are untouched.
struct LiftSpec {
  std::string fiber_variable;
  int degree = 0;                       // bundle degree n
  AffineFunctional fiber_class_area;    // area of the fiberwise disk class
  std::map<std::string, Int> weights;   // class tag -> fiber exponent
  std::optional<std::vector<std::string>> base_variables;  // rename base vars
};

// Throws Error("MissingWeight") when a base class has no weight.
Potential lift_potential(const Potential& base, const LiftSpec& spec);

// Weights for the two-class spherical relation d(b1) + d(b2) = n * d(b0):
// {first: 0, second: n}. Throws Error("UnsupportedShape") otherwise.
std::map<std::string, Int> chern_weights(const std::vector<std::string>& relation_classes,
                                         int degree);

}  // namespace qpot
