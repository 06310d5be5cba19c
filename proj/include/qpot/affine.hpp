#pragma once

#include <map>
#include <string>
#include <vector>

#include "qpot/numeric.hpp"

namespace qpot {

// Exact affine-linear expression c0 + sum c_p * p over named parameters.
// Zero coefficients are never stored.
class AffineFunctional {
 public:
  AffineFunctional() = default;
  explicit AffineFunctional(Rat constant) : constant_(std::move(constant)) {}
  AffineFunctional(Rat constant, std::map<std::string, Rat> coeffs);

  const Rat& constant() const { return constant_; }
  const std::map<std::string, Rat>& coefficients() const { return coeffs_; }
  Rat coefficient(const std::string& name) const;

  void set_coefficient(const std::string& name, const Rat& value);
  void add_constant(const Rat& value) { constant_ += value; }
  // *this += scale * other
  void add_scaled(const AffineFunctional& other, const Rat& scale);
  // Replace a parameter by an affine expression.
  void substitute(const std::string& name, const AffineFunctional& expr);
  void rename_parameter(const std::string& from, const std::string& to);

  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_ == 0; }
  bool operator==(const AffineFunctional& rhs) const = default;

  // Throws Error("MissingParameter") when a referenced parameter is unassigned.
  Rat evaluate(const std::map<std::string, Rat>& point) const;

  // Canonical text, e.g. "1+u2", "v2-1", "2+v1-v2", "1+3*nu-u".
  // Positive items first (constant, then parameters in declared order),
  // then negative ones in the same order.
  std::string render(const std::vector<std::string>& parameter_order) const;

  // Three-way comparison using the declared parameter order, then constant.
  int compare(const AffineFunctional& rhs, const std::vector<std::string>& parameter_order) const;

 private:
  Rat constant_ = Rat(0);
  std::map<std::string, Rat> coeffs_;
};

}  // namespace qpot
