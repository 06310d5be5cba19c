#include "qpot/affine.hpp"

#include "qpot/error.hpp"

namespace qpot {

AffineFunctional::AffineFunctional(Rat constant, std::map<std::string, Rat> coeffs)
    : constant_(std::move(constant)), coeffs_(std::move(coeffs)) {
  for (auto it = coeffs_.begin(); it != coeffs_.end();)
    it = (it->second == 0) ? coeffs_.erase(it) : std::next(it);
}

Rat AffineFunctional::coefficient(const std::string& name) const {
  auto it = coeffs_.find(name);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

void AffineFunctional::set_coefficient(const std::string& name, const Rat& value) {
  if (value == 0)
    coeffs_.erase(name);
  else
    coeffs_[name] = value;
}

void AffineFunctional::add_scaled(const AffineFunctional& other, const Rat& scale) {
  if (scale == 0) return;
  constant_ += scale * other.constant_;
  for (const auto& [name, c] : other.coeffs_) set_coefficient(name, coefficient(name) + scale * c);
}

void AffineFunctional::substitute(const std::string& name, const AffineFunctional& expr) {
  auto it = coeffs_.find(name);
  if (it == coeffs_.end()) return;
  Rat c = it->second;
  coeffs_.erase(it);
  add_scaled(expr, c);
}

void AffineFunctional::rename_parameter(const std::string& from, const std::string& to) {
  auto it = coeffs_.find(from);
  if (it == coeffs_.end()) return;
  Rat c = it->second;
  coeffs_.erase(it);
  set_coefficient(to, coefficient(to) + c);
}

Rat AffineFunctional::evaluate(const std::map<std::string, Rat>& point) const {
  Rat v = constant_;
  for (const auto& [name, c] : coeffs_) {
    auto it = point.find(name);
    if (it == point.end()) throw Error("MissingParameter", "parameter '" + name + "' unassigned");
    v += c * it->second;
  }
  return v;
}

namespace {

void append_item(std::string& out, const std::string& body, bool negative) {
  if (out.empty())
    out += negative ? "-" : "";
  else
    out += negative ? "-" : "+";
  out += body;
}

std::string scaled_name(const Rat& mag, const std::string& name) {
  if (mag == 1) return name;
  return rat_to_string(mag) + "*" + name;
}

}  // namespace

std::string AffineFunctional::render(const std::vector<std::string>& parameter_order) const {
  if (is_zero()) return "0";
  std::string out;
  if (constant_ > 0) append_item(out, rat_to_string(constant_), false);
  for (const auto& p : parameter_order) {
    Rat c = coefficient(p);
    if (c > 0) append_item(out, scaled_name(c, p), false);
  }
  if (constant_ < 0) append_item(out, rat_to_string(-constant_), true);
  for (const auto& p : parameter_order) {
    Rat c = coefficient(p);
    if (c < 0) append_item(out, scaled_name(-c, p), true);
  }
  return out;
}

int AffineFunctional::compare(const AffineFunctional& rhs,
                              const std::vector<std::string>& parameter_order) const {
  for (const auto& p : parameter_order) {
    Rat a = coefficient(p), b = rhs.coefficient(p);
    if (a != b) return a > b ? 1 : -1;
  }
  if (constant_ != rhs.constant_) return constant_ > rhs.constant_ ? 1 : -1;
  return 0;
}

}  // namespace qpot
