#include "qpot/novikov.hpp"

#include <algorithm>
#include <map>

#include "qpot/error.hpp"

namespace qpot {

Int NovikovTerm::degree() const {
  Int d(0);
  for (const auto& e : exponents) d += e;
  return d;
}

void Potential::validate() const {
  std::set<std::string> vars(variables.begin(), variables.end());
  std::set<std::string> pars(parameters.begin(), parameters.end());
  if (vars.size() != variables.size())
    throw Error("MalformedSpec", "duplicate variable name");
  if (pars.size() != parameters.size())
    throw Error("MalformedSpec", "duplicate parameter name");
  for (const auto& v : variables)
    if (v.empty() || v == "T") throw Error("MalformedSpec", "invalid variable name '" + v + "'");
  for (const auto& p : parameters)
    if (p.empty() || p == "T") throw Error("MalformedSpec", "invalid parameter name '" + p + "'");
  for (const auto& t : terms) {
    if (t.exponents.size() != variables.size())
      throw Error("MalformedSpec", "exponent vector length does not match declared variables");
    for (const auto& [name, c] : t.area.coefficients()) {
      (void)c;
      if (!pars.count(name))
        throw Error("MalformedSpec", "area references undeclared parameter '" + name + "'");
    }
  }
}

namespace {

// Three-way canonical comparison, coefficient excluded.
int term_key_compare(const NovikovTerm& a, const NovikovTerm& b,
                     const std::vector<std::string>& parameter_order) {
  Int da = a.degree(), db = b.degree();
  if (da != db) return da > db ? -1 : 1;
  for (size_t i = 0; i < a.exponents.size(); ++i)
    if (a.exponents[i] != b.exponents[i]) return a.exponents[i] > b.exponents[i] ? -1 : 1;
  int c = a.area.compare(b.area, parameter_order);
  return -c;
}

}  // namespace

Potential collect(const Potential& p) {
  Potential out;
  out.variables = p.variables;
  out.parameters = p.parameters;
  std::vector<NovikovTerm> merged;
  for (const auto& t : p.terms) {
    if (t.exponents.size() != p.variables.size())
      throw Error("DimensionMismatch", "exponent vector length mismatch");
    bool found = false;
    for (auto& m : merged) {
      if (m.exponents == t.exponents && m.area == t.area) {
        m.coefficient += t.coefficient;
        m.class_tags.insert(t.class_tags.begin(), t.class_tags.end());
        found = true;
        break;
      }
    }
    if (!found) merged.push_back(t);
  }
  for (auto& m : merged)
    if (m.coefficient != 0) out.terms.push_back(std::move(m));
  std::stable_sort(out.terms.begin(), out.terms.end(),
                   [&](const NovikovTerm& a, const NovikovTerm& b) {
                     return term_key_compare(a, b, out.parameters) < 0;
                   });
  return out;
}

Potential substitute_exponents(const Potential& p, const IntMatrix& projection,
                               const std::vector<std::string>& new_variables) {
  if (projection.cols() != static_cast<int>(p.variables.size()))
    throw Error("DimensionMismatch", "projection columns must match potential variables");
  if (projection.rows() != static_cast<int>(new_variables.size()))
    throw Error("DimensionMismatch", "projection rows must match new variable names");
  Potential out;
  out.variables = new_variables;
  out.parameters = p.parameters;
  for (const auto& t : p.terms) {
    NovikovTerm nt = t;
    nt.exponents = projection.apply(t.exponents);
    out.terms.push_back(std::move(nt));
  }
  return collect(out);
}

Potential eliminate_parameters(const Potential& p, const std::vector<Constraint>& constraints) {
  // row: sum coeff * param = rhs
  struct Row {
    AffineFunctional lin;  // constant unused; coefficients only
    Rat rhs;
  };
  std::map<std::string, AffineFunctional> solved;  // pivot -> expression
  std::vector<std::string> solve_order;

  for (const auto& c : constraints) {
    Row row;
    row.rhs = c.value - c.lhs.constant();
    for (const auto& [name, coeff] : c.lhs.coefficients()) {
      bool declared = std::find(p.parameters.begin(), p.parameters.end(), name) != p.parameters.end();
      if (!declared)
        throw Error("MalformedSpec", "constraint references undeclared parameter '" + name + "'");
      row.lin.set_coefficient(name, coeff);
    }
    // Substitute parameters already solved.
    for (const auto& [pivot, expr] : solved) {
      Rat coeff = row.lin.coefficient(pivot);
      if (coeff == 0) continue;
      row.lin.set_coefficient(pivot, Rat(0));
      row.rhs -= coeff * expr.constant();
      for (const auto& [name, ec] : expr.coefficients())
        row.lin.set_coefficient(name, row.lin.coefficient(name) + coeff * ec);
    }
    // Pivot: last-declared parameter with a nonzero coefficient.
    std::string pivot;
    for (auto it = p.parameters.rbegin(); it != p.parameters.rend(); ++it) {
      if (row.lin.coefficient(*it) != 0) {
        pivot = *it;
        break;
      }
    }
    if (pivot.empty()) {
      if (row.rhs != 0)
        throw Error("InconsistentConstraints", "constraints have no common solution");
      continue;  // redundant
    }
    Rat pc = row.lin.coefficient(pivot);
    AffineFunctional expr(row.rhs / pc);
    for (const auto& [name, coeff] : row.lin.coefficients()) {
      if (name == pivot) continue;
      expr.set_coefficient(name, -coeff / pc);
    }
    solved.emplace(pivot, std::move(expr));
    solve_order.push_back(pivot);
  }

  // Back-substitute later-solved pivots into earlier expressions.
  for (auto it = solve_order.rbegin(); it != solve_order.rend(); ++it) {
    const AffineFunctional final_expr = solved.at(*it);
    for (auto& [pivot, expr] : solved) {
      if (pivot == *it) continue;
      expr.substitute(*it, final_expr);
    }
  }

  Potential out;
  out.variables = p.variables;
  for (const auto& name : p.parameters)
    if (!solved.count(name)) out.parameters.push_back(name);
  for (const auto& t : p.terms) {
    NovikovTerm nt = t;
    for (const auto& [pivot, expr] : solved) nt.area.substitute(pivot, expr);
    out.terms.push_back(std::move(nt));
  }
  return collect(out);
}

Rat evaluate_area(const NovikovTerm& t, const std::map<std::string, Rat>& point) {
  return t.area.evaluate(point);
}

std::string render_term(const NovikovTerm& t, const Potential& p) {
  std::string monomial;
  for (size_t i = 0; i < p.variables.size(); ++i) {
    const Int& e = t.exponents[i];
    if (e == 0) continue;
    if (!monomial.empty()) monomial += "*";
    monomial += p.variables[i];
    if (e != 1) monomial += "^" + e.str();
  }
  std::string tpart;
  if (!t.area.is_zero()) tpart = "T^{" + t.area.render(p.parameters) + "}";

  Rat mag = t.coefficient < 0 ? Rat(-t.coefficient) : t.coefficient;
  std::string body;
  if (monomial.empty() && tpart.empty()) {
    body = rat_to_string(mag);
  } else {
    if (mag != 1) body = rat_to_string(mag) + "*";
    body += monomial;
    if (!tpart.empty()) {
      if (!monomial.empty()) body += "*";
      body += tpart;
    }
  }
  return body;
}

std::string render(const Potential& p) {
  if (p.terms.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms) {
    bool neg = t.coefficient < 0;
    if (first) {
      if (neg) out += "-";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += render_term(t, p);
  }
  return out;
}

bool same_potential(const Potential& a, const Potential& b) {
  Potential ca = collect(a), cb = collect(b);
  if (ca.variables != cb.variables || ca.parameters != cb.parameters) return false;
  if (ca.terms.size() != cb.terms.size()) return false;
  for (size_t i = 0; i < ca.terms.size(); ++i) {
    const auto& x = ca.terms[i];
    const auto& y = cb.terms[i];
    if (x.coefficient != y.coefficient || x.exponents != y.exponents || !(x.area == y.area))
      return false;
  }
  return true;
}

}  // namespace qpot
