#include "qpot/textparse.hpp"

#include <algorithm>

#include "qpot/error.hpp"

namespace qpot {

namespace {

// "y2" < "y10"; digit runs compare numerically, the rest byte-wise.
bool natural_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    bool da = std::isdigit(static_cast<unsigned char>(a[i]));
    bool db = std::isdigit(static_cast<unsigned char>(b[j]));
    if (da && db) {
      size_t ia = i, jb = j;
      while (ia < a.size() && std::isdigit(static_cast<unsigned char>(a[ia]))) ++ia;
      while (jb < b.size() && std::isdigit(static_cast<unsigned char>(b[jb]))) ++jb;
      std::string na = a.substr(i, ia - i), nb = b.substr(j, jb - j);
      na.erase(0, std::min(na.find_first_not_of('0'), na.size() - 1));
      nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size() - 1));
      if (na.size() != nb.size()) return na.size() < nb.size();
      if (na != nb) return na < nb;
      i = ia;
      j = jb;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() < b.size();
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Potential run() {
    skip_ws();
    if (eof()) fail("empty input");
    parse_sum();
    skip_ws();
    if (!eof()) fail("trailing input");
    // the text does not encode declared order; names are sorted naturally
    std::vector<std::string> sorted_vars = variables_;
    std::sort(sorted_vars.begin(), sorted_vars.end(), natural_less);
    std::vector<size_t> remap(variables_.size());
    for (size_t k = 0; k < variables_.size(); ++k)
      remap[k] = std::find(sorted_vars.begin(), sorted_vars.end(), variables_[k]) -
                 sorted_vars.begin();
    Potential p;
    p.variables = sorted_vars;
    p.parameters = parameters_;
    std::sort(p.parameters.begin(), p.parameters.end(), natural_less);
    p.terms = std::move(terms_);
    for (auto& t : p.terms) {
      t.exponents.resize(variables_.size(), Int(0));
      IntVec e(variables_.size(), Int(0));
      for (size_t k = 0; k < variables_.size(); ++k) e[remap[k]] = t.exponents[k];
      t.exponents = std::move(e);
    }
    p.validate();
    return collect(p);
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    int line = 1, col = 1;
    for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  char get() {
    if (eof()) fail("unexpected end of input");
    return text_[pos_++];
  }
  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  void skip_ws() {
    while (!eof() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                      text_[pos_] == '\r'))
      ++pos_;
  }

  bool at_digit() const { return std::isdigit(static_cast<unsigned char>(peek())); }
  bool at_ident() const {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
  }

  Int parse_integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    if (!at_digit()) fail("expected a digit");
    std::string digits;
    while (at_digit()) digits += get();
    Int v(digits);
    return neg ? Int(-v) : v;
  }

  Rat parse_rational() {
    Int num = parse_integer();
    if (peek() == '/') {
      ++pos_;
      Int den = parse_integer();
      if (den == 0) fail("zero denominator");
      return Rat(num, den);
    }
    return Rat(num);
  }

  std::string parse_ident() {
    if (!at_ident()) fail("expected an identifier");
    std::string name;
    while (!eof() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_'))
      name += get();
    return name;
  }

  int var_index(const std::string& name) {
    auto it = std::find(variables_.begin(), variables_.end(), name);
    if (it != variables_.end()) return static_cast<int>(it - variables_.begin());
    variables_.push_back(name);
    return static_cast<int>(variables_.size()) - 1;
  }

  void note_parameter(const std::string& name) {
    if (std::find(parameters_.begin(), parameters_.end(), name) == parameters_.end())
      parameters_.push_back(name);
  }

  AffineFunctional parse_affine() {
    AffineFunctional f;
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    for (;;) {
      skip_ws();
      Rat sign = neg ? Rat(-1) : Rat(1);
      if (at_digit()) {
        Rat value = parse_rational();
        skip_ws();
        if (peek() == '*') {
          ++pos_;
          skip_ws();
          std::string name = parse_ident();
          if (name == "T") fail("'T' cannot appear inside a Novikov exponent");
          note_parameter(name);
          f.set_coefficient(name, f.coefficient(name) + sign * value);
        } else {
          f.add_constant(sign * value);
        }
      } else if (at_ident()) {
        std::string name = parse_ident();
        if (name == "T") fail("'T' cannot appear inside a Novikov exponent");
        note_parameter(name);
        f.set_coefficient(name, f.coefficient(name) + sign);
      } else {
        fail("expected a parameter or rational");
      }
      skip_ws();
      if (peek() == '+') {
        neg = false;
        ++pos_;
      } else if (peek() == '-') {
        neg = true;
        ++pos_;
      } else {
        break;
      }
    }
    return f;
  }

  void parse_term(bool negative) {
    NovikovTerm t;
    t.coefficient = negative ? Rat(-1) : Rat(1);
    std::map<int, Int> exps;
    bool saw_area = false, saw_any = false, first = true;
    for (;;) {
      skip_ws();
      if (first && (at_digit() || (peek() == '-' && !saw_any))) {
        t.coefficient *= parse_rational();
        saw_any = true;
      } else if (at_ident()) {
        std::string name = parse_ident();
        if (name == "T") {
          expect('^');
          expect('{');
          AffineFunctional area = parse_affine();
          skip_ws();
          expect('}');
          if (saw_area)
            t.area.add_scaled(area, Rat(1));
          else
            t.area = area;
          saw_area = true;
        } else {
          Int e(1);
          if (peek() == '^') {
            ++pos_;
            e = parse_integer();
          }
          int idx = var_index(name);
          exps[idx] += e;
        }
        saw_any = true;
      } else {
        fail("expected a coefficient, variable, or T^{...}");
      }
      first = false;
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (!saw_any) fail("empty term");
    t.exponents.assign(variables_.size(), Int(0));
    for (const auto& [idx, e] : exps) t.exponents[idx] = e;
    // positional class tags, t1 for the first term in the input
    t.class_tags = {"t" + std::to_string(terms_.size() + 1)};
    terms_.push_back(std::move(t));
  }

  void parse_sum() {
    bool neg = false;
    skip_ws();
    if (peek() == '-') {
      neg = true;
      ++pos_;
    }
    for (;;) {
      parse_term(neg);
      skip_ws();
      if (peek() == '+') {
        neg = false;
        ++pos_;
      } else if (peek() == '-') {
        neg = true;
        ++pos_;
      } else {
        break;
      }
    }
  }

  const std::string& text_;
  size_t pos_ = 0;
  std::vector<std::string> variables_;
  std::vector<std::string> parameters_;
  std::vector<NovikovTerm> terms_;
};

}  // namespace

Potential parse_potential(const std::string& text) { return Parser(text).run(); }

}  // namespace qpot
