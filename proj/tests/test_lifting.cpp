#include <doctest.h>

#include "qpot/error.hpp"
#include "qpot/git_reduction.hpp"
#include "qpot/lifting.hpp"

using namespace qpot;

namespace {

Potential base_potential(int n) {
  Potential p;
  p.variables = {"z"};
  p.parameters = n > 0 ? std::vector<std::string>{"u", "nu"} : std::vector<std::string>{"u"};
  NovikovTerm b1;
  b1.coefficient = 1;
  b1.exponents = {Int(1)};
  b1.area.set_coefficient("u", Rat(1));
  b1.class_tags = {"b1"};
  NovikovTerm b2;
  b2.coefficient = 1;
  b2.exponents = {Int(-1)};
  b2.area = AffineFunctional(Rat(1));
  b2.area.set_coefficient("u", Rat(-1));
  if (n > 0) b2.area.set_coefficient("nu", Rat(n));
  b2.class_tags = {"b2"};
  p.terms = {b1, b2};
  return collect(p);
}

LiftSpec o_spec(int n) {
  LiftSpec spec;
  spec.fiber_variable = "y2";
  spec.degree = n;
  if (n > 0) spec.fiber_class_area.set_coefficient("nu", Rat(1));
  spec.weights = chern_weights({"b1", "b2"}, n);
  spec.base_variables = std::vector<std::string>{"y1"};
  return spec;
}

}  // namespace

TEST_CASE("chern weights for the two-class relation") {
  CHECK(chern_weights({"b1", "b2"}, 0) ==
        std::map<std::string, Int>{{"b1", Int(0)}, {"b2", Int(0)}});
  CHECK(chern_weights({"b1", "b2"}, 1) ==
        std::map<std::string, Int>{{"b1", Int(0)}, {"b2", Int(1)}});
  CHECK(chern_weights({"b1", "b2"}, 3) ==
        std::map<std::string, Int>{{"b1", Int(0)}, {"b2", Int(3)}});
  CHECK_THROWS_WITH_AS(chern_weights({"b1", "b2", "b3"}, 2),
                       doctest::Contains("UnsupportedShape"), Error);
}

TEST_CASE("lift inserts fiber exponents and preserves areas") {
  for (int n = 0; n <= 4; ++n) {
    Potential base = base_potential(n);
    Potential lifted = lift_potential(base, o_spec(n));
    CHECK(lifted.variables == std::vector<std::string>{"y1", "y2"});
    REQUIRE(lifted.terms.size() == 2);
    for (const auto& t : lifted.terms) {
      const NovikovTerm* src = nullptr;
      for (const auto& s : base.terms)
        if (s.class_tags == t.class_tags) src = &s;
      REQUIRE(src != nullptr);
      CHECK(t.coefficient == src->coefficient);
      CHECK(t.area == src->area);
      CHECK(t.exponents[0] == src->exponents[0]);
      CHECK(t.exponents[1] == (t.class_tags.count("b2") ? Int(n) : Int(0)));
    }
  }
  CHECK(render(lift_potential(base_potential(3), o_spec(3))) ==
        "y1^-1*y2^3*T^{1+3*nu-u} + y1*T^{u}");
  CHECK(render(lift_potential(base_potential(1), o_spec(1))) ==
        "y1*T^{u} + y1^-1*y2*T^{1+nu-u}");
}

TEST_CASE("all-zero weights adjoin the fiber variable trivially") {
  Potential base = base_potential(0);
  Potential lifted = lift_potential(base, o_spec(0));
  CHECK(render(lifted) == "y1*T^{u} + y1^-1*T^{1-u}");
  for (const auto& t : lifted.terms) CHECK(t.exponents[1] == 0);
}

TEST_CASE("missing weight is an error") {
  LiftSpec spec = o_spec(2);
  spec.weights.erase("b2");
  CHECK_THROWS_WITH_AS(lift_potential(base_potential(2), spec),
                       doctest::Contains("MissingWeight"), Error);
}

TEST_CASE("round trip: reduction along the fiber recovers the base") {
  for (int n = 0; n <= 4; ++n) {
    Potential base = base_potential(n);
    Potential lifted = lift_potential(base, o_spec(n));
    SubtorusAction act;
    act.matrix = IntMatrix({{Int(0), Int(1)}});
    act.offsets = {Rat(0)};
    act.level = {Rat(0)};
    act.overrides["*"] = Verdict::Semistable;
    act.explicit_constraints = std::vector<Constraint>{};
    StabilityReport rep = report_from_overrides(lifted, act);
    NamingConfig naming;
    naming.variables = std::vector<std::string>{"z"};
    naming.keep_parameters = true;
    Potential back = quotient_potential(lifted, act, rep, naming);
    CHECK(render(back) == render(base));
  }
}
