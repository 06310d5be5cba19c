#include <doctest.h>

#include "qpot/error.hpp"
#include "qpot/potential_gen.hpp"
#include "support.hpp"

using namespace qpot;
using namespace qpot_test;

namespace {

Polytope cp2() {
  return Polytope::from_facets(2, {{{Int(-1), Int(-1)}, Rat(-1)},
                                   {{Int(1), Int(0)}, Rat(-1)},
                                   {{Int(0), Int(1)}, Rat(-1)}});
}

}  // namespace

TEST_CASE("toric potential of CP2 matches the display") {
  CHECK(render(toric_potential(cp2())) ==
        "y1*T^{1+u1} + y2*T^{1+u2} + y1^-1*y2^-1*T^{1-u1-u2}");
}

TEST_CASE("toric potential of the interval is the CP1 potential") {
  Polytope seg = Polytope::from_facets(1, {{{Int(1)}, Rat(0)}, {{Int(-1)}, Rat(-1)}});
  CHECK(render(toric_potential(seg)) == "y1*T^{u1} + y1^-1*T^{1-u1}");
}

TEST_CASE("toric potential of the O(-n) total space") {
  for (int n = 1; n <= 3; ++n) {
    Polytope p = Polytope::from_facets(2,
                                       {{{Int(1), Int(0)}, Rat(0)},
                                        {{Int(0), Int(1)}, Rat(0)},
                                        {{Int(-1), Int(n)}, Rat(-1)}},
                                       true);
    Potential w = toric_potential(p);
    REQUIRE(w.terms.size() == 3);
    std::string npart = n == 1 ? "y2" : "y2^" + std::to_string(n);
    std::string napart = n == 1 ? "u2" : std::to_string(n) + "*u2";
    std::string fiber = "y1^-1*" + npart + "*T^{1+" + napart + "-u1}";
    // the fiber term leads once its total degree n-1 exceeds 1
    std::string expect = n <= 2 ? "y1*T^{u1} + y2*T^{u2} + " + fiber
                                : fiber + " + y1*T^{u1} + y2*T^{u2}";
    CHECK(render(w) == expect);
  }
}

TEST_CASE("toric terms: coefficient one, exponent equals area linear part") {
  Rng rng(99001);
  for (int it = 0; it < 15; ++it) {
    int dim = static_cast<int>(rand_int(rng, 2, 3));
    Polytope p = random_polytope(rng, dim);
    Potential w = toric_potential(p);
    CHECK(w.terms.size() == p.facets().size());
    for (const auto& t : w.terms) {
      CHECK(t.coefficient == 1);
      for (int j = 0; j < dim; ++j)
        CHECK(Rat(t.exponents[j]) == t.area.coefficient(w.parameters[j]));
    }
    // interior point: all areas positive; on facet i, term i's area vanishes
    RatVec inside = p.interior_point();
    std::map<std::string, Rat> point;
    for (int j = 0; j < dim; ++j) point[w.parameters[j]] = inside[j];
    for (const auto& t : w.terms) CHECK(evaluate_area(t, point) > 0);
    for (const auto& f : p.enumerate_faces()) {
      if (f.active_facets.size() != 1 || f.vertices.empty()) continue;
      int i = f.active_facets[0];
      std::map<std::string, Rat> on_facet;
      for (int j = 0; j < dim; ++j) on_facet[w.parameters[j]] = f.vertices[0][j];
      for (const auto& t : w.terms)
        if (t.class_tags.count("f" + std::to_string(i)))
          CHECK(evaluate_area(t, on_facet) == 0);
    }
  }
}

TEST_CASE("quadric potential shapes") {
  CHECK(render(quadric_potential(2)) ==
        "y1*y2*T^{u1+u2} + 2*y2*T^{u2} + y1^-1*y2*T^{u2-u1} + y2^-1*T^{2-u2}");
  Potential q3 = quadric_potential(3);
  CHECK(q3.terms.size() == 5);
  bool found_f0 = false;
  for (const auto& t : q3.terms)
    if (t.class_tags.count("f0")) {
      found_f0 = true;
      CHECK(t.exponents == IntVec{Int(1), Int(1), Int(0)});
      CHECK(t.area == AffineFunctional(Rat(0), {{"u1", Rat(1)}, {"u2", Rat(1)}}));
    }
  CHECK(found_f0);
  CHECK_THROWS_AS(quadric_potential(1), Error);
}

TEST_CASE("quadric potential restricted to toric terms") {
  for (int n = 2; n <= 5; ++n) {
    Potential q = quadric_potential(n);
    Potential toric = toric_potential(quadric_moment_polytope(n));
    Potential stripped;
    stripped.variables = q.variables;
    stripped.parameters = q.parameters;
    for (const auto& t : q.terms)
      if (!t.class_tags.count("extra")) stripped.terms.push_back(t);
    CHECK(same_potential(stripped, toric));
    CHECK(static_cast<int>(q.terms.size()) == n + 2);
  }
}

TEST_CASE("extra quadric term sits on a dual lattice point") {
  for (int n = 2; n <= 6; ++n) {
    Polytope dual = dual_newton_polytope(quadric_moment_polytope(n));
    IntVec e2(n, Int(0));
    e2[1] = 1;
    auto pts = lattice_points(dual);
    CHECK(std::find(pts.begin(), pts.end(), e2) != pts.end());
  }
}

TEST_CASE("registry validates and normalizes") {
  PotentialRegistry reg;
  Potential empty;
  reg.register_potential("empty", empty);
  CHECK(reg.get("empty").terms.empty());

  Potential bad;
  bad.variables = {"y"};
  NovikovTerm t;
  t.coefficient = 1;
  t.exponents = {Int(1), Int(2)};  // longer than the variable list
  bad.terms.push_back(t);
  CHECK_THROWS_AS(reg.register_potential("bad", bad), Error);
  CHECK_THROWS_AS(reg.get("missing"), Error);
}
