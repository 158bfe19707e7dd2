#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "tqsim/kauffman.hpp"
#include "tqsim/knot_table.hpp"

using namespace tqsim;

namespace {

LaurentPoly poly_from(std::initializer_list<std::pair<int, std::int64_t>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p.add_term(e, c);
  return p;
}

ClosedKnot knot(const std::string& name, Closure c) {
  auto k = builtin_knot(name, c);
  REQUIRE(k.has_value());
  return *k;
}

}  // namespace

TEST_CASE("laurent arithmetic is exact and normalised") {
  LaurentPoly p = poly_from({{2, 1}, {-2, 1}});
  LaurentPoly q = poly_from({{2, -1}, {-2, -1}});
  CHECK((p + q).is_zero());
  const LaurentPoly d = bracket_loop_value();
  CHECK((d * d) == poly_from({{4, 1}, {0, 2}, {-4, 1}}));
  CHECK(p.coeff(2) == 1);
  CHECK(p.coeff(0) == 0);
}

TEST_CASE("bracket of the Hopf link") {
  const LaurentPoly b = bracket(knot("hopf-", Closure::trace));
  CHECK(b == poly_from({{4, -1}, {-4, -1}}));
  // Same unoriented diagram for the positive Hopf trace braid.
  CHECK(bracket(knot("hopf+", Closure::trace)) == poly_from({{4, -1}, {-4, -1}}));
}

TEST_CASE("bracket of the trefoils") {
  CHECK(bracket(knot("trefoilL", Closure::trace)) ==
        poly_from({{7, 1}, {3, -1}, {-5, -1}}));
  CHECK(bracket(knot("trefoilR", Closure::trace)) ==
        poly_from({{-7, 1}, {-3, -1}, {5, -1}}));
}

TEST_CASE("bracket of the figure eight") {
  CHECK(bracket(knot("fig8", Closure::trace)) ==
        poly_from({{8, 1}, {4, -1}, {0, 1}, {-4, -1}, {-8, 1}}));
}

TEST_CASE("bracket of the unknot") {
  CHECK(bracket(knot("unknot", Closure::trace)) == LaurentPoly::constant(1));
  CHECK(bracket(knot("unknot", Closure::plat)) == LaurentPoly::constant(1));
}

TEST_CASE("jones of the named knots") {
  // V(t) in A-exponent form via t = A^-4.
  CHECK(jones(knot("hopf+", Closure::trace)).in_A ==
        poly_from({{-10, -1}, {-2, -1}}));  // -t^{5/2} - t^{1/2}
  CHECK(jones(knot("hopf-", Closure::trace)).in_A ==
        poly_from({{10, -1}, {2, -1}}));  // -t^{-5/2} - t^{-1/2}
  CHECK(jones(knot("trefoilR", Closure::trace)).in_A ==
        poly_from({{-16, -1}, {-12, 1}, {-4, 1}}));  // -t^4 + t^3 + t
  CHECK(jones(knot("trefoilL", Closure::trace)).in_A ==
        poly_from({{16, -1}, {12, 1}, {4, 1}}));
  CHECK(jones(knot("fig8", Closure::trace)).in_A ==
        poly_from({{-8, 1}, {-4, -1}, {0, 1}, {4, -1}, {8, 1}}));
  CHECK(jones(knot("unknot", Closure::trace)).in_A == LaurentPoly::constant(1));
}

TEST_CASE("jones is the same for both closures of each knot") {
  for (const char* name : {"unknot", "hopf+", "hopf-", "trefoilL", "trefoilR", "fig8"}) {
    const JonesPoly a = jones(knot(name, Closure::trace));
    const JonesPoly b = jones(knot(name, Closure::plat));
    CHECK(a.in_A == b.in_A);
  }
}

TEST_CASE("chirality is detected") {
  CHECK(!(jones(knot("trefoilL", Closure::trace)).in_A ==
          jones(knot("trefoilR", Closure::trace)).in_A));
}

TEST_CASE("evaluation at roots of unity") {
  // Hopf bracket at k=4 vanishes.
  const LaurentPoly b = bracket(knot("hopf-", Closure::trace));
  CHECK(std::abs(b.eval(bracket_variable_at_root(4))) < 1e-12);

  // Any knot evaluates to exactly 1 at k=3.
  for (const char* name : {"hopf+", "hopf-", "trefoilL", "trefoilR", "fig8"}) {
    const auto v = eval_at_root(jones(knot(name, Closure::trace)), 3);
    CHECK(std::abs(v - cd(1.0, 0.0)) < 1e-12);
  }

  for (int k = 3; k <= 13; ++k) {
    const auto v = eval_at_root(jones(knot("unknot", Closure::trace)), k);
    CHECK(std::abs(v - cd(1.0, 0.0)) < 1e-14);
  }
}

TEST_CASE("crossing limit") {
  BraidWord w(2, {});
  for (int i = 0; i < 30; ++i) w.letters.push_back(1);
  CHECK_THROWS(bracket(ClosedKnot(w, Closure::trace)));
  CHECK_NOTHROW(bracket(ClosedKnot(w, Closure::trace), 32));
}

TEST_CASE("polynomial rendering") {
  const JonesPoly hopf = jones(knot("hopf+", Closure::trace));
  CHECK(hopf.in_A.to_string_t() == "-t^5/2 - t^1/2");
  CHECK(jones(knot("unknot", Closure::trace)).in_A.to_string_t() == "1");
  const LaurentPoly b = bracket(knot("hopf+", Closure::trace));
  CHECK(b.to_string_A() == "-A^4 - A^-4");
  CHECK(b.exponent_list() == "-4:-1 4:-1");
}
