#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "tqsim/braid_word.hpp"
#include "tqsim/fib_anyons.hpp"
#include "tqsim/knot_table.hpp"

using namespace tqsim;

TEST_CASE("concat") {
  const BraidWord a(3, {1});
  const BraidWord b(3, {2});
  CHECK(concat(a, b).letters == std::vector<int>{1, 2});
  const BraidWord c(3, {1, -1});
  CHECK(concat(c, BraidWord(3, {})).letters == std::vector<int>{1, -1});
  CHECK_THROWS(concat(a, BraidWord(4, {2})));

  const BraidWord w(4, {2, 2});
  CHECK(free_reduce(concat(w, inverse(w))).letters.empty());
}

TEST_CASE("free_reduce") {
  CHECK(free_reduce(BraidWord(2, {1, -1})).letters.empty());
  CHECK(free_reduce(BraidWord(3, {2, 1, -1, -2})).letters.empty());
  CHECK(free_reduce(BraidWord(3, {1, 2, 1})).letters == std::vector<int>{1, 2, 1});
}

TEST_CASE("free_reduce is idempotent") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> letter(0, 5);
  for (int rep = 0; rep < 200; ++rep) {
    BraidWord w(4, {});
    for (int i = 0; i < 12; ++i) {
      int g = letter(rng) - 3;
      if (g >= 0) ++g;
      w.letters.push_back(g > 3 ? 3 : g);
    }
    const BraidWord once = free_reduce(w);
    CHECK(free_reduce(once).letters == once.letters);
  }
}

TEST_CASE("letters validated") {
  CHECK_THROWS(BraidWord(2, {2}));
  CHECK_THROWS(BraidWord(2, {0}));
  CHECK_NOTHROW(BraidWord(2, {1, -1}));
}

TEST_CASE("trace writhe is minus the exponent sum") {
  CHECK(writhe(ClosedKnot(BraidWord(2, {1, 1}), Closure::trace)) == -2);
  CHECK(writhe(ClosedKnot(BraidWord(2, {}), Closure::trace)) == 0);
  CHECK(writhe(ClosedKnot(BraidWord(3, {-2, 1, -2, 1}), Closure::trace)) == 0);
}

TEST_CASE("trace writhe of a word plus its inverse cancels") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> letter(1, 3);
  std::uniform_int_distribution<int> sign(0, 1);
  for (int rep = 0; rep < 100; ++rep) {
    BraidWord w(4, {});
    for (int i = 0; i < 10; ++i)
      w.letters.push_back(letter(rng) * (sign(rng) ? 1 : -1));
    const int a = writhe(ClosedKnot(w, Closure::trace));
    const int b = writhe(ClosedKnot(inverse(w), Closure::trace));
    CHECK(a + b == 0);
  }
}

TEST_CASE("plat writhe of the five test braids") {
  CHECK(writhe(ClosedKnot(BraidWord(4, {2, 2}), Closure::plat)) == 2);
  CHECK(writhe(ClosedKnot(BraidWord(4, {-2, -2}), Closure::plat)) == -2);
  CHECK(writhe(ClosedKnot(BraidWord(4, {-2, 1, -2}), Closure::plat)) == -3);
  CHECK(writhe(ClosedKnot(BraidWord(4, {2, -1, 2}), Closure::plat)) == 3);
  CHECK(writhe(ClosedKnot(BraidWord(4, {-2, -2, 1, -2}), Closure::plat)) == 0);
}

TEST_CASE("plat closure needs even strands") {
  CHECK_THROWS(ClosedKnot(BraidWord(3, {1}), Closure::plat));
}

TEST_CASE("braid relations on matrix families") {
  auto [s1, s2] = fib_single_qubit_generators();
  CHECK(verify_braid_relations({s1, s2}));
  const CMatrix ident = CMatrix::identity(2);
  CHECK(verify_braid_relations({ident, ident}));
  CHECK(verify_braid_relations({s1, CMatrix::diag({cd(1, 0), cd(2, 0)})}) == false);
}

TEST_CASE("knot text round trip") {
  for (const auto& entry : builtin_knots()) {
    for (Closure c : {Closure::trace, Closure::plat}) {
      const auto knot = builtin_knot(entry.name, c);
      REQUIRE(knot.has_value());
      const ClosedKnot back = knot_from_text(knot_to_text(*knot));
      CHECK(back.braid.strands == knot->braid.strands);
      CHECK(back.braid.letters == knot->braid.letters);
      CHECK((back.closure == knot->closure));
    }
  }
  CHECK_THROWS(knot_from_text("closure=trace\n1 2\n"));
  CHECK_THROWS(knot_from_text("n=3\n1 2\n"));
}
