#include <doctest.h>

#include "lbkit/homotopy.hpp"
#include "lbkit/obstruction.hpp"
#include "support/seed.hpp"

using namespace lbkit;
using lbkit::testing::uniform;

namespace {

const GroupElement x{1};

CrossedClass class_of(int parity) { return CrossedClass{{{x, parity}}}; }

// A valid trace over Z/2 with random moves and cycles.
HomotopyTrace random_trace(std::mt19937_64& g) {
  HomotopyTrace t = empty_trace(xpq_group());
  const int fingers = uniform(g, 0, 3), whitneys = uniform(g, 0, 3);
  for (int i = 0; i < fingers; ++i) t.moves.push_back(FingerMove{{uniform(g, 0, 1)}});
  for (int i = 0; i < whitneys; ++i) t.moves.push_back(WhitneyMove{{uniform(g, 0, 1)}});
  int minima = 2 * fingers, maxima = 2 * whitneys;
  while (minima > 0 || maxima > 0 || uniform(g, 0, 3) == 0) {
    const int a = std::min(minima, uniform(g, 0, 2)), b = std::min(maxima, uniform(g, 0, 2));
    t.cycles.push_back(Cycle{uniform(g, 0, 1) == 1, {uniform(g, 0, 1)}, a, b});
    minima -= a;
    maxima -= b;
  }
  return t;
}

}  // namespace

TEST_CASE("rho has one finger move, one Whitney move and one crossed cycle") {
  const auto t = rho(0);
  REQUIRE(t.moves.size() == 2);
  CHECK(std::holds_alternative<FingerMove>(t.moves[0]));
  CHECK(std::holds_alternative<WhitneyMove>(t.moves[1]));
  REQUIRE(t.cycles.size() == 1);
  CHECK(t.cycles[0].crossed);
  CHECK(t.cycles[0].element == x);
  CHECK(t.cycles[0].minima == 2);
  CHECK(t.cycles[0].maxima == 2);
  CHECK(crossed_class(rho(5)) == class_of(1));
  for (int n = -6; n <= 6; ++n) CHECK(cycle_validate(rho(n)));
}

TEST_CASE("concatenation") {
  const auto two = concat(rho(0), rho(2));
  CHECK(two.cycles.size() == 2);
  CHECK(crossed_class(two) == class_of(0));
  CHECK(concat(rho(3), empty_trace(xpq_group())) == rho(3));
  for (int k = 0; k <= 8; ++k) {
    const auto t = rho_chain(0, k);
    CHECK(t.cycles.size() == static_cast<std::size_t>(k));
    CHECK(crossed_class(t) == class_of(k % 2));
  }
  CHECK_THROWS_AS(concat(rho(0), empty_trace(AbelianGroup::cyclic(4))), GroupMismatch);
}

TEST_CASE("crossed class of the empty trace is zero") {
  const auto c = crossed_class(empty_trace(xpq_group()));
  CHECK(c == class_of(0));
  CHECK(c.is_zero());
  CHECK(crossed_class(empty_trace(AbelianGroup::cyclic(3))).parity.empty());
}

TEST_CASE("crossed class keys are the order two elements") {
  const auto g = AbelianGroup::from_factors(0, {2, 2});
  const auto c = crossed_class(empty_trace(g));
  CHECK(c.parity.size() == 3);
}

TEST_CASE("uncrossed cycles do not count") {
  auto t = rho(0);
  t.cycles.push_back(Cycle{false, x, 0, 0});
  CHECK(crossed_class(t) == class_of(1));
}

TEST_CASE("cycle validation") {
  HomotopyTrace t = empty_trace(xpq_group());
  t.moves.push_back(FingerMove{x});
  CHECK_FALSE(cycle_validate(t));
  t.cycles.push_back(Cycle{false, x, 2, 0});
  CHECK(cycle_validate(t));

  HomotopyTrace three = empty_trace(AbelianGroup::cyclic(3));
  three.moves = {FingerMove{{1}}, WhitneyMove{{1}}};
  three.cycles = {Cycle{true, {1}, 2, 2}};
  CHECK_FALSE(cycle_validate(three));
  three.cycles[0].crossed = false;
  CHECK(cycle_validate(three));

  auto bad_element = rho(0);
  bad_element.cycles[0].element = {2};
  CHECK_FALSE(cycle_validate(bad_element));
}

TEST_CASE("light bulb predicate") {
  CHECK(lightbulb_check(concat(rho(0), rho(2)), true, true));
  CHECK_FALSE(lightbulb_check(rho(0), true, true));
  CHECK_FALSE(lightbulb_check(concat(rho(0), rho(2)), false, true));
  CHECK_FALSE(lightbulb_check(concat(rho(0), rho(2)), true, false));
  HomotopyTrace broken = rho(0);
  broken.cycles[0].minima = 0;
  CHECK_THROWS_AS(lightbulb_check(broken, true, true), InvalidTrace);
  for (int k = 0; k <= 8; ++k) CHECK(lightbulb_check(rho_chain(-3, k), true, true) == (k % 2 == 0));
}

TEST_CASE("crossed class is additive") {
  auto g = lbkit::testing::rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = random_trace(g), b = random_trace(g);
    REQUIRE(cycle_validate(a));
    REQUIRE(cycle_validate(b));
    const auto ab = concat(a, b);
    CHECK(cycle_validate(ab));
    CHECK(crossed_class(ab).parity.at(x) == (crossed_class(a).parity.at(x) ^ crossed_class(b).parity.at(x)));
  }
}

TEST_CASE("classify examples") {
  const auto r02 = classify(0, 2, false);
  CHECK(r02.equivalent);
  CHECK(r02.homotopic);
  CHECK_FALSE(r02.concordant);
  CHECK_FALSE(r02.isotopic);
  const auto r04 = classify(0, 4, false);
  CHECK((r04.equivalent && r04.homotopic && r04.concordant && r04.isotopic));
  const auto r01 = classify(0, 1, false);
  CHECK(r01.equivalent);
  CHECK_FALSE(r01.homotopic);
  CHECK_FALSE(r01.concordant);
  CHECK_FALSE(r01.isotopic);
  CHECK_FALSE(r02.equivalent_evidence.empty());
  CHECK_FALSE(r02.concordant_evidence.empty());
}

TEST_CASE("classify over the grid") {
  for (bool closed : {false, true}) {
    for (int i = -8; i <= 8; ++i) {
      for (int j = -8; j <= 8; ++j) {
        const auto r = classify(i, j, closed);
        const int d = ((i - j) % 4 + 4) % 4;
        CHECK(r.equivalent);
        CHECK(r.homotopic == (d % 2 == 0));
        CHECK(r.concordant == (d == 0));
        CHECK(r.isotopic == (d == 0));
        CHECK((!r.isotopic || r.concordant));
        CHECK((!r.concordant || r.homotopic));
        CHECK(r == classify(j, i, closed));
        if (r.homotopic) CHECK(r.concordant == (1 - concordance_obstruction(i, j, closed) == 1));
      }
    }
  }
}
