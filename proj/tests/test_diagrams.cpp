#include <doctest.h>

#include "lbkit/diagrams.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lbkit;
using lbkit::testing::rng;
using lbkit::testing::uniform;

namespace {

BicoloredLink hopf(int sign) {
  return BicoloredLink(BraidWord(2, {{1, sign}, {1, sign}}), {{"r", Color::red, 1}, {"b", Color::blue, 1}});
}

}  // namespace

TEST_CASE("braid words reject letters off the strands") {
  CHECK_THROWS_AS(BraidWord(2, {{2, 1}}), DiagramError);
  CHECK_THROWS_AS(BraidWord(3, {{0, 1}}), DiagramError);
  CHECK_THROWS_AS(BraidWord(3, {{1, 0}}), DiagramError);
  CHECK_NOTHROW(BraidWord(0));
}

TEST_CASE("permutation cycles agree with union-find") {
  auto g = rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const auto w = lbkit::testing::random_word(g, uniform(g, 1, 7), 12);
    CHECK(w.permutation() == oracle::permutation(w));
    auto mine = permutation_cycles(w.permutation());
    for (auto& c : mine) std::sort(c.begin(), c.end());
    std::sort(mine.begin(), mine.end());
    CHECK(mine == oracle::cycles(oracle::permutation(w)));
  }
}

TEST_CASE("closure components and windings") {
  const auto two = components_and_windings(BraidWord(2, {{1, 1}}));
  REQUIRE(two.size() == 1);
  CHECK(two[0].winding == 2);

  const auto x = components_and_windings(BraidWord(4, {{1, -1}, {3, 1}}));
  REQUIRE(x.size() == 2);
  CHECK(x[0].winding == 2);
  CHECK(x[1].winding == 2);

  const auto trivial = components_and_windings(BraidWord(3));
  CHECK(trivial.size() == 3);
  for (const auto& c : trivial) CHECK(c.winding == 1);
}

TEST_CASE("component count must match the word") {
  CHECK_THROWS_AS(BicoloredLink(BraidWord(2, {{1, 1}}), {{"a", Color::red, 1}, {"b", Color::blue, 1}}), DiagramError);
  CHECK_THROWS_AS(ColoredTangle(BraidWord(2), 2, {{"a", Color::red, 1}}), DiagramError);
}

TEST_CASE("Hopf link has linking number one") {
  CHECK(bicolored_linking(hopf(1)) == 1);
  CHECK(bicolored_linking(hopf(-1)) == -1);
  CHECK(bicolored_linking(mirror(hopf(1))) == -1);
  CHECK(bicolored_linking(exchange_colors(hopf(1))) == 1);
}

TEST_CASE("bicolored linking needs red and blue only") {
  const BicoloredLink purple(BraidWord(2, {{1, 1}, {1, 1}}), {{"r", Color::red, 1}, {"p", Color::purple, 1}});
  CHECK_THROWS_AS(bicolored_linking(purple), DiagramError);
}

TEST_CASE("reversing one component negates linking") {
  const BicoloredLink flipped(BraidWord(2, {{1, 1}, {1, 1}}), {{"r", Color::red, 1}, {"b", Color::blue, -1}});
  CHECK(bicolored_linking(flipped) == -1);
}

TEST_CASE("same-color crossings do not count") {
  const BicoloredLink reds(BraidWord(2, {{1, 1}, {1, 1}}), {{"r", Color::red, 1}, {"s", Color::red, 1}});
  CHECK(bicolored_linking(reds) == 0);
  CHECK(bicolored_linking(BicoloredLink{}) == 0);
}

TEST_CASE("half twist tangles") {
  for (int n = -5; n <= 5; ++n) {
    const auto t = half_twist_tangle(n);
    CHECK(t.crossing_count() == std::abs(n));
    CHECK(t.open_count() == 2);
    CHECK(t.top_slot(0).color == Color::red);
    CHECK(t.top_slot(1).color == Color::blue);
    CHECK(t.arc_end(0) == (n % 2 == 0 ? 0 : 1));
  }
  const auto u = half_twist_tangle_uncolored(3);
  CHECK(u.component(0).color == Color::uncolored);
}

TEST_CASE("closing an even twist tangle") {
  for (int n : {-6, -4, -2, 0, 2, 4, 6}) {
    const auto link = close_tangle(half_twist_tangle(n));
    CHECK(link.component_count() == 2);
    CHECK(bicolored_linking(link) == n / 2);
    CHECK(oracle::linking(link) == n / 2);
  }
}

TEST_CASE("closing an odd twist tangle mixes colors") {
  CHECK_THROWS_AS(close_tangle(half_twist_tangle(1)), ColorMismatch);
  CHECK_THROWS_AS(close_tangle(half_twist_tangle(-3)), ColorMismatch);
}

TEST_CASE("reverse mirror flips orientation and signs") {
  const auto t = half_twist_tangle(2);
  const auto r = reverse_mirror(t);
  CHECK(r.word() == t.word().mirror());
  CHECK(r.component(0).orientation == -t.component(0).orientation);
  CHECK(reverse_mirror(r) == t);
}

TEST_CASE("exchange colors is an involution") {
  const auto t = half_twist_tangle(3);
  CHECK(exchange_colors(t).top_slot(0).color == Color::blue);
  CHECK(exchange_colors(exchange_colors(t)) == t);
}

TEST_CASE("annular links: framing labels and normalization") {
  const AnnularLink link(BraidWord(4, {{1, -1}, {3, 1}}),
                         {{"a", Color::purple, 3, 1}, {"b", Color::purple, -2, 1}});
  CHECK(link.winding(0) == 2);
  CHECK(link.self_writhe(0) == -1);
  CHECK(link.self_writhe(1) == 1);
  CHECK_FALSE(link.is_normalized());
  const auto n = normalize_to_writhe(link);
  CHECK(n.is_normalized());
  CHECK(n.kinks(0) == 4);
  CHECK(n.kinks(1) == -3);
  CHECK(n.linking(0, 1) == 0);
  CHECK(n.index_of("b") == 1);
  CHECK_THROWS_AS(n.index_of("c"), DiagramError);
}

TEST_CASE("R2 and its inverse cancel") {
  const auto h = hopf(1);
  const auto up = reidemeister(h, Move::R2, {1, 1, -1});
  CHECK(up.crossing_count() == 4);
  CHECK(bicolored_linking(up) == 1);
  CHECK(reidemeister(up, Move::R2_inverse, {1, 1, 1}) == h);
}

TEST_CASE("R3 rewrites a triangle") {
  const BicoloredLink l(BraidWord(3, {{1, 1}, {2, 1}, {1, 1}}), {{"a", Color::red, 1}, {"b", Color::blue, 1}});
  const auto m = reidemeister(l, Move::R3, {0, 1, 1});
  CHECK(m.word() == BraidWord(3, {{2, 1}, {1, 1}, {2, 1}}));
  CHECK(bicolored_linking(m) == bicolored_linking(l));
}

TEST_CASE("R1 adds a curl without changing linking") {
  const auto h = hopf(1);
  const auto c = reidemeister(h, Move::R1, {0, 1, -1});
  CHECK(c.strands() == 3);
  CHECK(c.component_count() == 2);
  CHECK(bicolored_linking(c) == 1);
}

TEST_CASE("moves at bad sites are rejected") {
  const auto h = hopf(1);
  CHECK_THROWS_AS(reidemeister(h, Move::R2_inverse, {0, 1, 1}), BadSite);
  CHECK_THROWS_AS(reidemeister(h, Move::R3, {0, 1, 1}), BadSite);
  CHECK_THROWS_AS(reidemeister(h, Move::R2, {9, 1, 1}), BadSite);
  CHECK_THROWS_AS(reidemeister(h, Move::R2, {0, 2, 1}), BadSite);
  const AnnularLink a(BraidWord(2, {{1, 1}}), {{"a", Color::purple, 0, 1}});
  CHECK_THROWS_AS(reidemeister(a, Move::R1, {0, 1, 1}), BadSite);
}

TEST_CASE("move sites") {
  const BraidWord w(3, {{1, 1}, {1, -1}, {2, 1}, {1, 1}, {2, 1}});
  CHECK(move_sites(w, Move::R2_inverse) == std::vector<std::size_t>{0});
  CHECK(move_sites(w, Move::R3) == std::vector<std::size_t>{2});
}

TEST_CASE("random links: linking matches the strand walk oracle") {
  auto g = rng(2);
  for (int trial = 0; trial < 500; ++trial) {
    const auto l = lbkit::testing::random_link(g);
    CHECK(bicolored_linking(l) == oracle::linking(l));
    CHECK(bicolored_linking(mirror(l)) == -bicolored_linking(l));
    CHECK(bicolored_linking(exchange_colors(l)) == bicolored_linking(l));
  }
}

TEST_CASE("random Reidemeister sequences preserve linking") {
  auto g = rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    auto l = lbkit::testing::random_link(g, 4, 6);
    if (l.strands() < 2) continue;
    const int lk = bicolored_linking(l);
    for (int step = 0; step < 12; ++step) {
      const int kind = uniform(g, 0, 3);
      const auto n = l.word().size();
      if (kind == 0 && l.strands() < 7) {
        l = reidemeister(l, Move::R1, {static_cast<std::size_t>(uniform(g, 0, static_cast<int>(n))), 1,
                                       lbkit::testing::random_sign(g)});
      } else if (kind == 1) {
        l = reidemeister(l, Move::R2, {static_cast<std::size_t>(uniform(g, 0, static_cast<int>(n))),
                                       uniform(g, 1, l.strands() - 1), lbkit::testing::random_sign(g)});
      } else {
        const auto sites = move_sites(l.word(), kind == 2 ? Move::R2_inverse : Move::R3);
        if (sites.empty()) continue;
        const auto at = sites[static_cast<std::size_t>(uniform(g, 0, static_cast<int>(sites.size()) - 1))];
        l = reidemeister(l, kind == 2 ? Move::R2_inverse : Move::R3, {at, 1, 1});
      }
      REQUIRE(bicolored_linking(l) == lk);
      REQUIRE(oracle::linking(l) == lk);
    }
  }
}
