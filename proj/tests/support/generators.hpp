#pragma once

#include <random>
#include <vector>

#include "lbkit/diagrams.hpp"
#include "oracles.hpp"
#include "seed.hpp"

namespace lbkit::testing {

inline BraidWord random_word(std::mt19937_64& g, int strands, int max_letters) {
  std::vector<Letter> letters;
  if (strands >= 2) {
    const int n = uniform(g, 0, max_letters);
    for (int i = 0; i < n; ++i) letters.push_back({uniform(g, 1, strands - 1), uniform(g, 0, 1) ? 1 : -1});
  }
  return BraidWord(strands, std::move(letters));
}

inline Color random_color(std::mt19937_64& g) { return uniform(g, 0, 1) ? Color::red : Color::blue; }
inline int random_sign(std::mt19937_64& g) { return uniform(g, 0, 1) ? 1 : -1; }

// A closed braid with every component red or blue.
inline BicoloredLink random_link(std::mt19937_64& g, int max_strands = 5, int max_letters = 10) {
  const BraidWord w = random_word(g, uniform(g, 1, max_strands), max_letters);
  std::vector<ComponentInfo> comps;
  for (std::size_t c = 0; c < oracle::cycles(oracle::permutation(w)).size(); ++c)
    comps.push_back({"c" + std::to_string(c), random_color(g), random_sign(g)});
  return BicoloredLink(w, std::move(comps));
}

// A side tangle: one through-arc of the given color and orientation plus a
// few red and blue loops closed to the right.
inline ColoredTangle random_side(std::mt19937_64& g, Color color, int orientation, int max_strands = 4,
                                 int max_letters = 8) {
  const BraidWord w = random_word(g, uniform(g, 1, max_strands), max_letters);
  std::vector<ComponentInfo> comps{{"arc", color, orientation}};
  const auto count = ColoredTangle::expected_components(w, 1);
  for (std::size_t c = 1; c < count; ++c) comps.push_back({"loop" + std::to_string(c), random_color(g), random_sign(g)});
  return ColoredTangle(w, 1, std::move(comps));
}

}  // namespace lbkit::testing
