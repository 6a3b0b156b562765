#include "lbkit/obstruction.hpp"

#include <array>
#include <numeric>
#include <optional>

#include "lbkit/kirby.hpp"

namespace lbkit {

namespace {

void expect_color(const EndpointSlot& a, const EndpointSlot& b, const char* what) {
  if (a.color != b.color) throw ColorMismatch(std::string(what) + ": " + std::string(to_string(a.color)) + " meets " +
                                              std::string(to_string(b.color)));
}

int slot_of_color(const ColoredTangle& t, Color color, bool top) {
  for (int k = 0; k < t.open_count(); ++k) {
    const auto slot = top ? t.top_slot(k) : t.bottom_slot(k);
    if (slot.color == color) return k;
  }
  throw ColorMismatch(std::string("no ") + std::string(to_string(color)) + " slot");
}

bool is_empty(const ColoredTangle& t) { return t.strands() == 0; }

}  // namespace

void validate(const ConcordanceSlice& s) {
  if (s.inner.open_count() != 2 || s.outer.open_count() != 2)
    throw ColorMismatch("inner and outer tangles must have two boundary slots");
  const std::array<std::pair<const ColoredTangle*, Color>, 4> sides{{{&s.plus_red, Color::red},
                                                                     {&s.plus_blue, Color::blue},
                                                                     {&s.minus_red, Color::red},
                                                                     {&s.minus_blue, Color::blue}}};
  for (const auto& [side, color] : sides) {
    if (side->open_count() != 1) throw DiagramError("a side tangle has exactly one through-arc");
    if (side->component(0).color != color)
      throw ColorMismatch("side through-arc should be " + std::string(to_string(color)));
  }
  for (int k = 0; k < 2; ++k) {
    expect_color(s.inner.top_slot(k), s.outer.top_slot(k), "top boundary");
    expect_color(s.inner.bottom_slot(k), s.outer.bottom_slot(k), "bottom boundary");
  }
  for (bool top : {true, false}) {
    slot_of_color(s.inner, Color::red, top);
    slot_of_color(s.inner, Color::blue, top);
  }
}

ColoredTangle trivial_side(Color color, int orientation) {
  return ColoredTangle(BraidWord(1), 1, {{std::string(to_string(color)) + "-arc", color, orientation}});
}

ConcordanceSlice model_slice(int i, int j) {
  const auto ambient = build_xpq(0, 0);
  ColoredTangle inner = lift_sphere_tangles(sigma(ambient, i)).first.tangle;
  ColoredTangle outer = reverse_mirror(lift_sphere_tangles(sigma(ambient, j)).first.tangle);
  const int down = inner.component(0).orientation;
  return {inner,
          outer,
          trivial_side(Color::red, -down),
          trivial_side(Color::blue, -down),
          trivial_side(Color::red, down),
          trivial_side(Color::blue, down)};
}

namespace {

struct Block {
  const ColoredTangle* tangle;
  bool rotated;                 // placed upside down
  std::vector<int> main_slots;  // main position of each open slot
};

struct Expectation {
  Color color;
  int orientation;
  std::string id;
};

}  // namespace

BicoloredLink assemble_link(const ConcordanceSlice& s) {
  if (is_empty(s.inner) && is_empty(s.outer) && is_empty(s.plus_red) && is_empty(s.plus_blue) &&
      is_empty(s.minus_red) && is_empty(s.minus_blue))
    return {};
  validate(s);

  // Top to bottom: inner, the minus sides, the outer tangle upside down, the
  // plus sides upside down. The closure returns to the top of the inner
  // tangle.
  const int bottom_red = slot_of_color(s.inner, Color::red, false);
  const int bottom_blue = slot_of_color(s.inner, Color::blue, false);
  const int top_red = slot_of_color(s.inner, Color::red, true);
  const int top_blue = slot_of_color(s.inner, Color::blue, true);
  const std::vector<Block> blocks{
      {&s.inner, false, {0, 1}},           {&s.minus_red, false, {bottom_red}},
      {&s.minus_blue, false, {bottom_blue}}, {&s.outer, true, {0, 1}},
      {&s.plus_red, true, {top_red}},       {&s.plus_blue, true, {top_blue}},
  };

  constexpr int main_count = 2;
  std::vector<int> private_start;
  int strands = main_count;
  for (const auto& b : blocks) {
    private_start.push_back(strands);
    strands += b.tangle->strands() - b.tangle->open_count();
  }

  std::vector<Letter> letters;
  std::vector<std::size_t> block_begin;
  auto move_right = [&](int from, int to, std::vector<Letter>& out) {
    for (int p = from + 1; p <= to; ++p) out.push_back({p, 1});
  };
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& b = blocks[bi];
    const int open = b.tangle->open_count();
    const int offset = private_start[bi] - open;
    // Carry the main strands next to the private range, highest target
    // first, so that block position q sits at q + offset.
    std::vector<Letter> transport;
    std::vector<int> current(b.main_slots);
    for (int q = open - 1; q >= 0; --q) {
      const int from = current[static_cast<std::size_t>(q)];
      const int to = q + offset;
      move_right(from, to, transport);
      for (auto& c : current)
        if (c > from && c <= to) --c;
      current[static_cast<std::size_t>(q)] = to;
    }
    letters.insert(letters.end(), transport.begin(), transport.end());
    block_begin.push_back(letters.size());
    const BraidWord w = b.rotated ? b.tangle->word().reversed() : b.tangle->word();
    for (auto l : w.letters()) letters.push_back({l.position + offset, l.sign});
    for (auto it = transport.rbegin(); it != transport.rend(); ++it) letters.push_back({it->position, -it->sign});
  }
  const BraidWord word(strands, letters);

  // Components of the closed braid and what each block expects of them.
  const auto perm = word.permutation();
  const auto cycles = permutation_cycles(perm);
  std::vector<std::size_t> component_of_label(static_cast<std::size_t>(strands));
  for (std::size_t c = 0; c < cycles.size(); ++c)
    for (int p : cycles[c]) component_of_label[static_cast<std::size_t>(p)] = c;

  std::vector<std::optional<Expectation>> expected(cycles.size());
  std::vector<int> at(static_cast<std::size_t>(strands));
  std::iota(at.begin(), at.end(), 0);
  std::size_t next_block = 0;
  for (std::size_t li = 0; li <= letters.size(); ++li) {
    while (next_block < blocks.size() && block_begin[next_block] == li) {
      const auto& b = blocks[next_block];
      const int open = b.tangle->open_count();
      const int offset = private_start[next_block] - open;
      for (int q = 0; q < b.tangle->strands(); ++q) {
        const auto owner = b.rotated ? b.tangle->owner_of_bottom(q) : b.tangle->owner_of_top(q);
        const auto& info = b.tangle->component(owner);
        Expectation e{info.color, b.rotated ? -info.orientation : info.orientation, info.id};
        const auto c = component_of_label[static_cast<std::size_t>(at[static_cast<std::size_t>(q + offset)])];
        auto& slot = expected[c];
        if (!slot) {
          slot = e;
        } else {
          if (slot->color != e.color)
            throw ColorMismatch("component '" + slot->id + "' meets '" + e.id + "' of another color");
          if (slot->orientation != e.orientation)
            throw DiagramError("component '" + slot->id + "' meets '" + e.id + "' with opposite orientation");
        }
      }
      ++next_block;
    }
    if (li == letters.size()) break;
    const auto& l = letters[li];
    std::swap(at[static_cast<std::size_t>(l.position - 1)], at[static_cast<std::size_t>(l.position)]);
  }

  std::vector<ComponentInfo> infos;
  for (std::size_t c = 0; c < cycles.size(); ++c) {
    if (!expected[c]) throw DiagramError("assembled component not covered by any block");
    infos.push_back({expected[c]->id, expected[c]->color, expected[c]->orientation});
  }
  return BicoloredLink(word, std::move(infos));
}

BicoloredLink closure_of_side(const ColoredTangle& side) {
  if (side.open_count() != 1) throw DiagramError("a side tangle has exactly one through-arc");
  return close_tangle(side);
}

int side_linking(const ColoredTangle& side) { return bicolored_linking(closure_of_side(side)); }

int core_linking(const ConcordanceSlice& s) {
  auto bare = [](const ColoredTangle& side) {
    const auto& arc = side.component(0);
    return trivial_side(arc.color, arc.orientation);
  };
  ConcordanceSlice core{s.inner, s.outer, bare(s.plus_red), bare(s.plus_blue), bare(s.minus_red), bare(s.minus_blue)};
  return bicolored_linking(assemble_link(core));
}

int eq1_from_values(int plus_red, int plus_blue, int minus_red, int minus_blue, int core) {
  return plus_red + plus_blue + minus_red + minus_blue + core;
}

int eq1_evaluate(const ConcordanceSlice& s) {
  validate(s);
  return eq1_from_values(side_linking(s.plus_red), side_linking(s.plus_blue), side_linking(s.minus_red),
                         side_linking(s.minus_blue), core_linking(s));
}

bool claim1_check(const ConcordanceSlice& s) {
  return side_linking(s.plus_red) == side_linking(s.plus_blue) &&
         side_linking(s.minus_red) == side_linking(s.minus_blue);
}

namespace {

// Equal up to component ids.
bool same_shape(const ColoredTangle& a, const ColoredTangle& b) {
  if (!(a.word() == b.word()) || a.open_count() != b.open_count() || a.component_count() != b.component_count())
    return false;
  for (std::size_t c = 0; c < a.component_count(); ++c)
    if (a.component(c).color != b.component(c).color || a.component(c).orientation != b.component(c).orientation)
      return false;
  return true;
}

}  // namespace

bool tau_symmetric(const ConcordanceSlice& s) {
  return same_shape(exchange_colors(s.plus_red), s.plus_blue) && same_shape(exchange_colors(s.minus_red), s.minus_blue);
}

int eq2_evaluate(const ClosedCaseData& d) {
  const auto& s = d.slice;
  validate(s);
  const int lambda_plus = side_linking(s.plus_red) + side_linking(s.plus_blue);
  const int lambda_minus = side_linking(s.minus_red) + side_linking(s.minus_blue);
  const int w = d.w_r_plus + d.w_r_minus + d.w_b_plus + d.w_b_minus;
  return lambda_plus + lambda_minus + w + bicolored_linking(d.c_plus) + bicolored_linking(d.c_minus) +
         core_linking(s);
}

bool claim2_check(const ClosedCaseData& d) {
  return bicolored_linking(d.c_plus) == bicolored_linking(d.c_minus) && d.w_r_plus == d.w_r_minus &&
         d.w_b_plus == d.w_b_minus;
}

ObstructionReport obstruction_report(int i, int j, bool closed) {
  if ((i - j) % 2 != 0)
    throw NotHomotopic("Sigma_" + std::to_string(i) + " and Sigma_" + std::to_string(j) + " are not homotopic");
  const auto slice = model_slice(i, j);
  ObstructionReport r;
  r.lk_link = bicolored_linking(assemble_link(slice));
  r.claim1 = claim1_check(slice);
  if (closed) {
    const ClosedCaseData data{slice, BicoloredLink{}, BicoloredLink{}, 0, 0, 0, 0};
    r.equation_value = eq2_evaluate(data);
    r.claim2 = claim2_check(data);
  } else {
    r.equation_value = eq1_evaluate(slice);
  }
  r.parity = ((r.equation_value % 2) + 2) % 2;
  return r;
}

int concordance_obstruction(int i, int j, bool closed) { return obstruction_report(i, j, closed).parity; }

}  // namespace lbkit
