#include "lbkit/diagrams.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace lbkit {

std::string_view to_string(Color c) {
  switch (c) {
    case Color::red: return "red";
    case Color::blue: return "blue";
    case Color::purple: return "purple";
    case Color::uncolored: return "uncolored";
  }
  return "uncolored";
}

Color color_from_string(std::string_view name) {
  if (name == "red") return Color::red;
  if (name == "blue") return Color::blue;
  if (name == "purple") return Color::purple;
  if (name == "uncolored") return Color::uncolored;
  throw DiagramError("unknown color '" + std::string(name) + "'");
}

Color exchange(Color c) {
  if (c == Color::red) return Color::blue;
  if (c == Color::blue) return Color::red;
  return c;
}

// ---------------------------------------------------------------------------
// BraidWord

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 0) throw DiagramError("negative strand count");
  for (const auto& l : letters_) {
    if (l.position < 1 || l.position > strands_ - 1)
      throw DiagramError("letter position " + std::to_string(l.position) +
                         " out of range for " + std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw DiagramError("letter sign must be +1 or -1");
  }
}

std::vector<int> BraidWord::permutation() const {
  // at[pos] = top position of the strand currently at pos
  std::vector<int> at(static_cast<std::size_t>(strands_));
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : letters_) std::swap(at[l.position - 1], at[l.position]);
  std::vector<int> perm(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) perm[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return perm;
}

BraidWord BraidWord::power(int m) const {
  if (m < 0) throw DiagramError("negative braid power");
  std::vector<Letter> out;
  out.reserve(letters_.size() * static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::concat(const BraidWord& other) const {
  if (other.strands_ != strands_) throw DiagramError("concatenating words on different strand counts");
  auto out = letters_;
  out.insert(out.end(), other.letters_.begin(), other.letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::mirror() const {
  auto out = letters_;
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::reversed() const {
  return BraidWord(strands_, std::vector<Letter>(letters_.rbegin(), letters_.rend()));
}

std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start]) continue;
    std::vector<int> cycle;
    for (int p = static_cast<int>(start); !seen[static_cast<std::size_t>(p)]; p = perm[static_cast<std::size_t>(p)]) {
      seen[static_cast<std::size_t>(p)] = true;
      cycle.push_back(p);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<WindingComponent> components_and_windings(const BraidWord& word) {
  std::vector<WindingComponent> out;
  for (auto& cycle : permutation_cycles(word.permutation())) {
    const int w = static_cast<int>(cycle.size());
    out.push_back({std::move(cycle), w});
  }
  return out;
}

// ---------------------------------------------------------------------------
// StrandDiagram

namespace {

struct Layout {
  std::vector<std::size_t> owner;
  std::size_t components = 0;
};

Layout layout_of(const std::vector<int>& perm, int open) {
  constexpr auto unset = static_cast<std::size_t>(-1);
  const auto n = perm.size();
  if (open < 0 || static_cast<std::size_t>(open) > n) throw DiagramError("open slot count out of range");
  Layout out;
  out.owner.assign(n, unset);
  for (int k = 0; k < open; ++k) {
    int pos = k;
    out.owner[static_cast<std::size_t>(pos)] = static_cast<std::size_t>(k);
    for (int next = perm[static_cast<std::size_t>(pos)]; next >= open; next = perm[static_cast<std::size_t>(pos)]) {
      pos = next;
      out.owner[static_cast<std::size_t>(pos)] = static_cast<std::size_t>(k);
    }
  }
  out.components = static_cast<std::size_t>(open);
  for (std::size_t start = 0; start < n; ++start) {
    if (out.owner[start] != unset) continue;
    for (auto p = start; out.owner[p] == unset; p = static_cast<std::size_t>(perm[p])) out.owner[p] = out.components;
    ++out.components;
  }
  return out;
}

}  // namespace

std::size_t StrandDiagram::count_components(const BraidWord& word, int open) {
  return layout_of(word.permutation(), open).components;
}

StrandDiagram::StrandDiagram(BraidWord word, int open, std::vector<ComponentInfo> components)
    : word_(std::move(word)), open_(open), components_(std::move(components)), perm_(word_.permutation()) {
  auto layout = layout_of(perm_, open_);
  if (layout.components != components_.size())
    throw DiagramError("diagram has " + std::to_string(layout.components) + " components but " +
                       std::to_string(components_.size()) + " were described");
  for (const auto& c : components_)
    if (c.orientation != 1 && c.orientation != -1) throw DiagramError("orientation must be +1 or -1");
  owner_ = std::move(layout.owner);
}

std::size_t StrandDiagram::owner_of_bottom(int p) const {
  const auto it = std::find(perm_.begin(), perm_.end(), p);
  if (it == perm_.end()) throw DiagramError("bottom position out of range");
  return owner_[static_cast<std::size_t>(it - perm_.begin())];
}

std::vector<int> StrandDiagram::positions_of(std::size_t c) const {
  std::vector<int> out;
  if (is_arc(c)) {
    int pos = static_cast<int>(c);
    out.push_back(pos);
    for (int next = perm_[static_cast<std::size_t>(pos)]; next >= open_; next = perm_[static_cast<std::size_t>(pos)]) {
      pos = next;
      out.push_back(pos);
    }
    return out;
  }
  const auto first = std::find(owner_.begin(), owner_.end(), c);
  if (first == owner_.end()) throw DiagramError("component index out of range");
  const int start = static_cast<int>(first - owner_.begin());
  int p = start;
  do {
    out.push_back(p);
    p = perm_[static_cast<std::size_t>(p)];
  } while (p != start);
  return out;
}

int StrandDiagram::arc_end(std::size_t c) const {
  if (!is_arc(c)) throw DiagramError("component is not an arc");
  return perm_[static_cast<std::size_t>(positions_of(c).back())];
}

std::vector<SignedCrossing> StrandDiagram::crossings() const {
  std::vector<int> at(static_cast<std::size_t>(strands()));
  std::iota(at.begin(), at.end(), 0);
  std::vector<SignedCrossing> out;
  out.reserve(word_.size());
  const auto& letters = word_.letters();
  for (std::size_t i = 0; i < letters.size(); ++i) {
    const auto& l = letters[i];
    auto& left = at[static_cast<std::size_t>(l.position - 1)];
    auto& right = at[static_cast<std::size_t>(l.position)];
    const auto a = owner_[static_cast<std::size_t>(left)];
    const auto b = owner_[static_cast<std::size_t>(right)];
    out.push_back({i, l.position, a, b, l.sign * components_[a].orientation * components_[b].orientation});
    std::swap(left, right);
  }
  return out;
}

int StrandDiagram::self_writhe(std::size_t c) const {
  int total = 0;
  for (const auto& x : crossings())
    if (x.first == c && x.second == c) total += x.sign;
  return total;
}

int StrandDiagram::mixed_crossing_sum(std::size_t a, std::size_t b) const {
  int total = 0;
  for (const auto& x : crossings())
    if ((x.first == a && x.second == b) || (x.first == b && x.second == a)) total += x.sign;
  return a == b ? 0 : total;
}

// ---------------------------------------------------------------------------
// ColoredTangle / BicoloredLink

ColoredTangle::ColoredTangle(BraidWord word, int open, std::vector<ComponentInfo> components)
    : StrandDiagram(std::move(word), open, std::move(components)) {}

EndpointSlot ColoredTangle::top_slot(int k) const {
  if (k < 0 || k >= open_) throw DiagramError("slot out of range");
  const auto& c = components_[static_cast<std::size_t>(k)];
  return {k, true, c.color, c.orientation};
}

EndpointSlot ColoredTangle::bottom_slot(int k) const {
  if (k < 0 || k >= open_) throw DiagramError("slot out of range");
  const auto& c = components_[owner_of_bottom(k)];
  return {k, false, c.color, c.orientation};
}

std::vector<EndpointSlot> ColoredTangle::endpoints() const {
  std::vector<EndpointSlot> out;
  for (int k = 0; k < open_; ++k) out.push_back(top_slot(k));
  for (int k = 0; k < open_; ++k) out.push_back(bottom_slot(k));
  return out;
}

BicoloredLink::BicoloredLink(BraidWord word, std::vector<ComponentInfo> components)
    : StrandDiagram(std::move(word), 0, std::move(components)) {}

int bicolored_linking(const BicoloredLink& link) {
  for (const auto& c : link.components())
    if (c.color != Color::red && c.color != Color::blue)
      throw DiagramError("component '" + c.id + "' is not colored red or blue");
  int total = 0;
  for (const auto& x : link.crossings()) {
    if (link.component(x.first).color != link.component(x.second).color) total += x.sign;
  }
  // Each red-blue pair of loops crosses an even number of times.
  return total / 2;
}

BicoloredLink close_tangle(const ColoredTangle& t) {
  for (int k = 0; k < t.open_count(); ++k) {
    const auto top = t.top_slot(k);
    const auto bottom = t.bottom_slot(k);
    if (top.color != bottom.color)
      throw ColorMismatch("slot " + std::to_string(k) + ": top is " + std::string(to_string(top.color)) +
                          ", bottom is " + std::string(to_string(bottom.color)));
    if (top.orientation != bottom.orientation)
      throw DiagramError("slot " + std::to_string(k) + ": closing strand would reverse orientation");
  }
  const auto cycles = permutation_cycles(t.word().permutation());
  std::vector<ComponentInfo> infos;
  infos.reserve(cycles.size());
  for (const auto& cycle : cycles) {
    std::size_t first = t.owner_of_top(cycle.front());
    for (int p : cycle) first = std::min(first, t.owner_of_top(p));
    infos.push_back(t.component(first));
  }
  return BicoloredLink(t.word(), std::move(infos));
}

ColoredTangle reverse_mirror(const ColoredTangle& t) {
  std::vector<ComponentInfo> infos(t.components().begin(), t.components().end());
  for (auto& c : infos) c.orientation = -c.orientation;
  return ColoredTangle(t.word().mirror(), t.open_count(), std::move(infos));
}

ColoredTangle exchange_colors(const ColoredTangle& t) {
  std::vector<ComponentInfo> infos(t.components().begin(), t.components().end());
  for (auto& c : infos) c.color = exchange(c.color);
  return ColoredTangle(t.word(), t.open_count(), std::move(infos));
}

BicoloredLink exchange_colors(const BicoloredLink& link) {
  std::vector<ComponentInfo> infos(link.components().begin(), link.components().end());
  for (auto& c : infos) c.color = exchange(c.color);
  return BicoloredLink(link.word(), std::move(infos));
}

BicoloredLink mirror(const BicoloredLink& link) {
  return BicoloredLink(link.word().mirror(), {link.components().begin(), link.components().end()});
}

namespace {

BraidWord twist_word(int n) {
  std::vector<Letter> letters(static_cast<std::size_t>(n < 0 ? -n : n), Letter{1, n < 0 ? -1 : 1});
  return BraidWord(2, std::move(letters));
}

}  // namespace

ColoredTangle half_twist_tangle(int n) {
  return ColoredTangle(twist_word(n), 2, {{"r", Color::red, 1}, {"b", Color::blue, 1}});
}

ColoredTangle half_twist_tangle_uncolored(int n) {
  return ColoredTangle(twist_word(n), 2, {{"s0", Color::uncolored, 1}, {"s1", Color::uncolored, 1}});
}

// ---------------------------------------------------------------------------
// AnnularLink

namespace {

std::vector<ComponentInfo> infos_of(const std::vector<AnnularComponent>& comps) {
  std::vector<ComponentInfo> out;
  out.reserve(comps.size());
  for (const auto& c : comps) out.push_back({c.id, c.color, c.orientation});
  return out;
}

}  // namespace

AnnularLink::AnnularLink(BraidWord word, std::vector<AnnularComponent> components)
    : StrandDiagram(std::move(word), 0, infos_of(components)), kinks_(components.size(), 0) {
  framings_.reserve(components.size());
  for (const auto& c : components) framings_.push_back(c.framing);
}

bool AnnularLink::is_normalized() const {
  for (std::size_t c = 0; c < component_count(); ++c)
    if (blackboard_framing(c) != framing(c)) return false;
  return true;
}

int AnnularLink::linking(std::size_t a, std::size_t b) const { return mixed_crossing_sum(a, b) / 2; }

std::size_t AnnularLink::index_of(std::string_view id) const {
  for (std::size_t c = 0; c < component_count(); ++c)
    if (component(c).id == id) return c;
  throw DiagramError("no component '" + std::string(id) + "'");
}

std::vector<AnnularComponent> AnnularLink::annular_components() const {
  std::vector<AnnularComponent> out;
  for (std::size_t c = 0; c < component_count(); ++c) {
    const auto& info = component(c);
    out.push_back({info.id, info.color, framing(c), info.orientation});
  }
  return out;
}

AnnularLink normalize_to_writhe(const AnnularLink& link) {
  AnnularLink out = link;
  for (std::size_t c = 0; c < out.component_count(); ++c) out.kinks_[c] = out.framing(c) - out.self_writhe(c);
  return out;
}

AnnularLink with_kinks(const AnnularLink& link, std::vector<int> kinks) {
  if (kinks.size() != link.component_count()) throw DiagramError("one kink count per component expected");
  AnnularLink out = link;
  out.kinks_ = std::move(kinks);
  return out;
}

// ---------------------------------------------------------------------------
// Reidemeister moves

namespace {

std::vector<Letter> apply_word_move(const BraidWord& word, Move move, const MoveSite& site) {
  auto letters = word.letters();
  const auto n = letters.size();
  switch (move) {
    case Move::R1:
      if (word.strands() < 1) throw BadSite("R1 needs at least one strand");
      if (site.index > n) throw BadSite("R1 index past the end of the word");
      if (site.sign != 1 && site.sign != -1) throw BadSite("R1 sign must be +1 or -1");
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(site.index), Letter{word.strands(), site.sign});
      return letters;
    case Move::R2:
      if (site.index > n) throw BadSite("R2 index past the end of the word");
      if (site.position < 1 || site.position > word.strands() - 1) throw BadSite("R2 position out of range");
      if (site.sign != 1 && site.sign != -1) throw BadSite("R2 sign must be +1 or -1");
      letters.insert(letters.begin() + static_cast<std::ptrdiff_t>(site.index),
                     {Letter{site.position, site.sign}, Letter{site.position, -site.sign}});
      return letters;
    case Move::R2_inverse: {
      if (site.index + 1 >= n) throw BadSite("R2 removal needs two letters");
      const auto& a = letters[site.index];
      const auto& b = letters[site.index + 1];
      if (a.position != b.position || a.sign != -b.sign) throw BadSite("letters do not cancel");
      letters.erase(letters.begin() + static_cast<std::ptrdiff_t>(site.index),
                    letters.begin() + static_cast<std::ptrdiff_t>(site.index) + 2);
      return letters;
    }
    case Move::R3: {
      if (site.index + 2 >= n) throw BadSite("R3 needs three letters");
      auto& a = letters[site.index];
      auto& b = letters[site.index + 1];
      auto& c = letters[site.index + 2];
      if (a.sign != b.sign || b.sign != c.sign || a.position != c.position ||
          (b.position != a.position + 1 && b.position != a.position - 1))
        throw BadSite("no R3 triangle at this index");
      std::swap(a.position, b.position);
      c.position = a.position;
      return letters;
    }
  }
  throw BadSite("unknown move");
}

}  // namespace

ColoredTangle reidemeister(const ColoredTangle& d, Move move, const MoveSite& site) {
  const int strands = d.strands() + (move == Move::R1 ? 1 : 0);
  BraidWord word(strands, apply_word_move(d.word(), move, site));
  return ColoredTangle(std::move(word), d.open_count(), {d.components().begin(), d.components().end()});
}

BicoloredLink reidemeister(const BicoloredLink& d, Move move, const MoveSite& site) {
  const int strands = d.strands() + (move == Move::R1 ? 1 : 0);
  BraidWord word(strands, apply_word_move(d.word(), move, site));
  return BicoloredLink(std::move(word), {d.components().begin(), d.components().end()});
}

AnnularLink reidemeister(const AnnularLink& d, Move move, const MoveSite& site) {
  if (move == Move::R1) throw BadSite("R1 would change the winding number of an annular braid");
  BraidWord word(d.strands(), apply_word_move(d.word(), move, site));
  std::vector<int> kinks;
  for (std::size_t c = 0; c < d.component_count(); ++c) kinks.push_back(d.kinks(c));
  return with_kinks(AnnularLink(std::move(word), d.annular_components()), std::move(kinks));
}

std::vector<std::size_t> move_sites(const BraidWord& word, Move move) {
  std::vector<std::size_t> out;
  const auto& l = word.letters();
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (move == Move::R2_inverse && i + 1 < l.size() && l[i].position == l[i + 1].position &&
        l[i].sign == -l[i + 1].sign)
      out.push_back(i);
    if (move == Move::R3 && i + 2 < l.size() && l[i].sign == l[i + 1].sign && l[i + 1].sign == l[i + 2].sign &&
        l[i].position == l[i + 2].position &&
        (l[i + 1].position == l[i].position + 1 || l[i + 1].position == l[i].position - 1))
      out.push_back(i);
  }
  return out;
}

}  // namespace lbkit
