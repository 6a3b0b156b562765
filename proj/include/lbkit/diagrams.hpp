#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lbkit {

class DiagramError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundary data of two pieces that are being glued does not agree.
class ColorMismatch : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

/// A local move was requested where its pattern does not occur.
class BadSite : public DiagramError {
 public:
  using DiagramError::DiagramError;
};

enum class Color { red, blue, purple, uncolored };

std::string_view to_string(Color c);
Color color_from_string(std::string_view name);
/// red <-> blue; purple and uncolored are fixed.
Color exchange(Color c);

/// sigma_position^sign; positions are 1-based as in braid notation.
struct Letter {
  int position = 1;
  int sign = 1;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<Letter> letters = {});

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }

  /// perm[p] is the bottom position (0-based) reached from top position p.
  /// Signs play no role.
  std::vector<int> permutation() const;

  BraidWord power(int m) const;
  BraidWord concat(const BraidWord& other) const;
  /// Every letter sign flipped.
  BraidWord mirror() const;
  /// Read bottom to top: letters in reverse order, signs kept. This is the
  /// word of the diagram turned upside down by a rotation in space.
  BraidWord reversed() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 0;
  std::vector<Letter> letters_;
};

/// Disjoint cycles of a permutation, each listed from its smallest element,
/// ordered by that element.
std::vector<std::vector<int>> permutation_cycles(const std::vector<int>& perm);

struct WindingComponent {
  std::vector<int> strands;  // 0-based top positions on this component
  int winding = 0;
};

/// Components of the closure of `word` in the solid torus with their
/// winding numbers around the core.
std::vector<WindingComponent> components_and_windings(const BraidWord& word);

struct ComponentInfo {
  std::string id;
  Color color = Color::uncolored;
  int orientation = 1;  // +1 runs down the word, -1 runs up

  friend bool operator==(const ComponentInfo&, const ComponentInfo&) = default;
};

struct SignedCrossing {
  std::size_t index = 0;     // letter index in the word
  int position = 1;          // braid position of the letter
  std::size_t first = 0;     // component entering from the left
  std::size_t second = 0;    // component entering from the right
  int sign = 1;              // right-handed = +1, orientation-corrected
};

/// A braid word on `strands` positions whose positions [open, strands) are
/// closed up around the right-hand side. Positions [0, open) end in boundary
/// slots at the top and bottom. Components are the arcs (one per top slot,
/// in slot order) followed by the closed loops (ordered by smallest
/// position). Component identity is stable under the local moves below.
class StrandDiagram {
 public:
  const BraidWord& word() const { return word_; }
  int strands() const { return word_.strands(); }
  int open_count() const { return open_; }
  std::size_t component_count() const { return components_.size(); }
  std::span<const ComponentInfo> components() const { return components_; }
  const ComponentInfo& component(std::size_t c) const { return components_.at(c); }
  bool is_arc(std::size_t c) const { return c < static_cast<std::size_t>(open_); }

  /// Component owning the strand that starts at top position p.
  std::size_t owner_of_top(int p) const { return owner_.at(static_cast<std::size_t>(p)); }
  /// Component owning the strand that ends at bottom position p.
  std::size_t owner_of_bottom(int p) const;
  /// Top positions visited by component c, in traversal order.
  std::vector<int> positions_of(std::size_t c) const;
  /// Bottom slot where arc c ends.
  int arc_end(std::size_t c) const;

  std::vector<SignedCrossing> crossings() const;
  int crossing_count() const { return static_cast<int>(word_.size()); }
  /// Signed count of self-crossings of component c.
  int self_writhe(std::size_t c) const;
  /// Signed count of crossings between two distinct components.
  int mixed_crossing_sum(std::size_t a, std::size_t b) const;

  friend bool operator==(const StrandDiagram&, const StrandDiagram&) = default;

 protected:
  StrandDiagram() = default;
  StrandDiagram(BraidWord word, int open, std::vector<ComponentInfo> components);

  /// Number of components the word induces for the given open count.
  static std::size_t count_components(const BraidWord& word, int open);

  BraidWord word_;
  int open_ = 0;
  std::vector<ComponentInfo> components_;
  std::vector<std::size_t> owner_;
  std::vector<int> perm_;
};

struct EndpointSlot {
  int slot = 0;
  bool top = true;
  Color color = Color::uncolored;
  int orientation = 1;

  friend bool operator==(const EndpointSlot&, const EndpointSlot&) = default;
};

/// Rectangular tangle in a ball: arcs between top and bottom slots plus
/// closed components.
class ColoredTangle : public StrandDiagram {
 public:
  ColoredTangle() = default;
  ColoredTangle(BraidWord word, int open, std::vector<ComponentInfo> components);

  /// Top slots then bottom slots.
  std::vector<EndpointSlot> endpoints() const;
  EndpointSlot top_slot(int k) const;
  EndpointSlot bottom_slot(int k) const;

  static std::size_t expected_components(const BraidWord& word, int open) {
    return count_components(word, open);
  }
};

/// Closed diagram in the 3-sphere; every component is a loop.
class BicoloredLink : public StrandDiagram {
 public:
  BicoloredLink() = default;
  BicoloredLink(BraidWord word, std::vector<ComponentInfo> components);

  static std::size_t expected_components(const BraidWord& word) { return count_components(word, 0); }
};

struct AnnularComponent {
  std::string id;
  Color color = Color::uncolored;
  int framing = 0;
  int orientation = 1;

  friend bool operator==(const AnnularComponent&, const AnnularComponent&) = default;
};

/// Closed braid in the solid torus with an integer framing label per
/// component. Framing labels are data; `kinks` records the curls that make
/// the blackboard framing agree with them (see normalize_to_writhe).
class AnnularLink : public StrandDiagram {
 public:
  AnnularLink() = default;
  AnnularLink(BraidWord word, std::vector<AnnularComponent> components);

  int winding(std::size_t c) const { return static_cast<int>(positions_of(c).size()); }
  int framing(std::size_t c) const { return framings_.at(c); }
  int kinks(std::size_t c) const { return kinks_.at(c); }
  int blackboard_framing(std::size_t c) const { return self_writhe(c) + kinks(c); }
  bool is_normalized() const;
  /// Half the mixed crossing sum; always an integer for a closed diagram.
  int linking(std::size_t a, std::size_t b) const;
  std::size_t index_of(std::string_view id) const;
  std::vector<AnnularComponent> annular_components() const;

  friend AnnularLink normalize_to_writhe(const AnnularLink& link);
  friend AnnularLink with_kinks(const AnnularLink& link, std::vector<int> kinks);

  friend bool operator==(const AnnularLink&, const AnnularLink&) = default;

 private:
  std::vector<int> framings_;
  std::vector<int> kinks_;
};

/// Adds curls so that the blackboard framing of every component equals its
/// framing label.
AnnularLink normalize_to_writhe(const AnnularLink& link);
AnnularLink with_kinks(const AnnularLink& link, std::vector<int> kinks);

/// Linking number between the red and the blue components: half the signed
/// count of red-blue crossings.
int bicolored_linking(const BicoloredLink& link);

/// Joins top slot k to bottom slot k by a crossingless strand for every k.
BicoloredLink close_tangle(const ColoredTangle& t);

/// Orientations reversed and crossing signs flipped.
ColoredTangle reverse_mirror(const ColoredTangle& t);

/// Red and blue exchanged everywhere.
ColoredTangle exchange_colors(const ColoredTangle& t);
BicoloredLink exchange_colors(const BicoloredLink& link);

/// All crossing signs flipped, orientations kept.
BicoloredLink mirror(const BicoloredLink& link);

/// The tangle with n half twists: two downward arcs, red from top slot 0,
/// blue from top slot 1, |n| crossings of sign sgn(n).
ColoredTangle half_twist_tangle(int n);
/// Same, with both arcs uncolored.
ColoredTangle half_twist_tangle_uncolored(int n);

enum class Move { R1, R2, R2_inverse, R3 };

/// Where a move applies. R1 inserts a curl letter at `index` (sign `sign`).
/// R2 inserts sigma_position^sign sigma_position^-sign at `index`.
/// R2_inverse removes the cancelling pair starting at `index`.
/// R3 rewrites the three letters starting at `index`.
struct MoveSite {
  std::size_t index = 0;
  int position = 1;
  int sign = 1;
};

ColoredTangle reidemeister(const ColoredTangle& d, Move move, const MoveSite& site);
BicoloredLink reidemeister(const BicoloredLink& d, Move move, const MoveSite& site);
/// R1 is not available here: a curl drawn as a braid stabilization would
/// change the winding number.
AnnularLink reidemeister(const AnnularLink& d, Move move, const MoveSite& site);

/// Letter indices where an R3 or R2_inverse move applies.
std::vector<std::size_t> move_sites(const BraidWord& word, Move move);

}  // namespace lbkit
