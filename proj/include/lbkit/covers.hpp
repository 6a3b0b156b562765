#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "lbkit/diagrams.hpp"
#include "lbkit/kirby.hpp"

namespace lbkit {

/// Label of the sheet a lift belongs to. For degree 2, sheet 0 is red and
/// sheet 1 is blue.
std::string sheet_name(int sheet, int degree);
Color sheet_color(int sheet, int degree);

struct LinkCover {
  int degree = 1;
  AnnularLink link;                 // the closure of word^degree, normalized
  std::vector<std::size_t> base;    // base component of each cover component
  std::vector<int> sheet;           // sheet label of each cover component
  std::vector<std::size_t> deck;    // image of each cover component under the deck generator
};

/// The degree-m cyclic cover of the solid torus restricted to an annular
/// link: the closure of word^m on the same strands. Framings are carried
/// by blackboard normalization, so the input must already be normalized.
///
/// A base component of winding w lifts to gcd(w, m) components; each curl
/// of the base lifts to m/gcd(w, m) curls on every lift. Lift ids are the
/// base id with a sheet suffix. Throws DiagramError when the input is not
/// normalized or when the framing identity
///   (m / g) * base_framing == lift_framing + sum of lk with the other lifts
/// fails for some lift.
LinkCover cyclic_cover_link(const AnnularLink& link, int m);

/// Cover component through the top of word copy `copy` at position `pos`.
std::size_t lift_through(const LinkCover& cover, const AnnularLink& base, int copy, int pos);

/// The double cover of a diagram with one dotted circle.
struct CoverData {
  KirbyDiagram base;
  int degree = 2;
  KirbyDiagram total;
  /// For each 2-handle of `total`: (base 2-handle index, sheet).
  std::vector<std::pair<Eigen::Index, int>> component_map;
  /// Deck involution on the 2-handles of `total`.
  std::vector<Eigen::Index> deck;
};

/// Requires one dotted circle, every 2-handle of even winding, and a
/// tracked attaching curve for every 2-handle that winds. Curves of winding
/// zero lie in a ball and lift to one copy per sheet; the copy on sheet s
/// links the lift of a winding curve C that passes through sheet s at the
/// first strand of C.
CoverData double_cover_diagram(const KirbyDiagram& d);

enum class Ball { b0, b_pi };

struct BallTangle {
  Ball ball = Ball::b0;
  ColoredTangle tangle;
};

/// Lifts of the sphere tangle to the two preimages of the meridian ball.
/// Each ball sees one red and one blue arc twisting n half turns; the ball
/// over angle pi carries the colors exchanged.
std::pair<BallTangle, BallTangle> lift_sphere_tangles(const SphereEmbedding& s);

/// Deck transformation on cover 2-handles and on ball tangles.
Eigen::Index deck_image(const CoverData& c, Eigen::Index handle);
BallTangle deck_image(const BallTangle& t);

/// Homology classes (over the 2-handles of the cover) of the red and blue
/// lifts of a sphere of the X_{p,q} family.
std::pair<IntVector, IntVector> lift_classes(const SphereEmbedding& s, const CoverData& c);

}  // namespace lbkit
