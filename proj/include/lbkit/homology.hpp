#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lbkit/kirby.hpp"
#include "lbkit/matrix.hpp"
#include "lbkit/smith.hpp"

namespace lbkit {

/// Finitely generated abelian group Z^free_rank + Z/t_1 + ... + Z/t_k in
/// canonical form: every t_i >= 2 and t_i divides t_{i+1}.
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Accepts any list of non-negative factors (0 means a free summand) and
  /// canonicalizes it.
  static AbelianGroup from_factors(int free_rank, const std::vector<std::int64_t>& factors);
  static AbelianGroup cyclic(std::int64_t order) { return from_factors(0, {order}); }
  static AbelianGroup trivial() { return {}; }

  int free_rank() const { return free_rank_; }
  const std::vector<std::int64_t>& torsion() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  /// Number of coordinates of an element: free coordinates first.
  std::size_t coordinate_count() const { return static_cast<std::size_t>(free_rank_) + torsion_.size(); }

  std::string to_string() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  int free_rank_ = 0;
  std::vector<std::int64_t> torsion_;
};

/// Element in canonical coordinates; torsion coordinates are reduced into
/// [0, t_i).
using GroupElement = std::vector<std::int64_t>;

bool is_element(const AbelianGroup& g, const GroupElement& e);
GroupElement zero_element(const AbelianGroup& g);
GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b);
/// Order of e, or 0 when it has infinite order.
std::int64_t element_order(const AbelianGroup& g, const GroupElement& e);

/// Z^rows modulo the column span of the presentation matrix.
AbelianGroup cokernel(const IntMatrix& presentation);

/// The elements of order exactly 2, in lexicographic order of coordinates.
std::vector<GroupElement> torsion_order2(const AbelianGroup& g);

/// First homology from the winding matrix (dotted rows, 2-handle columns).
AbelianGroup h1(const KirbyDiagram& d);

/// First homology of the boundary: the cokernel of the full linking matrix
/// with every dotted circle read as a 0-framed surgery curve.
AbelianGroup boundary_h1(const KirbyDiagram& d);

}  // namespace lbkit
