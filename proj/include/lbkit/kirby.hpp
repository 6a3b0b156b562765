#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lbkit/diagrams.hpp"
#include "lbkit/matrix.hpp"

namespace lbkit {

class KirbyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TwoHandle {
  std::string id;
  /// Component id in the attaching link, when the curve is tracked.
  std::optional<std::string> curve;

  friend bool operator==(const TwoHandle&, const TwoHandle&) = default;
};

/// Handle decomposition of a 4-manifold with one 0-handle: dotted circles
/// (1-handles), framed 2-handles, and bare counts of 3- and 4-handles.
///
/// `linking` is indexed by the dotted circles followed by the 2-handles.
/// Its diagonal holds the 2-handle framings (0 on dotted rows) and its
/// dotted-against-2-handle block holds the algebraic winding numbers.
///
/// Handles whose attaching curve is tracked reference a component of
/// `attaching`, an annular link drawn in the complement of the (single)
/// dotted circle. Curves with winding 0 are never tracked; they sit in a
/// ball and are described by their linking row alone.
class KirbyDiagram {
 public:
  KirbyDiagram() = default;
  KirbyDiagram(std::vector<std::string> dotted, std::vector<TwoHandle> two_handles, IntMatrix linking,
               int three_handles, int four_handles, std::optional<AnnularLink> attaching = std::nullopt);

  const std::vector<std::string>& dotted() const { return dotted_; }
  const std::vector<TwoHandle>& two_handles() const { return two_handles_; }
  const IntMatrix& linking() const { return linking_; }
  const std::optional<AnnularLink>& attaching() const { return attaching_; }
  int three_handles() const { return three_handles_; }
  int four_handles() const { return four_handles_; }

  Eigen::Index dotted_count() const { return static_cast<Eigen::Index>(dotted_.size()); }
  Eigen::Index two_handle_count() const { return static_cast<Eigen::Index>(two_handles_.size()); }

  /// Index of a 2-handle among the 2-handles.
  Eigen::Index handle_index(std::string_view id) const;
  bool is_dotted(std::string_view id) const;

  std::int64_t framing(Eigen::Index handle) const;
  std::vector<std::int64_t> framings() const;
  /// Winding of a 2-handle around each dotted circle.
  IntVector winding(Eigen::Index handle) const;
  /// Rows are dotted circles, columns are 2-handles.
  IntMatrix winding_matrix() const;
  /// Linking matrix restricted to the 2-handles.
  IntMatrix two_handle_linking() const;

  /// Handle counts indexed by dimension 0..4.
  std::vector<int> handle_counts() const;

  friend bool operator==(const KirbyDiagram& a, const KirbyDiagram& b);

 private:
  std::vector<std::string> dotted_;
  std::vector<TwoHandle> two_handles_;
  IntMatrix linking_;
  int three_handles_ = 0;
  int four_handles_ = 0;
  std::optional<AnnularLink> attaching_;
};

int euler_characteristic(const KirbyDiagram& d);

/// Handle ids used for the X_{p,q} family.
inline constexpr std::string_view kDottedCircle = "U";
inline constexpr std::string_view kGammaPlus = "gamma+";
inline constexpr std::string_view kGammaMinus = "gamma-";
inline constexpr std::string_view kMu = "mu";

/// The attaching curves of X_{p,q}: two (2,1) torus curves around the
/// dotted circle, drawn with opposite crossing signs, one framed p and one
/// framed q.
AnnularLink xpq_attaching_link(int p, int q);

/// One dotted circle U and three 2-handles: gamma+ (framing p), gamma-
/// (framing q), each winding twice around U, and a 0-framed mu that does
/// not wind and links gamma- once. Sliding gamma- over mu turns X_{p,q}
/// into X_{p,q+-2} on the nose, and mu plus its spanning disk meets the
/// sphere class (1, 1, 0) once.
KirbyDiagram build_xpq(int p, int q);

/// Slides 2-handle a over 2-handle b with band sign `sign`. The linking
/// matrix changes by the congruence P L P^T with P = I + sign * E_ab. The
/// curve of `a` is no longer tracked afterwards.
KirbyDiagram handle_slide(const KirbyDiagram& d, std::string_view a, std::string_view b, int sign);

/// The double: a 0-framed meridian for every 2-handle, one 3-handle per
/// dotted circle and one 4-handle.
KirbyDiagram double_of(const KirbyDiagram& d);

/// Id of the meridian added by double_of for handle `id`.
std::string meridian_id(std::string_view id);

/// A 2-sphere in the ambient manifold, described by its homology class over
/// the 2-handles and the twist index n of the sphere family.
struct SphereEmbedding {
  KirbyDiagram ambient;
  int n = 0;
  IntVector class_vector;
};

/// The sphere Sigma_n of an X_{p,q} diagram (possibly doubled): class +1 on
/// gamma+ and gamma-, 0 elsewhere, for every n.
SphereEmbedding sigma(const KirbyDiagram& ambient, int n);

std::int64_t sphere_square(const SphereEmbedding& s);

/// Uncolored two-strand tangle of the sphere in the meridian ball of the
/// 1-handle region.
ColoredTangle sphere_tangle(const SphereEmbedding& s);

}  // namespace lbkit
