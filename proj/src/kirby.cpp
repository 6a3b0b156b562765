#include "lbkit/kirby.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace lbkit {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw KirbyError(message);
}

}  // namespace

KirbyDiagram::KirbyDiagram(std::vector<std::string> dotted, std::vector<TwoHandle> two_handles, IntMatrix linking,
                           int three_handles, int four_handles, std::optional<AnnularLink> attaching)
    : dotted_(std::move(dotted)),
      two_handles_(std::move(two_handles)),
      linking_(std::move(linking)),
      three_handles_(three_handles),
      four_handles_(four_handles),
      attaching_(std::move(attaching)) {
  const auto k = dotted_count();
  const auto n = k + two_handle_count();
  require(linking_.rows() == n && linking_.cols() == n, "linking matrix must be square over all handles");
  require(is_symmetric(linking_), "linking matrix must be symmetric");
  for (Eigen::Index i = 0; i < k; ++i) require(linking_(i, i) == 0, "dotted circles carry no framing");
  require(three_handles_ >= 0 && four_handles_ >= 0, "handle counts must be non-negative");

  std::set<std::string> ids(dotted_.begin(), dotted_.end());
  for (const auto& h : two_handles_) ids.insert(h.id);
  require(ids.size() == static_cast<std::size_t>(n), "handle ids must be unique");

  std::set<std::string> used_curves;
  for (Eigen::Index h = 0; h < two_handle_count(); ++h) {
    const auto& handle = two_handles_[static_cast<std::size_t>(h)];
    if (!handle.curve) continue;
    require(attaching_.has_value(), "handle '" + handle.id + "' references a curve but no attaching link is given");
    require(k == 1, "tracked curves need exactly one dotted circle");
    require(used_curves.insert(*handle.curve).second, "curve '" + *handle.curve + "' used twice");
    std::size_t c = 0;
    try {
      c = attaching_->index_of(*handle.curve);
    } catch (const DiagramError&) {
      throw KirbyError("handle '" + handle.id + "' references unknown curve '" + *handle.curve + "'");
    }
    require(attaching_->framing(c) == framing(h), "curve framing of '" + handle.id + "' disagrees with the matrix");
    const int w = attaching_->component(c).orientation * attaching_->winding(c);
    require(linking_(0, k + h) == w, "winding of '" + handle.id + "' disagrees with its curve");
  }
  for (Eigen::Index a = 0; a < two_handle_count(); ++a) {
    const auto& ha = two_handles_[static_cast<std::size_t>(a)];
    if (!ha.curve) continue;
    for (Eigen::Index b = a + 1; b < two_handle_count(); ++b) {
      const auto& hb = two_handles_[static_cast<std::size_t>(b)];
      if (!hb.curve) continue;
      const int lk = attaching_->linking(attaching_->index_of(*ha.curve), attaching_->index_of(*hb.curve));
      require(linking_(k + a, k + b) == lk,
              "linking of '" + ha.id + "' and '" + hb.id + "' disagrees with their curves");
    }
  }
}

bool operator==(const KirbyDiagram& a, const KirbyDiagram& b) {
  return a.dotted_ == b.dotted_ && a.two_handles_ == b.two_handles_ && a.linking_.rows() == b.linking_.rows() &&
         a.linking_.cols() == b.linking_.cols() && a.linking_ == b.linking_ && a.three_handles_ == b.three_handles_ &&
         a.four_handles_ == b.four_handles_ && a.attaching_ == b.attaching_;
}

Eigen::Index KirbyDiagram::handle_index(std::string_view id) const {
  for (std::size_t h = 0; h < two_handles_.size(); ++h)
    if (two_handles_[h].id == id) return static_cast<Eigen::Index>(h);
  throw KirbyError("no 2-handle '" + std::string(id) + "'");
}

bool KirbyDiagram::is_dotted(std::string_view id) const {
  return std::find(dotted_.begin(), dotted_.end(), id) != dotted_.end();
}

std::int64_t KirbyDiagram::framing(Eigen::Index handle) const {
  const auto i = dotted_count() + handle;
  return linking_(i, i);
}

std::vector<std::int64_t> KirbyDiagram::framings() const {
  std::vector<std::int64_t> out;
  for (Eigen::Index h = 0; h < two_handle_count(); ++h) out.push_back(framing(h));
  return out;
}

IntVector KirbyDiagram::winding(Eigen::Index handle) const {
  return linking_.col(dotted_count() + handle).head(dotted_count());
}

IntMatrix KirbyDiagram::winding_matrix() const {
  return linking_.topRightCorner(dotted_count(), two_handle_count());
}

IntMatrix KirbyDiagram::two_handle_linking() const {
  return linking_.bottomRightCorner(two_handle_count(), two_handle_count());
}

std::vector<int> KirbyDiagram::handle_counts() const {
  return {1, static_cast<int>(dotted_count()), static_cast<int>(two_handle_count()), three_handles_, four_handles_};
}

int euler_characteristic(const KirbyDiagram& d) {
  const auto counts = d.handle_counts();
  int chi = 0;
  for (std::size_t k = 0; k < counts.size(); ++k) chi += (k % 2 == 0 ? 1 : -1) * counts[k];
  return chi;
}

AnnularLink xpq_attaching_link(int p, int q) {
  // gamma+ on strands 1-2 as the closure of sigma_1^-1, gamma- on strands
  // 3-4 as the closure of sigma_3. The two curves are split from each other.
  BraidWord word(4, {{1, -1}, {3, 1}});
  return AnnularLink(std::move(word), {{std::string(kGammaPlus), Color::purple, p, 1},
                                       {std::string(kGammaMinus), Color::purple, q, 1}});
}

KirbyDiagram build_xpq(int p, int q) {
  IntMatrix lk(4, 4);
  lk << 0, 2, 2, 0,  //
      2, p, 0, 0,    //
      2, 0, q, 1,    //
      0, 0, 1, 0;
  return KirbyDiagram({std::string(kDottedCircle)},
                      {{std::string(kGammaPlus), std::string(kGammaPlus)},
                       {std::string(kGammaMinus), std::string(kGammaMinus)},
                       {std::string(kMu), std::nullopt}},
                      std::move(lk), 0, 0, xpq_attaching_link(p, q));
}

KirbyDiagram handle_slide(const KirbyDiagram& d, std::string_view a, std::string_view b, int sign) {
  require(!d.is_dotted(a) && !d.is_dotted(b), "only 2-handles can be slid");
  require(sign == 1 || sign == -1, "band sign must be +1 or -1");
  const auto ia = d.handle_index(a);
  const auto ib = d.handle_index(b);
  require(ia != ib, "a handle cannot slide over itself");
  const auto k = d.dotted_count();
  const auto n = d.linking().rows();
  const IntMatrix p = elementary<std::int64_t>(n, k + ia, k + ib, sign);
  IntMatrix lk = p * d.linking() * p.transpose();
  auto handles = d.two_handles();
  handles[static_cast<std::size_t>(ia)].curve.reset();
  return KirbyDiagram(d.dotted(), std::move(handles), std::move(lk), d.three_handles(), d.four_handles(),
                      d.attaching());
}

std::string meridian_id(std::string_view id) { return "m(" + std::string(id) + ")"; }

KirbyDiagram double_of(const KirbyDiagram& d) {
  const auto n = d.linking().rows();
  const auto k = d.dotted_count();
  const auto m = d.two_handle_count();
  IntMatrix lk = IntMatrix::Zero(n + m, n + m);
  lk.topLeftCorner(n, n) = d.linking();
  auto handles = d.two_handles();
  for (Eigen::Index h = 0; h < m; ++h) {
    lk(k + h, n + h) = 1;
    lk(n + h, k + h) = 1;
    handles.push_back({meridian_id(d.two_handles()[static_cast<std::size_t>(h)].id), std::nullopt});
  }
  return KirbyDiagram(d.dotted(), std::move(handles), std::move(lk), d.three_handles() + static_cast<int>(k),
                      d.four_handles() + 1, d.attaching());
}

SphereEmbedding sigma(const KirbyDiagram& ambient, int n) {
  IntVector c = IntVector::Zero(ambient.two_handle_count());
  c(ambient.handle_index(kGammaPlus)) = 1;
  c(ambient.handle_index(kGammaMinus)) = 1;
  return {ambient, n, std::move(c)};
}

std::int64_t sphere_square(const SphereEmbedding& s) {
  require(s.class_vector.size() == s.ambient.two_handle_count(), "class vector does not match the ambient handles");
  return s.class_vector.dot(s.ambient.two_handle_linking() * s.class_vector);
}

ColoredTangle sphere_tangle(const SphereEmbedding& s) { return half_twist_tangle_uncolored(s.n); }

}  // namespace lbkit
