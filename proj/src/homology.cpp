#include "lbkit/homology.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace lbkit {

AbelianGroup AbelianGroup::from_factors(int free_rank, const std::vector<std::int64_t>& factors) {
  if (free_rank < 0) throw std::invalid_argument("negative free rank");
  AbelianGroup g;
  g.free_rank_ = free_rank;
  // Reduce an arbitrary list of cyclic orders to the invariant factor chain
  // by repeatedly replacing (a, b) with (gcd, lcm).
  std::vector<std::int64_t> t;
  for (auto f : factors) {
    if (f < 0) f = -f;
    if (f == 0) {
      ++g.free_rank_;
    } else if (f > 1) {
      t.push_back(f);
    }
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      const auto gcd = std::gcd(t[i], t[j]);
      const auto lcm = t[i] / gcd * t[j];
      t[i] = gcd;
      t[j] = lcm;
    }
  }
  t.erase(std::remove(t.begin(), t.end(), std::int64_t{1}), t.end());
  g.torsion_ = std::move(t);
  return g;
}

std::string AbelianGroup::to_string() const {
  if (is_trivial()) return "0";
  std::ostringstream out;
  bool first = true;
  auto sep = [&] {
    if (!first) out << " + ";
    first = false;
  };
  if (free_rank_ > 0) {
    sep();
    out << "Z";
    if (free_rank_ > 1) out << "^" << free_rank_;
  }
  for (auto t : torsion_) {
    sep();
    out << "Z/" << t;
  }
  return out.str();
}

bool is_element(const AbelianGroup& g, const GroupElement& e) {
  if (e.size() != g.coordinate_count()) return false;
  const auto f = static_cast<std::size_t>(g.free_rank());
  for (std::size_t i = 0; i < g.torsion().size(); ++i)
    if (e[f + i] < 0 || e[f + i] >= g.torsion()[i]) return false;
  return true;
}

GroupElement zero_element(const AbelianGroup& g) { return GroupElement(g.coordinate_count(), 0); }

GroupElement add(const AbelianGroup& g, const GroupElement& a, const GroupElement& b) {
  if (!is_element(g, a) || !is_element(g, b)) throw std::invalid_argument("not an element of the group");
  GroupElement out(a.size());
  const auto f = static_cast<std::size_t>(g.free_rank());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[i] + b[i];
    if (i >= f) out[i] %= g.torsion()[i - f];
  }
  return out;
}

std::int64_t element_order(const AbelianGroup& g, const GroupElement& e) {
  if (!is_element(g, e)) throw std::invalid_argument("not an element of the group");
  const auto f = static_cast<std::size_t>(g.free_rank());
  for (std::size_t i = 0; i < f; ++i)
    if (e[i] != 0) return 0;
  std::int64_t order = 1;
  for (std::size_t i = 0; i < g.torsion().size(); ++i) {
    const auto t = g.torsion()[i];
    const auto o = t / std::gcd(t, e[f + i]);
    order = std::lcm(order, o);
  }
  return order;
}

AbelianGroup cokernel(const IntMatrix& presentation) {
  const auto rows = presentation.rows();
  if (presentation.cols() == 0) return AbelianGroup::from_factors(static_cast<int>(rows), {});
  const auto snf = smith_normal_form(presentation);
  const auto rank = snf.rank();
  std::vector<std::int64_t> factors;
  for (Eigen::Index i = 0; i < rank; ++i) factors.push_back(snf.diagonal(i, i));
  return AbelianGroup::from_factors(static_cast<int>(rows - rank), factors);
}

std::vector<GroupElement> torsion_order2(const AbelianGroup& g) {
  const auto f = static_cast<std::size_t>(g.free_rank());
  std::vector<std::size_t> even;
  for (std::size_t i = 0; i < g.torsion().size(); ++i)
    if (g.torsion()[i] % 2 == 0) even.push_back(i);
  std::vector<GroupElement> out;
  const std::size_t subsets = std::size_t{1} << even.size();
  for (std::size_t mask = 1; mask < subsets; ++mask) {
    GroupElement e = zero_element(g);
    for (std::size_t b = 0; b < even.size(); ++b)
      if (mask & (std::size_t{1} << b)) e[f + even[b]] = g.torsion()[even[b]] / 2;
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end());
  return out;
}

AbelianGroup h1(const KirbyDiagram& d) { return cokernel(d.winding_matrix()); }

AbelianGroup boundary_h1(const KirbyDiagram& d) {
  if (d.three_handles() != 0 || d.four_handles() != 0)
    throw KirbyError("boundary homology is read from surgery diagrams without 3- or 4-handles");
  return cokernel(d.linking());
}

}  // namespace lbkit
