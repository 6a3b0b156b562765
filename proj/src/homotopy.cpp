#include "lbkit/homotopy.hpp"

#include <algorithm>
#include <cstdlib>

#include "lbkit/covers.hpp"
#include "lbkit/obstruction.hpp"

namespace lbkit {

bool CrossedClass::is_zero() const {
  return std::all_of(parity.begin(), parity.end(), [](const auto& kv) { return kv.second == 0; });
}

AbelianGroup xpq_group() { return AbelianGroup::cyclic(2); }

HomotopyTrace empty_trace(const AbelianGroup& group) { return {group, {}, {}}; }

HomotopyTrace rho(int /*n*/) {
  // The trace has the same shape for every n; only the spheres at its ends
  // depend on n.
  const auto g = xpq_group();
  const GroupElement x{1};
  return {g, {FingerMove{x}, WhitneyMove{x}}, {Cycle{true, x, 2, 2}}};
}

HomotopyTrace concat(const HomotopyTrace& a, const HomotopyTrace& b) {
  if (!(a.group == b.group))
    throw GroupMismatch("cannot concatenate traces over " + a.group.to_string() + " and " + b.group.to_string());
  HomotopyTrace out = a;
  out.moves.insert(out.moves.end(), b.moves.begin(), b.moves.end());
  out.cycles.insert(out.cycles.end(), b.cycles.begin(), b.cycles.end());
  return out;
}

HomotopyTrace rho_chain(int n, int k) {
  HomotopyTrace t = empty_trace(xpq_group());
  for (int s = 0; s < k; ++s) t = concat(t, rho(n + 2 * s));
  return t;
}

CrossedClass crossed_class(const HomotopyTrace& t) {
  CrossedClass c;
  for (const auto& e : torsion_order2(t.group)) c.parity[e] = 0;
  for (const auto& cycle : t.cycles) {
    if (!cycle.crossed) continue;
    auto it = c.parity.find(cycle.element);
    if (it != c.parity.end()) it->second ^= 1;
  }
  return c;
}

bool cycle_validate(const HomotopyTrace& t) {
  long fingers = 0;
  long whitneys = 0;
  for (const auto& m : t.moves) {
    const auto& e = std::visit([](const auto& mv) -> const GroupElement& { return mv.element; }, m);
    if (!is_element(t.group, e)) return false;
    (std::holds_alternative<FingerMove>(m) ? fingers : whitneys) += 1;
  }
  long minima = 0;
  long maxima = 0;
  for (const auto& c : t.cycles) {
    if (c.minima < 0 || c.maxima < 0 || !is_element(t.group, c.element)) return false;
    minima += c.minima;
    maxima += c.maxima;
    if (c.crossed) {
      const auto order = element_order(t.group, c.element);
      if (order == 0 || order > 2) return false;
    }
  }
  return minima == 2 * fingers && maxima == 2 * whitneys;
}

bool lightbulb_check(const HomotopyTrace& t, bool common_dual, bool dual_disjoint_support) {
  if (!cycle_validate(t)) throw InvalidTrace("trace fails the minima/maxima or crossed element checks");
  return common_dual && dual_disjoint_support && crossed_class(t).is_zero();
}

namespace {

struct LiftOracle {
  KirbyDiagram ambient = build_xpq(0, 0);
  CoverData cover = double_cover_diagram(ambient);

  std::vector<std::vector<std::int64_t>> classes(int n) const {
    const auto [red, blue] = lift_classes(sigma(ambient, n), cover);
    std::vector<std::vector<std::int64_t>> out{{red.data(), red.data() + red.size()},
                                               {blue.data(), blue.data() + blue.size()}};
    std::sort(out.begin(), out.end());
    return out;
  }
};

const LiftOracle& lift_oracle() {
  static const LiftOracle oracle;
  return oracle;
}

}  // namespace

Relation classify(int i, int j, bool closed) {
  Relation r;
  r.equivalent = true;
  r.equivalent_evidence =
      "common dual, equal square and equal homology class give a diffeomorphism of pairs acting trivially on H2";

  const auto& oracle = lift_oracle();
  r.homotopic = oracle.classes(i) == oracle.classes(j);
  r.homotopic_evidence = r.homotopic ? "red and blue lifts carry the same classes in the double cover, so the spheres "
                                       "are homologous and hence homotopic"
                                     : "lifts to the double cover carry different classes, so the spheres are not "
                                       "homotopic";
  if (!r.homotopic) {
    r.concordant_evidence = "not homotopic";
    r.isotopic_evidence = "not homotopic";
    return r;
  }

  const int obstruction = concordance_obstruction(i, j, closed);
  r.concordant = obstruction == 0;
  r.concordant_evidence = r.concordant ? "bicolored linking of the assembled cover link is even"
                                       : "bicolored linking of the assembled cover link is odd, obstructing a "
                                         "topological concordance";
  if (!r.concordant) {
    r.isotopic_evidence = "not topologically concordant, hence not smoothly isotopic";
    return r;
  }

  const int k = std::abs(i - j) / 2;
  r.isotopic = lightbulb_check(rho_chain(std::min(i, j), k), true, true);
  r.isotopic_evidence = r.isotopic ? "4D light bulb theorem: common dual and even crossed cycles on the generator"
                                   : "crossed cycles on the generator are odd";
  return r;
}

}  // namespace lbkit
