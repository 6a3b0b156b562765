#include "lbkit/covers.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace lbkit {

std::string sheet_name(int sheet, int degree) {
  if (degree == 2) return sheet == 0 ? "r" : "b";
  return std::to_string(sheet);
}

Color sheet_color(int sheet, int degree) {
  if (degree != 2) return Color::uncolored;
  return sheet == 0 ? Color::red : Color::blue;
}

namespace {

std::vector<int> inverse(const std::vector<int>& perm) {
  std::vector<int> out(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
  return out;
}

// inv^s applied to pos
int pull_back(const std::vector<int>& inv, int pos, int s) {
  for (int i = 0; i < s; ++i) pos = inv[static_cast<std::size_t>(pos)];
  return pos;
}

}  // namespace

std::size_t lift_through(const LinkCover& cover, const AnnularLink& base, int copy, int pos) {
  const auto inv = inverse(base.word().permutation());
  return cover.link.owner_of_top(pull_back(inv, pos, copy));
}

LinkCover cyclic_cover_link(const AnnularLink& link, int m) {
  if (m < 1) throw DiagramError("cover degree must be at least 1");
  if (!link.is_normalized())
    throw DiagramError("framing labels must be normalized to the writhe before covering");

  const BraidWord word = link.word().power(m);
  const auto inv = inverse(link.word().permutation());
  const auto cycles = permutation_cycles(word.permutation());
  const std::size_t count = cycles.size();

  // Cover component of each top position.
  std::vector<std::size_t> owner(static_cast<std::size_t>(link.strands()));
  for (std::size_t c = 0; c < count; ++c)
    for (int p : cycles[c]) owner[static_cast<std::size_t>(p)] = c;

  LinkCover out;
  out.degree = m;
  out.base.resize(count);
  out.sheet.assign(count, -1);
  out.deck.resize(count);
  std::vector<int> lifts_of_base(link.component_count(), 0);
  for (std::size_t c = 0; c < count; ++c) {
    out.base[c] = link.owner_of_top(cycles[c].front());
    ++lifts_of_base[out.base[c]];
  }
  for (std::size_t b = 0; b < link.component_count(); ++b) {
    const int anchor = link.positions_of(b).front();
    for (int s = 0; s < m; ++s) {
      auto& sheet = out.sheet[owner[static_cast<std::size_t>(pull_back(inv, anchor, s))]];
      if (sheet < 0) sheet = s;
    }
  }
  for (std::size_t c = 0; c < count; ++c) out.deck[c] = owner[static_cast<std::size_t>(pull_back(inv, cycles[c].front(), 1))];

  std::vector<AnnularComponent> comps;
  std::vector<int> kinks;
  for (std::size_t c = 0; c < count; ++c) {
    const auto b = out.base[c];
    const auto& info = link.component(b);
    const int g = lifts_of_base[b];
    const bool full = g == m;
    comps.push_back({info.id + "." + sheet_name(out.sheet[c], m), full ? sheet_color(out.sheet[c], m) : Color::purple,
                     0, info.orientation});
    kinks.push_back(link.kinks(b) * (m / g));
  }
  // Framing labels are the blackboard framings of the lifts.
  AnnularLink bare(word, comps);
  for (std::size_t c = 0; c < count; ++c) comps[c].framing = bare.self_writhe(c) + kinks[c];
  out.link = with_kinks(AnnularLink(word, std::move(comps)), std::move(kinks));

  for (std::size_t c = 0; c < count; ++c) {
    const auto b = out.base[c];
    const int g = lifts_of_base[b];
    int others = 0;
    for (std::size_t o = 0; o < count; ++o)
      if (o != c && out.base[o] == b) others += out.link.linking(c, o);
    if ((m / g) * link.framing(b) != out.link.framing(c) + others)
      throw DiagramError("framing identity fails for lift '" + out.link.component(c).id + "'");
  }
  return out;
}

CoverData double_cover_diagram(const KirbyDiagram& d) {
  constexpr int m = 2;
  if (d.dotted_count() != 1) throw KirbyError("the double cover needs exactly one dotted circle");
  const auto k = d.dotted_count();
  const auto handles = d.two_handle_count();

  bool any_winding = false;
  for (Eigen::Index h = 0; h < handles; ++h) {
    const auto w = d.winding(h)(0);
    const auto& handle = d.two_handles()[static_cast<std::size_t>(h)];
    if (w % 2 != 0) throw KirbyError("2-handle '" + handle.id + "' has odd winding");
    if (w != 0 && !handle.curve) throw KirbyError("2-handle '" + handle.id + "' winds but its curve is not tracked");
    any_winding = any_winding || w != 0;
  }

  std::optional<AnnularLink> base_link;
  std::optional<LinkCover> cover;
  if (any_winding) {
    base_link = normalize_to_writhe(*d.attaching());
    cover = cyclic_cover_link(*base_link, m);
  }

  struct Lift {
    Eigen::Index base;
    int sheet;
    std::optional<std::size_t> cover_component;
  };
  std::vector<Lift> lifts;
  for (Eigen::Index h = 0; h < handles; ++h) {
    const auto& handle = d.two_handles()[static_cast<std::size_t>(h)];
    if (d.winding(h)(0) != 0) {
      const auto c = base_link->index_of(*handle.curve);
      std::vector<Lift> mine;
      for (std::size_t x = 0; x < cover->link.component_count(); ++x)
        if (cover->base[x] == c) mine.push_back({h, cover->sheet[x], x});
      std::sort(mine.begin(), mine.end(), [](const Lift& a, const Lift& b) { return a.sheet < b.sheet; });
      lifts.insert(lifts.end(), mine.begin(), mine.end());
    } else {
      for (int s = 0; s < m; ++s) lifts.push_back({h, s, std::nullopt});
    }
  }

  const auto n = static_cast<Eigen::Index>(lifts.size());
  IntMatrix lk = IntMatrix::Zero(1 + n, 1 + n);
  std::vector<TwoHandle> cover_handles;
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& li = lifts[static_cast<std::size_t>(i)];
    const auto& handle = d.two_handles()[static_cast<std::size_t>(li.base)];
    TwoHandle th{handle.id + "." + sheet_name(li.sheet, m), std::nullopt};
    if (li.cover_component) {
      const auto& link = cover->link;
      th.curve = link.component(*li.cover_component).id;
      const auto w = link.component(*li.cover_component).orientation * link.winding(*li.cover_component);
      lk(0, 1 + i) = lk(1 + i, 0) = w;
    }
    cover_handles.push_back(std::move(th));
    for (Eigen::Index j = 0; j <= i; ++j) {
      const auto& lj = lifts[static_cast<std::size_t>(j)];
      const std::int64_t base_lk = d.linking()(k + li.base, k + lj.base);
      std::int64_t value = 0;
      if (li.cover_component && lj.cover_component) {
        value = i == j ? cover->link.framing(*li.cover_component)
                       : cover->link.linking(*li.cover_component, *lj.cover_component);
      } else if (!li.cover_component && !lj.cover_component) {
        value = li.sheet == lj.sheet ? base_lk : 0;
      } else {
        const auto& local = li.cover_component ? lj : li;
        const auto& wound = li.cover_component ? li : lj;
        const auto curve = base_link->index_of(*d.two_handles()[static_cast<std::size_t>(wound.base)].curve);
        const int anchor = base_link->positions_of(curve).front();
        value = lift_through(*cover, *base_link, local.sheet, anchor) == *wound.cover_component ? base_lk : 0;
      }
      lk(1 + i, 1 + j) = lk(1 + j, 1 + i) = value;
    }
  }

  CoverData out;
  out.base = d;
  out.degree = m;
  for (const auto& l : lifts) out.component_map.emplace_back(l.base, l.sheet);
  out.deck.resize(lifts.size());
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    for (std::size_t j = 0; j < lifts.size(); ++j) {
      if (lifts[j].base != lifts[i].base) continue;
      const bool hit = lifts[i].cover_component ? cover->deck[*lifts[i].cover_component] == *lifts[j].cover_component
                                                : lifts[j].sheet == (lifts[i].sheet + 1) % m;
      if (hit) out.deck[i] = static_cast<Eigen::Index>(j);
    }
  }
  std::optional<AnnularLink> total_link;
  if (cover) total_link = cover->link;
  out.total = KirbyDiagram({std::string(d.dotted().front())}, std::move(cover_handles), std::move(lk),
                           m * d.three_handles(), m * d.four_handles(), std::move(total_link));
  return out;
}

std::pair<BallTangle, BallTangle> lift_sphere_tangles(const SphereEmbedding& s) {
  const ColoredTangle at_zero = half_twist_tangle(s.n);
  return {BallTangle{Ball::b0, at_zero}, BallTangle{Ball::b_pi, exchange_colors(at_zero)}};
}

Eigen::Index deck_image(const CoverData& c, Eigen::Index handle) {
  return c.deck.at(static_cast<std::size_t>(handle));
}

BallTangle deck_image(const BallTangle& t) {
  return {t.ball == Ball::b0 ? Ball::b_pi : Ball::b0, exchange_colors(t.tangle)};
}

std::pair<IntVector, IntVector> lift_classes(const SphereEmbedding& s, const CoverData& c) {
  const auto plus = c.base.handle_index(kGammaPlus);
  const auto minus = c.base.handle_index(kGammaMinus);
  auto lift_index = [&](Eigen::Index base, int sheet) {
    for (std::size_t i = 0; i < c.component_map.size(); ++i)
      if (c.component_map[i] == std::pair{base, sheet}) return static_cast<Eigen::Index>(i);
    throw KirbyError("cover has no lift on the requested sheet");
  };
  // The red arc enters B_0 from the red lift of gamma+. Where it leaves
  // decides which lift of gamma- carries the rest of the red sphere.
  const auto tangle = lift_sphere_tangles(s).first.tangle;
  const int red_exit = tangle.arc_end(0);
  const int red_minus_sheet = red_exit == 0 ? 0 : 1;
  const auto count = c.total.two_handle_count();
  IntVector red = IntVector::Zero(count);
  IntVector blue = IntVector::Zero(count);
  red(lift_index(plus, 0)) = 1;
  red(lift_index(minus, red_minus_sheet)) = 1;
  blue(lift_index(plus, 1)) = 1;
  blue(lift_index(minus, 1 - red_minus_sheet)) = 1;
  return {red, blue};
}

}  // namespace lbkit
