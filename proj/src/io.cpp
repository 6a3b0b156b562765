#include "lbkit/io.hpp"

#include <set>

namespace lbkit {

namespace {

void require_fields(const json& j, std::initializer_list<const char*> required,
                    std::initializer_list<const char*> optional = {}) {
  if (!j.is_object()) throw FormatError("expected an object");
  std::set<std::string> known;
  for (const char* k : required) {
    if (!j.contains(k)) throw FormatError(std::string("missing field '") + k + "'");
    known.insert(k);
  }
  for (const char* k : optional) known.insert(k);
  for (const auto& [key, _] : j.items())
    if (!known.count(key)) throw FormatError("unknown field '" + key + "'");
}

template <class T>
T get(const json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw FormatError(std::string("field '") + key + "': " + e.what());
  }
}

json letters_json(const BraidWord& w) {
  json out = json::array();
  for (const auto& l : w.letters()) out.push_back({l.position, l.sign});
  return out;
}

BraidWord word_from(int strands, const json& letters) {
  if (!letters.is_array()) throw FormatError("letters must be an array");
  std::vector<Letter> out;
  for (const auto& l : letters) {
    if (!l.is_array() || l.size() != 2 || !l[0].is_number_integer() || !l[1].is_number_integer())
      throw FormatError("a letter is a [position, sign] pair");
    out.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  return BraidWord(strands, std::move(out));
}

json info_json(const ComponentInfo& c) {
  return {{"id", c.id}, {"color", std::string(to_string(c.color))}, {"orientation", c.orientation}};
}

ComponentInfo info_from(const json& j) {
  require_fields(j, {"id", "color", "orientation"});
  return {get<std::string>(j, "id"), color_from_string(get<std::string>(j, "color")), get<int>(j, "orientation")};
}

json matrix_json(const IntMatrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

IntMatrix matrix_from(const json& j, Eigen::Index n) {
  if (!j.is_array() || static_cast<Eigen::Index>(j.size()) != n) throw FormatError("linking must be square over all handles");
  IntMatrix m(n, n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != n) throw FormatError("linking must be square");
    for (Eigen::Index c = 0; c < n; ++c) m(r, c) = row[static_cast<std::size_t>(c)].get<std::int64_t>();
  }
  return m;
}

}  // namespace

json to_json(const BraidWord& w) { return {{"strands", w.strands()}, {"letters", letters_json(w)}}; }

json to_json(const AnnularLink& link) {
  json comps = json::array();
  for (std::size_t c = 0; c < link.component_count(); ++c) {
    const auto& info = link.component(c);
    json o{{"id", info.id},
           {"color", std::string(to_string(info.color))},
           {"framing", link.framing(c)},
           {"orientation", info.orientation}};
    if (link.kinks(c) != 0) o["kinks"] = link.kinks(c);
    comps.push_back(std::move(o));
  }
  return {{"strands", link.strands()}, {"letters", letters_json(link.word())}, {"components", comps}};
}

AnnularLink annular_link_from_json(const json& j) {
  try {
    require_fields(j, {"strands", "letters", "components"});
    const auto word = word_from(get<int>(j, "strands"), j.at("letters"));
    std::vector<AnnularComponent> comps;
    std::vector<int> kinks;
    for (const auto& c : j.at("components")) {
      require_fields(c, {"id", "color", "framing", "orientation"}, {"kinks"});
      comps.push_back({get<std::string>(c, "id"), color_from_string(get<std::string>(c, "color")),
                       get<int>(c, "framing"), get<int>(c, "orientation")});
      kinks.push_back(c.contains("kinks") ? get<int>(c, "kinks") : 0);
    }
    return with_kinks(AnnularLink(word, std::move(comps)), std::move(kinks));
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json to_json(const ColoredTangle& t) {
  json arcs = json::array();
  json closed = json::array();
  for (std::size_t c = 0; c < t.component_count(); ++c) (t.is_arc(c) ? arcs : closed).push_back(info_json(t.component(c)));
  json endpoints = json::array();
  for (const auto& e : t.endpoints())
    endpoints.push_back({{"slot", e.slot},
                         {"top", e.top},
                         {"color", std::string(to_string(e.color))},
                         {"orientation", e.orientation}});
  return {{"strands", t.strands()},
          {"arcs", arcs},
          {"closed", closed},
          {"crossings", letters_json(t.word())},
          {"endpoints", endpoints}};
}

ColoredTangle tangle_from_json(const json& j) {
  try {
    require_fields(j, {"strands", "arcs", "closed", "crossings"}, {"endpoints"});
    std::vector<ComponentInfo> comps;
    for (const auto& a : j.at("arcs")) comps.push_back(info_from(a));
    const int open = static_cast<int>(comps.size());
    for (const auto& c : j.at("closed")) comps.push_back(info_from(c));
    ColoredTangle t(word_from(get<int>(j, "strands"), j.at("crossings")), open, std::move(comps));
    // Endpoints are derived data; when present they must agree.
    if (j.contains("endpoints") && to_json(t).at("endpoints") != j.at("endpoints"))
      throw FormatError("endpoints disagree with the arcs and crossings");
    return t;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json to_json(const BicoloredLink& link) {
  json comps = json::array();
  for (const auto& c : link.components()) comps.push_back(info_json(c));
  return {{"strands", link.strands()}, {"letters", letters_json(link.word())}, {"components", comps}};
}

BicoloredLink bicolored_link_from_json(const json& j) {
  try {
    require_fields(j, {"strands", "letters", "components"});
    std::vector<ComponentInfo> comps;
    for (const auto& c : j.at("components")) comps.push_back(info_from(c));
    return BicoloredLink(word_from(get<int>(j, "strands"), j.at("letters")), std::move(comps));
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json to_json(const KirbyDiagram& d) {
  json handles = json::array();
  for (Eigen::Index h = 0; h < d.two_handle_count(); ++h) {
    const auto& th = d.two_handles()[static_cast<std::size_t>(h)];
    const IntVector w = d.winding(h);
    json o{{"id", th.id}, {"framing", d.framing(h)}, {"winding", std::vector<std::int64_t>(w.data(), w.data() + w.size())}};
    if (th.curve) o["curve"] = *th.curve;
    handles.push_back(std::move(o));
  }
  json out{{"dotted", d.dotted()},
           {"two_handles", handles},
           {"linking", matrix_json(d.linking())},
           {"h3", d.three_handles()},
           {"h4", d.four_handles()}};
  if (d.attaching()) out["attaching"] = to_json(*d.attaching());
  return out;
}

KirbyDiagram kirby_from_json(const json& j) {
  try {
    require_fields(j, {"dotted", "two_handles", "linking", "h3", "h4"}, {"attaching"});
    const auto dotted = get<std::vector<std::string>>(j, "dotted");
    std::vector<TwoHandle> handles;
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> declared;
    for (const auto& h : j.at("two_handles")) {
      require_fields(h, {"id", "framing", "winding"}, {"curve"});
      TwoHandle th{get<std::string>(h, "id"), std::nullopt};
      if (h.contains("curve")) th.curve = get<std::string>(h, "curve");
      handles.push_back(std::move(th));
      declared.emplace_back(get<std::int64_t>(h, "framing"), get<std::vector<std::int64_t>>(h, "winding"));
    }
    const auto n = static_cast<Eigen::Index>(dotted.size() + handles.size());
    IntMatrix lk = matrix_from(j.at("linking"), n);
    std::optional<AnnularLink> attaching;
    if (j.contains("attaching")) attaching = annular_link_from_json(j.at("attaching"));
    KirbyDiagram d(dotted, std::move(handles), std::move(lk), get<int>(j, "h3"), get<int>(j, "h4"),
                   std::move(attaching));
    // framing and winding repeat the matrix; they must agree with it.
    for (Eigen::Index h = 0; h < d.two_handle_count(); ++h) {
      const auto& [framing, winding] = declared[static_cast<std::size_t>(h)];
      const IntVector w = d.winding(h);
      if (framing != d.framing(h) || winding != std::vector<std::int64_t>(w.data(), w.data() + w.size()))
        throw FormatError("2-handle '" + d.two_handles()[static_cast<std::size_t>(h)].id +
                          "' disagrees with the linking matrix");
    }
    return d;
  } catch (const json::exception& e) {
    throw FormatError(e.what());
  }
}

json to_json(const AbelianGroup& g) { return {{"free_rank", g.free_rank()}, {"torsion", g.torsion()}}; }

AbelianGroup group_from_json(const json& j) {
  require_fields(j, {"free_rank", "torsion"});
  const auto g = AbelianGroup::from_factors(get<int>(j, "free_rank"), get<std::vector<std::int64_t>>(j, "torsion"));
  if (g.torsion() != get<std::vector<std::int64_t>>(j, "torsion")) throw FormatError("torsion is not in canonical form");
  return g;
}

json to_json(const CoverData& c) {
  json map = json::array();
  for (std::size_t i = 0; i < c.component_map.size(); ++i) {
    const auto& [base, sheet] = c.component_map[i];
    map.push_back({{"lift", c.total.two_handles()[i].id},
                   {"base", c.base.two_handles()[static_cast<std::size_t>(base)].id},
                   {"sheet", sheet_name(sheet, c.degree)}});
  }
  json deck = json::array();
  for (auto d : c.deck) deck.push_back(c.total.two_handles()[static_cast<std::size_t>(d)].id);
  return {{"total", to_json(c.total)}, {"map", map}, {"deck", deck}};
}

json to_json(const ObstructionReport& r) {
  return {{"parity", r.parity}, {"lk_L", r.lk_link}, {"claim1", r.claim1}, {"claim2", r.claim2}};
}

json to_json(const Relation& r) {
  return {{"equivalent", r.equivalent},
          {"homotopic", r.homotopic},
          {"topologically_concordant", r.concordant},
          {"smoothly_isotopic", r.isotopic},
          {"evidence",
           {{"equivalent", r.equivalent_evidence},
            {"homotopic", r.homotopic_evidence},
            {"topologically_concordant", r.concordant_evidence},
            {"smoothly_isotopic", r.isotopic_evidence}}}};
}

json to_json(const CrossedClass& c) {
  json out = json::array();
  for (const auto& [element, parity] : c.parity) out.push_back({{"element", element}, {"parity", parity}});
  return out;
}

}  // namespace lbkit
