#include "lbkit/render.hpp"

#include <sstream>
#include <vector>

namespace lbkit {

RenderFormat render_format_from_string(std::string_view name) {
  if (name == "svg") return RenderFormat::svg;
  if (name == "text") return RenderFormat::text;
  throw UnsupportedFormat("cannot render as '" + std::string(name) + "'");
}

namespace {

std::vector<std::string> braid_rows(const StrandDiagram& d) {
  std::vector<std::string> rows(static_cast<std::size_t>(d.strands()));
  for (const auto& l : d.word().letters()) {
    for (int k = 0; k < d.strands(); ++k) {
      char glyph = '-';
      if (k == l.position - 1) glyph = 'X';
      if (k == l.position) glyph = l.sign > 0 ? '+' : '-';
      rows[static_cast<std::size_t>(k)] += glyph;
    }
  }
  return rows;
}

std::string text_of(const StrandDiagram& d, const AnnularLink* framed) {
  auto rows = braid_rows(d);
  std::vector<bool> labeled(d.component_count(), false);
  std::ostringstream out;
  for (int k = 0; k < d.strands(); ++k) {
    const auto c = d.owner_of_top(k);
    out << (rows[static_cast<std::size_t>(k)].empty() ? "|" : rows[static_cast<std::size_t>(k)]) << ' '
        << d.component(c).id;
    if (framed && !labeled[c]) out << " [" << framed->framing(c) << "]";
    labeled[c] = true;
    out << '\n';
  }
  return out.str();
}

constexpr int kColumn = 40;
constexpr int kRow = 30;
constexpr int kMargin = 20;

std::string svg_header(int width, int height) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<style>.red{stroke:#c0392b}.blue{stroke:#2e6fd0}.purple{stroke:#7d3c98}.uncolored{stroke:#222}"
         "path,line,ellipse,circle{fill:none;stroke-width:2}text{font:12px sans-serif}</style>\n";
  return out.str();
}

std::string svg_of(const StrandDiagram& d, const AnnularLink* framed) {
  const int letters = static_cast<int>(d.word().size());
  const int width = 2 * kMargin + kColumn * (letters + 1) + 80;
  const int height = 2 * kMargin + kRow * std::max(d.strands(), 1);
  std::ostringstream out;
  out << svg_header(width, height);
  // Follow each position through the word: straight segments, or a pair of
  // diagonals at a crossing with a gap in the under-strand.
  std::vector<int> at(static_cast<std::size_t>(d.strands()));
  for (int k = 0; k < d.strands(); ++k) at[static_cast<std::size_t>(k)] = k;
  auto y = [](int k) { return kMargin + kRow * k + kRow / 2; };
  for (int i = 0; i <= letters; ++i) {
    const int x0 = kMargin + kColumn * i;
    const int x1 = x0 + kColumn;
    const Letter* l = i < letters ? &d.word().letters()[static_cast<std::size_t>(i)] : nullptr;
    for (int k = 0; k < d.strands(); ++k) {
      const auto cls = to_string(d.component(d.owner_of_top(at[static_cast<std::size_t>(k)])).color);
      int to = k;
      if (l && k == l->position - 1) to = k + 1;
      if (l && k == l->position) to = k - 1;
      const bool under = l && to != k && ((l->sign > 0) == (to > k));
      out << "<line class=\"" << cls << "\" x1=\"" << x0 << "\" y1=\"" << y(k) << "\" x2=\"" << x1 << "\" y2=\"" << y(to)
          << "\"" << (under ? " stroke-dasharray=\"18 8 18\"" : "") << "/>\n";
    }
    if (l) std::swap(at[static_cast<std::size_t>(l->position - 1)], at[static_cast<std::size_t>(l->position)]);
  }
  std::vector<bool> labeled(d.component_count(), false);
  for (int k = 0; k < d.strands(); ++k) {
    const auto c = d.owner_of_top(k);
    if (labeled[c]) continue;
    labeled[c] = true;
    out << "<text x=\"" << kMargin + kColumn * (letters + 1) + 6 << "\" y=\"" << y(k) + 4 << "\">"
        << d.component(c).id;
    if (framed) out << " (" << framed->framing(c) << ")";
    out << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render(const StrandDiagram& d, RenderFormat format) {
  return format == RenderFormat::text ? text_of(d, nullptr) : svg_of(d, nullptr);
}

std::string render(const AnnularLink& d, RenderFormat format) {
  return format == RenderFormat::text ? text_of(d, &d) : svg_of(d, &d);
}

std::string render(const KirbyDiagram& d, RenderFormat format) {
  const auto handles = d.two_handle_count();
  auto color_of = [&](Eigen::Index h) {
    const auto& th = d.two_handles()[static_cast<std::size_t>(h)];
    if (th.curve && d.attaching()) return d.attaching()->component(d.attaching()->index_of(*th.curve)).color;
    return Color::uncolored;
  };
  if (format == RenderFormat::text) {
    std::ostringstream out;
    for (const auto& u : d.dotted()) out << "(.) " << u << '\n';
    for (Eigen::Index h = 0; h < handles; ++h) {
      out << "( ) " << d.two_handles()[static_cast<std::size_t>(h)].id << " [" << d.framing(h) << "]";
      for (Eigen::Index u = 0; u < d.dotted_count(); ++u) out << " winds " << d.winding(h)(u) << " around " << d.dotted()[static_cast<std::size_t>(u)];
      out << '\n';
    }
    if (d.three_handles() || d.four_handles())
      out << d.three_handles() << " 3-handles, " << d.four_handles() << " 4-handles\n";
    return out.str();
  }
  const auto dotted = d.dotted_count();
  if (dotted == 0 && handles == 0) return svg_header(2 * kMargin, 2 * kMargin) + "</svg>\n";
  const int width = 2 * kMargin + 140 * static_cast<int>(std::max<Eigen::Index>(handles, 1));
  const int height = 2 * kMargin + 200;
  std::ostringstream out;
  out << svg_header(width, height);
  const int cy = kMargin + 100;
  for (Eigen::Index u = 0; u < dotted; ++u) {
    const int r = 90 + 10 * static_cast<int>(u);
    out << "<ellipse class=\"dotted uncolored\" cx=\"" << width / 2 << "\" cy=\"" << cy << "\" rx=\"" << width / 2 - 10
        << "\" ry=\"" << r << "\" stroke-dasharray=\"2 6\"/>\n";
  }
  for (Eigen::Index h = 0; h < handles; ++h) {
    const int cx = kMargin + 70 + 140 * static_cast<int>(h);
    out << "<ellipse class=\"" << to_string(color_of(h)) << "\" cx=\"" << cx << "\" cy=\"" << cy
        << "\" rx=\"50\" ry=\"30\"/>\n"
        << "<text x=\"" << cx - 40 << "\" y=\"" << cy - 40 << "\">" << d.two_handles()[static_cast<std::size_t>(h)].id
        << " (" << d.framing(h) << ")</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace lbkit
