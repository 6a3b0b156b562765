#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "lbkit/diagrams.hpp"
#include "lbkit/kirby.hpp"

namespace lbkit {

class UnsupportedFormat : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RenderFormat { svg, text };

RenderFormat render_format_from_string(std::string_view name);

// Text: one row per strand position, one column per letter. A crossing
// puts 'X' on its upper row and its sign on the row below; component ids
// (and framings for annular links) follow each row.
// SVG: braid letters left to right, components as stroke classes named
// after their colors. Kirby diagrams draw the dotted circle dashed and one
// labeled curve per 2-handle.
std::string render(const StrandDiagram& d, RenderFormat format);
std::string render(const AnnularLink& d, RenderFormat format);
std::string render(const KirbyDiagram& d, RenderFormat format);

}  // namespace lbkit
