#pragma once

#include <json.hpp>

#include <stdexcept>

#include "lbkit/covers.hpp"
#include "lbkit/diagrams.hpp"
#include "lbkit/homology.hpp"
#include "lbkit/homotopy.hpp"
#include "lbkit/kirby.hpp"
#include "lbkit/obstruction.hpp"

namespace lbkit {

using json = nlohmann::ordered_json;

/// Malformed or unexpected interchange data.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(const BraidWord& w);
json to_json(const AnnularLink& link);
json to_json(const ColoredTangle& t);
json to_json(const BicoloredLink& link);
json to_json(const KirbyDiagram& d);
json to_json(const AbelianGroup& g);
json to_json(const CoverData& c);
json to_json(const ObstructionReport& r);
json to_json(const Relation& r);
json to_json(const CrossedClass& c);

AnnularLink annular_link_from_json(const json& j);
ColoredTangle tangle_from_json(const json& j);
BicoloredLink bicolored_link_from_json(const json& j);
KirbyDiagram kirby_from_json(const json& j);
AbelianGroup group_from_json(const json& j);

}  // namespace lbkit
