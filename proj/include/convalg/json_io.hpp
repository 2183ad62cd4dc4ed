#ifndef CONVALG_JSON_IO_HPP
#define CONVALG_JSON_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "convalg/character.hpp"
#include "convalg/cone.hpp"
#include "convalg/finite_support.hpp"
#include "convalg/grid.hpp"
#include "convalg/monoid.hpp"
#include "convalg/summable.hpp"

namespace convalg::io {

using json = nlohmann::ordered_json;

/// Parses a JSON document; malformed text raises ParseError.
json parse(std::string_view text);

/// Deterministic compact rendering: object keys in stored order, floats
/// with 17 significant digits, so serialize(parse(x)) is idempotent and
/// identical inputs yield byte-identical output.
std::string canonical_dump(const json& doc);

json to_json(const MonoidDescriptor& m);
MonoidDescriptor monoid_from_json(const json& j);

json to_json(const Element& a);
Element element_from_json(const json& j);

json to_json(const FiniteSupportFunction& f);
FiniteSupportFunction finite_support_from_json(const json& j);

json to_json(const SummableFunction& f);
SummableFunction summable_from_json(const json& j);
/// True when the document carries a tail bound, i.e. parses as summable.
bool is_summable_doc(const json& j);

json to_json(const Character& chi);
Character character_from_json(const json& j);

json to_json(const ConvexCone& cone);
ConvexCone cone_from_json(const json& j);

json to_json(const GridFunction& g);
GridFunction grid_from_json(const json& j);

json complex_to_json(const Complex& z);

}  // namespace convalg::io

#endif  // CONVALG_JSON_IO_HPP
