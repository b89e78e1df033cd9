#pragma once

// JSON records emitted by the command-line tool, one object per line, and
// their inverses.

#include <json.hpp>

#include <cstddef>
#include <vector>

#include "lieomega/gsb.hpp"

namespace lieomega::report {

using Json = nlohmann::ordered_json;

/// [{"coefficient": "3/2*l", "tree": "P((x2 x1))"}, ...] in descending order.
Json poly_to_json(const LiePoly& p);
LiePoly poly_from_json(const Json& j, const Alphabet& alphabet);

Json assoc_to_json(const AssocPoly& p);

Json ambiguity_to_json(const Ambiguity& amb);
Ambiguity ambiguity_from_json(const Json& j, const Alphabet& alphabet);

/// "composition" records, for both the Lie and the associative check.
Json composition_to_json(const CompositionReport& r);
CompositionReport composition_from_json(const Json& j, const Alphabet& alphabet);
Json composition_to_json(const AssocCompositionReport& r);

Json rule_to_json(const Rule& r);
Json basis_to_json(std::size_t degree, const std::vector<OmegaWord>& words, bool count_only);
Json dimension_to_json(std::size_t degree, std::size_t dim);

}  // namespace lieomega::report
