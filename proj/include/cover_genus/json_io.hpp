#ifndef COVER_GENUS_JSON_IO_HPP
#define COVER_GENUS_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "cover_genus/bounds.hpp"
#include "cover_genus/covering.hpp"
#include "cover_genus/fiber_product.hpp"
#include "cover_genus/harness.hpp"
#include "cover_genus/normalization.hpp"

namespace cover_genus {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

/// [[1,2,3],[4,5]]: 1-based cycles, each from its least point, ordered by
/// least point, fixed points omitted.
Json perm_to_json(const Permutation& p);
Permutation perm_from_json(const Json& j, std::size_t degree);

/// {"degree", "base_genus", "branch_points": [{"label", "perm"}],
///  "handles": [{"a", "b"}]}. Identity branch entries are written as [] and
/// kept on parsing.
Json to_json(const HurwitzSystem& h);
HurwitzSystem hurwitz_from_json(const Json& j);

/// Two-space indented JSON followed by a newline.
std::string serialize(const HurwitzSystem& h);
/// Throws Parse on malformed input; does not validate the relation.
HurwitzSystem parse_hurwitz(const std::string& text);

Json to_json(const CycleType& t);
Json to_json(const Orbifold& o);
Json to_json(const FiberProductDecomposition& d, std::int64_t abhyankar_total);
Json to_json(const NormalizationData& n, bool galois);
Json to_json(const Check& c);
Json to_json(const BoundReport& r);
Json to_json(const FuzzSummary& s);

std::string dump(const Json& j);

}  // namespace cover_genus

#endif  // COVER_GENUS_JSON_IO_HPP
