#pragma once

#include <string>

#include <json.hpp>

#include "chromastar/forest.hpp"
#include "chromastar/partition.hpp"
#include "chromastar/starpoly.hpp"

namespace chromastar {

/// Tree text format: "n; u-v, u-v, ..." with 0-based labels, or the
/// caterpillar shorthand "C[a1,a2,...]".
Forest parse_forest(const std::string& text);
std::string format_forest(const Forest& f);

/// Partition syntax "[9,7,6]" with exponent shorthand "[3,2^2,1^3]" accepted
/// on input and expanded on parse.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& p); // plain, no exponents

/// StarPoly text: one term per line in increasing lex order, "-2 * st[6,1]".
StarPoly parse_starpoly_text(const std::string& text);
std::string format_starpoly_text(const StarPoly& f);

nlohmann::json starpoly_to_json(const StarPoly& f);
StarPoly starpoly_from_json(const nlohmann::json& j);

std::string forest_to_dot(const Forest& f);

} // namespace chromastar
