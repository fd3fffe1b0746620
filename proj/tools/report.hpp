#pragma once

// JSON views of library results. nlohmann::json objects keep keys sorted, so
// every dump is canonical.

#include <json.hpp>

#include "wsc/cliques.hpp"
#include "wsc/mutations.hpp"
#include "wsc/necklaces.hpp"
#include "wsc/octahedron.hpp"

namespace wsc::report {

using nlohmann::json;

json to_json(const Subset& s);
/// 0-based labels of an LR-encoded subset.
json lr_json(const Subset& s);
json to_json(const Collection& c);
json to_json(const std::vector<Subset>& sets);
json to_json(const PurityReport& r);
json to_json(const DecoratedPermutation& p);
json to_json(const GrassmannNecklace& nk);
json to_json(const SquareMove& m);
json to_json(const LatticeVec4& v);
json to_json(const P4Counts& c);

enum class Format { json, jsonl, csv };

Format parse_format(std::string_view text);

/// A document plus an optional list of rows for stream formats.
struct Report {
  json doc = json::object();
  std::optional<json> rows;
};

/// json: indented document. jsonl: one compact line per row, or the compact
/// document. csv: one line per row (elements space separated), or key,value
/// lines for the document.
std::string emit(const Report& r, Format format);

}  // namespace wsc::report
