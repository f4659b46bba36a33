#pragma once

// Text and JSON encodings.
//
// Graph text: first line "d n", then one edge per line as d space-separated
// 1-based labels. '#' starts a comment running to the end of the line.
//
// Process JSON:
//   {"d": 2, "n": 3, "p": [2, 2], "mode": "undirected",
//    "graph": "<graph text>",            // optional
//    "steps": [{"edge": [2, 2], "classes": [[1, 2], [1, 2]], "orientation": [1, 2]}, ...]}
//
// Family JSON:
//   {"parts": [3, 3], "caps_a": [1, 2], "caps_b": [1, 1],
//    "pairs": [{"A": [[1, 1], [2, 1]], "B": [[1, 3], [2, 2]]}, ...]}
// where each element is [part, label].
//
// Certificate JSON: kind, mode, h_free, d, n, p, conclusive, minimum (null
// when inconclusive), lower_bound, upper_bound (null when unknown), checked,
// and witness (graph text, or null).
//
// Every writer emits keys in sorted order and numbers as plain integers.

#include <istream>
#include <optional>
#include <string>

#include <json.hpp>

#include "wsat/graph.hpp"
#include "wsat/pattern.hpp"
#include "wsat/process.hpp"
#include "wsat/search.hpp"
#include "wsat/two_families.hpp"

namespace wsat::io {

using Json = nlohmann::json;

std::string write_graph(const DPartiteGraph& g);
DPartiteGraph read_graph(std::istream& in);
DPartiteGraph parse_graph(const std::string& text);

Json process_to_json(const SaturationProcess& proc, const Pattern& pattern,
                     const std::optional<DPartiteGraph>& base = std::nullopt);
SaturationProcess process_from_json(const Json& j);
// Pattern recorded in a process document.
Pattern pattern_from_json(const Json& j);

Json families_to_json(const FamilyPair& fp);
FamilyPair families_from_json(const Json& j);

Json certificate_to_json(const SearchCertificate& cert);
SearchCertificate certificate_from_json(const Json& j);

}  // namespace wsat::io
