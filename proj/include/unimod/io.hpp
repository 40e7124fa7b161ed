#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "unimod/construct.hpp"
#include "unimod/graph.hpp"
#include "unimod/soc.hpp"

namespace unimod {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One "u v" pair per line; '#' lines and blank lines are skipped. Vertices
/// are numbered in order of first appearance.
Graph parse_edge_list(std::string_view text);

/// {"vertices": [...], "edges": [[u, v], ...]}
Graph parse_graph_json(std::string_view text);

/// JSON when the first non-blank character is '{', edge list otherwise.
Graph parse_graph(std::string_view text);

nlohmann::json graph_to_json(const Graph& g);

nlohmann::json script_to_json(const ConstructionScript& script);
ConstructionScript script_from_json(const nlohmann::json& doc);

/// Certificate with vertex labels and binomials rendered as text.
nlohmann::json certificate_to_json(const Graph& g, const Certificate& cert);

}  // namespace unimod
