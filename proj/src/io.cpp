#include "unimod/io.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace unimod {

using nlohmann::json;

Graph parse_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::unordered_map<std::string, VertexId> index;
  std::vector<Edge> edges;
  std::set<std::pair<VertexId, VertexId>> seen;
  auto vertex = [&](const std::string& label) {
    auto [it, fresh] = index.emplace(label, labels.size());
    if (fresh) labels.push_back(label);
    return it->second;
  };

  std::istringstream in{std::string(text)};
  std::string line;
  for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream words(line);
    std::vector<std::string> tok;
    for (std::string w; words >> w;) tok.push_back(w);
    if (tok.empty() || tok.front().front() == '#') continue;
    const std::string at = "line " + std::to_string(lineno) + ": ";
    if (tok.size() != 2) throw InputError(at + "expected two labels");
    if (tok[0] == tok[1]) throw InputError(at + "self-loop at '" + tok[0] + "'");
    const VertexId a = vertex(tok[0]);
    const VertexId b = vertex(tok[1]);
    if (!seen.emplace(std::min(a, b), std::max(a, b)).second) {
      throw InputError(at + "parallel edge '" + tok[0] + "'-'" + tok[1] + "'");
    }
    edges.push_back({a, b});
  }
  return Graph::from_indices(std::move(labels), std::move(edges));
}

namespace {

std::string label_of(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  throw InputError("vertex labels must be strings or integers");
}

}  // namespace

Graph parse_graph_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc["vertices"].is_array() ||
      !doc["edges"].is_array()) {
    throw InputError("graph JSON needs \"vertices\" and \"edges\" arrays");
  }
  std::vector<std::string> labels;
  for (const auto& v : doc["vertices"]) labels.push_back(label_of(v));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
    const auto& e = doc["edges"][i];
    if (!e.is_array() || e.size() != 2) {
      throw InputError("edge " + std::to_string(i) + ": expected a two-element array");
    }
    pairs.emplace_back(label_of(e[0]), label_of(e[1]));
  }
  try {
    return Graph::build(std::move(labels), pairs);
  } catch (const GraphError& e) {
    throw InputError(e.what());
  }
}

Graph parse_graph(std::string_view text) {
  auto it = std::find_if(text.begin(), text.end(), [](unsigned char c) { return !std::isspace(c); });
  if (it != text.end() && *it == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

json graph_to_json(const Graph& g) {
  json doc;
  doc["vertices"] = json::array();
  for (const auto& l : g.labels()) doc["vertices"].push_back(l);
  doc["edges"] = json::array();
  for (const Edge& e : g.edges()) doc["edges"].push_back({g.label(e.u), g.label(e.v)});
  return doc;
}

json script_to_json(const ConstructionScript& script) {
  json doc;
  doc["base"]["kind"] = script.base.kind == ConstructionBase::Kind::Flower ? "flower" : "even_cycle";
  doc["base"]["lengths"] = script.base.lengths;
  doc["ears"] = json::array();
  for (const Ear& ear : script.ears) {
    doc["ears"].push_back({{"v1", ear.v1}, {"v2", ear.v2}, {"length", ear.length}, {"case", ear_case_name(ear.tag)}});
  }
  return doc;
}

ConstructionScript script_from_json(const json& doc) {
  ConstructionScript s;
  try {
    const std::string kind = doc.at("base").at("kind").get<std::string>();
    if (kind == "flower") {
      s.base.kind = ConstructionBase::Kind::Flower;
    } else if (kind == "even_cycle") {
      s.base.kind = ConstructionBase::Kind::EvenCycle;
    } else {
      throw InputError("unknown base kind '" + kind + "'");
    }
    s.base.lengths = doc.at("base").at("lengths").get<std::vector<std::size_t>>();
    for (const auto& e : doc.at("ears")) {
      Ear ear;
      ear.v1 = label_of(e.at("v1"));
      ear.v2 = label_of(e.at("v2"));
      ear.length = e.at("length").get<std::size_t>();
      const std::string tag = e.at("case").get<std::string>();
      auto c = parse_ear_case(tag);
      if (!c) throw InputError("unknown ear case '" + tag + "'");
      ear.tag = *c;
      s.ears.push_back(std::move(ear));
    }
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed construction script: ") + e.what());
  }
  return s;
}

namespace {

json cycle_json(const Graph& g, const CycleWitness& c) {
  json out = json::array();
  for (VertexId v : c.cycle_vertices()) out.push_back(g.label(v));
  return out;
}

json certificate_body(const Graph& g, const Certificate& cert) {
  json doc;
  doc["verdict"] = verdict_name(cert.verdict);
  doc["s"] = cert.s;
  if (cert.link_vertex) doc["linkVertex"] = g.label(*cert.link_vertex);
  if (cert.soc_block) doc["socBlock"] = *cert.soc_block;
  if (cert.component) doc["component"] = *cert.component;
  if (cert.witness) {
    doc["witnessCycles"] = {cycle_json(g, cert.witness->first), cycle_json(g, cert.witness->second)};
    json path = json::array();
    for (VertexId v : cert.witness->path.vertices()) path.push_back(g.label(v));
    doc["witnessPath"] = path;
  }
  if (cert.witness_binomial) {
    doc["witnessBinomial"] = to_string(*cert.witness_binomial);
    doc["witnessSquareFree"] = is_square_free(*cert.witness_binomial);
  }
  if (cert.indeterminate_reason) doc["indeterminateReason"] = *cert.indeterminate_reason;
  return doc;
}

}  // namespace

json certificate_to_json(const Graph& g, const Certificate& cert) {
  json doc = certificate_body(g, cert);
  doc["components"] = json::array();
  for (const auto& c : cert.components) doc["components"].push_back(certificate_body(g, c));
  return doc;
}

}  // namespace unimod
