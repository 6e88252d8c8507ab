#include "scaffoldkit/json_io.hpp"

namespace scaffold {

namespace {

Json path_json(const Path3& p) { return Json::array({p.v[0], p.v[1], p.v[2], p.v[3]}); }

int require_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw JsonFormatError(std::string("missing or non-integer field \"") + key + "\"");
  return j[key].get<int>();
}

}  // namespace

Json to_json(const FacialSystem& fs, int n) {
  Json faces = Json::array();
  for (const auto& w : fs.walks) faces.push_back(w.vertices);
  return Json{{"n", n}, {"faces", std::move(faces)}};
}

FacialSystem facial_system_from_json(const Json& j, int* n_out) {
  if (!j.is_object()) throw JsonFormatError("facial system must be an object");
  const int n = require_int(j, "n");
  if (!j.contains("faces") || !j["faces"].is_array()) throw JsonFormatError("missing \"faces\" array");
  std::vector<FacialWalk> walks;
  for (const auto& face : j["faces"]) {
    if (!face.is_array() || face.size() < 3) throw JsonFormatError("face must list at least 3 vertices");
    std::vector<Vertex> vs;
    for (const auto& v : face) {
      if (!v.is_number_integer()) throw JsonFormatError("face vertex must be an integer");
      const int x = v.get<int>();
      if (x < 0 || x >= n) throw JsonFormatError("face vertex " + std::to_string(x) + " out of range");
      vs.push_back(x);
    }
    walks.push_back(FacialWalk::canonical(std::move(vs)));
  }
  if (n_out) *n_out = n;
  return FacialSystem::from_walks(std::move(walks));
}

Json to_json(const EmbeddingCensus& census) {
  Json systems = Json::array();
  for (const auto& fs : census.systems) systems.push_back(to_json(fs, census.graph.order()));
  Json hist = Json::object();
  for (const auto& [genus, count] : census.genus_histogram) hist[std::to_string(genus)] = count;
  return Json{{"graph6", emit_graph6(census.graph)},
              {"systems", std::move(systems)},
              {"genus_histogram", std::move(hist)},
              {"schemes_scanned", census.scheme_count_scanned}};
}

Json to_json(const ExtendedGraph& ext) {
  Json scaffold = Json::array();
  for (const auto& [pair, edge] : ext.scaffold) {
    Json e{{"u", pair.first}, {"w", pair.second}, {"multiplicity", edge.multiplicity}};
    Json witnesses = Json::array();
    for (const auto& p : edge.witnesses) witnesses.push_back(path_json(p));
    e["witnesses"] = std::move(witnesses);
    e["parallel"] = ext.graph.adjacent(pair.first, pair.second);
    scaffold.push_back(std::move(e));
  }
  return Json{{"graph6", emit_graph6(ext.graph)}, {"scaffold", std::move(scaffold)}};
}

ExtendedGraph extended_graph_from_json(const Json& j) {
  if (!j.is_object()) throw JsonFormatError("extended graph must be an object");
  if (!j.contains("graph6") || !j["graph6"].is_string()) throw JsonFormatError("missing \"graph6\" string");
  ExtendedGraph ext{parse_graph6(j["graph6"].get<std::string>()), {}};
  if (!j.contains("scaffold") || !j["scaffold"].is_array()) throw JsonFormatError("missing \"scaffold\" array");
  const int n = ext.graph.order();
  for (const auto& e : j["scaffold"]) {
    if (!e.is_object()) throw JsonFormatError("scaffold entry must be an object");
    const int u = require_int(e, "u"), w = require_int(e, "w");
    if (u < 0 || w < 0 || u >= n || w >= n) throw JsonFormatError("scaffold endpoint out of range");
    const VertexPair key(u, w);
    if (ext.scaffold.count(key))
      throw JsonFormatError("duplicate scaffold entry [" + std::to_string(u) + " " + std::to_string(w) + "]");
    ScaffoldEdge edge{key, e.contains("multiplicity") ? require_int(e, "multiplicity") : 1, {}};
    if (e.contains("witnesses")) {
      for (const auto& p : e["witnesses"]) {
        if (!p.is_array() || p.size() != 4) throw JsonFormatError("witness must list 4 vertices");
        edge.witnesses.emplace_back(p[0].get<int>(), p[1].get<int>(), p[2].get<int>(), p[3].get<int>());
      }
    }
    ext.scaffold.emplace(key, std::move(edge));
  }
  return ext;
}

Json to_json(const ReconstructionOutcome& outcome, int n) {
  Json rules = Json::object();
  for (const auto& [rule, count] : outcome.used_rules) rules[rule] = count;
  return Json{{"faces", to_json(outcome.system, n)["faces"]},
              {"branch_count", outcome.branch_count},
              {"special", to_string(outcome.special)},
              {"rules", std::move(rules)}};
}

Json to_json(const Contradiction& c) {
  Json paths = Json::array();
  for (const auto& p : c.paths) paths.push_back(path_json(p));
  Json causes = Json::array();
  for (const auto& d : c.causes)
    causes.push_back(Json{{"path", path_json(d.path)},
                          {"value", d.value == PathState::Facial ? "facial" : "non-facial"},
                          {"rule", rule_id(d.rule)}});
  return Json{{"rule", rule_id(c.rule)}, {"detail", c.detail}, {"paths", std::move(paths)}, {"causes", std::move(causes)}};
}

}  // namespace scaffold
