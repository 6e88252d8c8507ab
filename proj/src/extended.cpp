#include "scaffoldkit/extended.hpp"

#include <algorithm>

namespace scaffold {

std::map<VertexPair, int> ExtendedGraph::multiplicities() const {
  std::map<VertexPair, int> out;
  for (const auto& [pair, edge] : scaffold) out.emplace(pair, edge.multiplicity);
  return out;
}

int ExtendedGraph::count_with_multiplicity(int m) const {
  return static_cast<int>(
      std::count_if(scaffold.begin(), scaffold.end(), [m](const auto& kv) { return kv.second.multiplicity == m; }));
}

std::vector<Path3> facial_three_paths(const FacialSystem& fs) {
  std::vector<Path3> out;
  for (const auto& w : fs.walks) {
    const auto& v = w.vertices;
    const std::size_t len = v.size();
    for (std::size_t i = 0; i < len; ++i) {
      const Vertex t0 = v[i], t1 = v[(i + 1) % len], t2 = v[(i + 2) % len], t3 = v[(i + 3) % len];
      if (t0 == t3 || t1 == t3 || t0 == t2) continue;
      out.emplace_back(t0, t1, t2, t3);
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

ExtendedGraph build_extended(const CubicGraph& g, const FacialSystem& fs) {
  ExtendedGraph ext{g, {}};
  for (const auto& p : facial_three_paths(fs)) {
    const auto key = p.endpoints();
    auto [it, inserted] = ext.scaffold.try_emplace(key, ScaffoldEdge{key, 0, {}});
    auto& edge = it->second;
    for (const auto& other : edge.witnesses)
      if (!other.internally_disjoint(p))
        throw CorruptSystemError("two facial 3-paths between " + std::to_string(key.first) + " and " +
                                 std::to_string(key.second) + " share an internal vertex");
    edge.witnesses.push_back(p);
    edge.multiplicity = static_cast<int>(edge.witnesses.size());
    if (edge.multiplicity > 2)
      throw CorruptSystemError("scaffold edge [" + std::to_string(key.first) + " " + std::to_string(key.second) +
                               "] has more than two facial witnesses");
  }
  return ext;
}

bool extended_equal(const ExtendedGraph& a, const ExtendedGraph& b) {
  if (!a.graph.same_labeled_graph(b.graph)) throw UsageError("extended graphs over different underlying graphs");
  if (a.scaffold.size() != b.scaffold.size()) return false;
  return std::equal(a.scaffold.begin(), a.scaffold.end(), b.scaffold.begin(), [](const auto& x, const auto& y) {
    return x.first == y.first && x.second.multiplicity == y.second.multiplicity;
  });
}

ExtendedGraph relabel_extended(const ExtendedGraph& ext, const VertexPermutation& p) {
  std::vector<VertexPair> edges;
  for (const auto& e : ext.graph.edges()) edges.emplace_back(p(e.first), p(e.second));
  ExtendedGraph out{CubicGraph(ext.graph.order(), edges), {}};
  for (const auto& [pair, edge] : ext.scaffold) {
    const VertexPair key(p(pair.first), p(pair.second));
    ScaffoldEdge mapped{key, edge.multiplicity, {}};
    for (const auto& w : edge.witnesses) mapped.witnesses.emplace_back(p(w.v[0]), p(w.v[1]), p(w.v[2]), p(w.v[3]));
    std::sort(mapped.witnesses.begin(), mapped.witnesses.end());
    out.scaffold.emplace(key, std::move(mapped));
  }
  return out;
}

std::string canonical_extended(const std::vector<VertexPermutation>& aut, const ExtendedGraph& ext) {
  std::string best;
  bool first = true;
  for (const auto& p : aut) {
    std::vector<std::pair<VertexPair, int>> items;
    for (const auto& [pair, edge] : ext.scaffold)
      items.emplace_back(VertexPair(p(pair.first), p(pair.second)), edge.multiplicity);
    std::sort(items.begin(), items.end());
    std::string key;
    for (const auto& [pair, m] : items)
      key += std::to_string(pair.first) + "-" + std::to_string(pair.second) + "x" + std::to_string(m) + ";";
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  return best;
}

}  // namespace scaffold
