#include "scaffoldkit/embedding.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "face_tracer.hpp"

namespace scaffold {

bool EmbeddingScheme::valid_for(const CubicGraph& g) const {
  if (static_cast<int>(rotation.size()) != g.order() || static_cast<int>(signature.size()) != g.size()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    auto rot = rotation[static_cast<std::size_t>(v)];
    std::sort(rot.begin(), rot.end());
    const auto nb = g.neighbors(v);
    if (nb.size() != 3 || !std::equal(rot.begin(), rot.end(), nb.begin())) return false;
  }
  return std::all_of(signature.begin(), signature.end(), [](std::int8_t s) { return s == 1 || s == -1; });
}

FacialWalk FacialWalk::canonical(std::vector<Vertex> cyclic) {
  const std::size_t len = cyclic.size();
  FacialWalk best{cyclic};
  if (len == 0) return best;
  std::vector<Vertex> candidate(len);
  for (int dir = 0; dir < 2; ++dir) {
    for (std::size_t start = 0; start < len; ++start) {
      for (std::size_t k = 0; k < len; ++k) {
        const std::size_t idx = dir == 0 ? (start + k) % len : (start + len - k) % len;
        candidate[k] = cyclic[idx];
      }
      if (candidate < best.vertices) best.vertices = candidate;
    }
  }
  return best;
}

bool FacialWalk::is_cycle() const {
  auto sorted = vertices;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

std::vector<VertexPair> FacialWalk::edge_list() const {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) out.emplace_back(vertices[i], vertices[(i + 1) % vertices.size()]);
  return out;
}

FacialSystem FacialSystem::from_walks(std::vector<FacialWalk> walks) {
  for (auto& w : walks) w = FacialWalk::canonical(std::move(w.vertices));
  std::sort(walks.begin(), walks.end());
  return FacialSystem{std::move(walks)};
}

FacialSystem FacialSystem::relabeled(const VertexPermutation& p) const {
  std::vector<FacialWalk> out;
  out.reserve(walks.size());
  for (const auto& w : walks) {
    std::vector<Vertex> mapped;
    mapped.reserve(w.vertices.size());
    for (Vertex v : w.vertices) mapped.push_back(p(v));
    out.push_back(FacialWalk{std::move(mapped)});
  }
  return from_walks(std::move(out));
}

std::string FacialSystem::serialize() const {
  std::string out;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    if (i) out.push_back(';');
    for (std::size_t k = 0; k < walks[i].vertices.size(); ++k) {
      if (k) out.push_back(',');
      out += std::to_string(walks[i].vertices[k]);
    }
  }
  return out;
}

FacialSystem trace_faces(const CubicGraph& g, const EmbeddingScheme& s) {
  FaceTracer tracer(g);
  return tracer.trace(s);
}

int euler_genus(const CubicGraph& g, const FacialSystem& fs) {
  const int genus = 2 - g.order() + g.size() - static_cast<int>(fs.walks.size());
  if (genus < 0) throw MalformedSystemError("negative Euler genus " + std::to_string(genus));
  return genus;
}

bool covers_each_edge_twice(const CubicGraph& g, const FacialSystem& fs) {
  std::vector<int> count(static_cast<std::size_t>(g.size()), 0);
  for (const auto& w : fs.walks) {
    for (const auto& e : w.edge_list()) {
      const int id = g.edge_index(e.first, e.second);
      if (id < 0) return false;
      ++count[static_cast<std::size_t>(id)];
    }
  }
  return std::all_of(count.begin(), count.end(), [](int c) { return c == 2; });
}

namespace {

std::set<VertexPair> walk_edge_set(const FacialWalk& w) {
  const auto list = w.edge_list();
  return {list.begin(), list.end()};
}

}  // namespace

PolyhedralityReport is_polyhedral(const CubicGraph& g, const FacialSystem& fs) {
  (void)g;
  PolyhedralityReport report;
  std::vector<std::set<Vertex>> vsets;
  std::vector<std::set<VertexPair>> esets;
  for (std::size_t i = 0; i < fs.walks.size(); ++i) {
    const auto& w = fs.walks[i];
    vsets.emplace_back(w.vertices.begin(), w.vertices.end());
    esets.push_back(walk_edge_set(w));
    if (!w.is_cycle()) report.violations.push_back({PolyhedralityIssue::WalkNotCycle, i, i, {}, {}});
  }
  for (std::size_t i = 0; i < fs.walks.size(); ++i) {
    for (std::size_t j = i + 1; j < fs.walks.size(); ++j) {
      std::vector<Vertex> shared_v;
      std::set_intersection(vsets[i].begin(), vsets[i].end(), vsets[j].begin(), vsets[j].end(),
                            std::back_inserter(shared_v));
      std::vector<VertexPair> shared_e;
      std::set_intersection(esets[i].begin(), esets[i].end(), esets[j].begin(), esets[j].end(),
                            std::back_inserter(shared_e));
      bool proper = shared_v.size() <= 1;
      if (shared_v.size() == 2 && shared_e.size() == 1 && shared_e[0] == VertexPair(shared_v[0], shared_v[1]))
        proper = true;
      if (!proper)
        report.violations.push_back(
            {PolyhedralityIssue::ImproperPair, i, j, std::move(shared_v), std::move(shared_e)});
    }
  }
  return report;
}

bool polyhedral(const CubicGraph& g, const FacialSystem& fs) {
  if (g.order() > 64) return is_polyhedral(g, fs).ok();
  std::vector<std::uint64_t> masks;
  masks.reserve(fs.walks.size());
  for (const auto& w : fs.walks) {
    std::uint64_t m = 0;
    for (Vertex v : w.vertices) {
      const std::uint64_t bit = std::uint64_t{1} << v;
      if (m & bit) return false;
      m |= bit;
    }
    masks.push_back(m);
  }
  auto has_edge = [](const FacialWalk& w, Vertex a, Vertex b) {
    const std::size_t len = w.vertices.size();
    for (std::size_t k = 0; k < len; ++k) {
      const Vertex x = w.vertices[k];
      const Vertex y = w.vertices[(k + 1) % len];
      if ((x == a && y == b) || (x == b && y == a)) return true;
    }
    return false;
  };
  for (std::size_t i = 0; i < masks.size(); ++i) {
    for (std::size_t j = i + 1; j < masks.size(); ++j) {
      const std::uint64_t shared = masks[i] & masks[j];
      const int count = std::popcount(shared);
      if (count <= 1) continue;
      if (count > 2) return false;
      const Vertex a = std::countr_zero(shared);
      const Vertex b = 63 - std::countl_zero(shared);
      if (!has_edge(fs.walks[i], a, b) || !has_edge(fs.walks[j], a, b)) return false;
    }
  }
  return true;
}

bool systems_equivalent(const std::vector<VertexPermutation>& aut, const FacialSystem& a, const FacialSystem& b) {
  if (a.walks.size() != b.walks.size()) return false;
  return std::any_of(aut.begin(), aut.end(), [&](const VertexPermutation& p) { return a.relabeled(p) == b; });
}

bool systems_equivalent(const CubicGraph& g, const FacialSystem& a, const FacialSystem& b) {
  return systems_equivalent(automorphisms(g), a, b);
}

std::string canonical_system(const std::vector<VertexPermutation>& aut, const FacialSystem& fs) {
  std::string best;
  bool first = true;
  for (const auto& p : aut) {
    auto key = fs.relabeled(p).serialize();
    if (first || key < best) {
      best = std::move(key);
      first = false;
    }
  }
  return best;
}

std::string canonical_system(const CubicGraph& g, const FacialSystem& fs) {
  return canonical_system(automorphisms(g), fs);
}

}  // namespace scaffold
