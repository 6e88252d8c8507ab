#include "scaffoldkit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace scaffold {

CubicGraph::CubicGraph(int n, std::span<const VertexPair> edges) : adj_(static_cast<std::size_t>(n)) {
  for (const auto& e : edges) {
    if (e.first < 0 || e.second >= n) throw std::out_of_range("edge endpoint out of range");
    adj_[static_cast<std::size_t>(e.first)].push_back(e.second);
    adj_[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
  index();
}

CubicGraph::CubicGraph(std::vector<std::vector<Vertex>> adjacency) : adj_(std::move(adjacency)) {
  const int n = order();
  for (const auto& list : adj_)
    for (Vertex w : list)
      if (w < 0 || w >= n) throw std::out_of_range("neighbor id out of range");
  index();
}

void CubicGraph::index() {
  const std::size_t n = adj_.size();
  matrix_.assign(n * n, 0);
  edges_.clear();
  for (std::size_t u = 0; u < n; ++u) {
    for (Vertex w : adj_[u]) {
      matrix_[u * n + static_cast<std::size_t>(w)] = 1;
      if (static_cast<Vertex>(u) < w) edges_.emplace_back(static_cast<Vertex>(u), w);
    }
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  edge_id_.assign(n * n, -1);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const auto [a, b] = edges_[i];
    edge_id_[static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)] = static_cast<int>(i);
    edge_id_[static_cast<std::size_t>(b) * n + static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
}

int CubicGraph::edge_index(Vertex u, Vertex v) const {
  return edge_id_[static_cast<std::size_t>(u) * adj_.size() + static_cast<std::size_t>(v)];
}

Path3::Path3(Vertex t0, Vertex t1, Vertex t2, Vertex t3) {
  const std::array<Vertex, 4> fwd{t0, t1, t2, t3};
  const std::array<Vertex, 4> rev{t3, t2, t1, t0};
  v = std::min(fwd, rev);
}

bool Path3::internally_disjoint(const Path3& other) const {
  // Orientation of `other` relative to this one is irrelevant: compare sets.
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      if (v[static_cast<std::size_t>(i)] == other.v[static_cast<std::size_t>(j)]) return false;
  return true;
}

VertexPermutation VertexPermutation::identity(int n) {
  VertexPermutation p;
  p.image.resize(static_cast<std::size_t>(n));
  std::iota(p.image.begin(), p.image.end(), 0);
  return p;
}

VertexPermutation VertexPermutation::compose(const VertexPermutation& other) const {
  VertexPermutation p;
  p.image.resize(other.image.size());
  for (std::size_t v = 0; v < other.image.size(); ++v) p.image[v] = (*this)(other.image[v]);
  return p;
}

VertexPermutation VertexPermutation::inverse() const {
  VertexPermutation p;
  p.image.resize(image.size());
  for (std::size_t v = 0; v < image.size(); ++v) p.image[static_cast<std::size_t>(image[v])] = static_cast<Vertex>(v);
  return p;
}

bool VertexPermutation::preserves(const CubicGraph& g) const {
  if (static_cast<int>(image.size()) != g.order()) return false;
  for (const auto& e : g.edges())
    if (!g.adjacent((*this)(e.first), (*this)(e.second))) return false;
  return true;
}

// ---------------------------------------------------------------------------
// graph6

namespace {

constexpr int kBias = 63;

std::string_view strip_line(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  return text;
}

}  // namespace

CubicGraph parse_graph6(std::string_view text) {
  text = strip_line(text);
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (text.substr(0, header.size()) == header) pos = header.size();

  auto byte_at = [&](std::size_t i) -> int {
    if (i >= text.size()) throw Graph6Error("truncated graph6 data", i);
    const int c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) throw Graph6Error("byte out of graph6 range", i);
    return c - kBias;
  };

  if (pos >= text.size()) throw Graph6Error("empty graph6 string", pos);
  if (text[pos] == ':' || text[pos] == ';' || text[pos] == '&')
    throw Graph6Error("sparse6/digraph6 header is not graph6", pos);

  std::size_t n = 0;
  const int first = byte_at(pos);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos += 1;
  } else {
    const int second = byte_at(pos + 1);
    if (second < 63) {
      n = (static_cast<std::size_t>(byte_at(pos + 1)) << 12) | (static_cast<std::size_t>(byte_at(pos + 2)) << 6) |
          static_cast<std::size_t>(byte_at(pos + 3));
      if (n < 63) throw Graph6Error("non-minimal size field", pos);
      pos += 4;
    } else {
      n = 0;
      for (std::size_t i = 0; i < 6; ++i) n = (n << 6) | static_cast<std::size_t>(byte_at(pos + 2 + i));
      if (n < 258048) throw Graph6Error("non-minimal size field", pos);
      pos += 8;
    }
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t nbytes = (bits + 5) / 6;
  if (text.size() < pos + nbytes) throw Graph6Error("truncated bit field", text.size());
  if (text.size() > pos + nbytes) throw Graph6Error("trailing bytes after bit field", pos + nbytes);

  std::vector<VertexPair> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int chunk = byte_at(pos + k / 6);
      if ((chunk >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  for (; k < nbytes * 6; ++k)
    if ((byte_at(pos + k / 6) >> (5 - static_cast<int>(k % 6))) & 1)
      throw Graph6Error("nonzero padding bits", pos + k / 6);

  return CubicGraph(static_cast<int>(n), edges);
}

std::string emit_graph6(const CubicGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n < 258048) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(126));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

std::vector<std::string> read_corpus_lines(std::string_view content) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(content)};
  std::string line;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    lines.push_back(line);
  }
  return lines;
}

// ---------------------------------------------------------------------------
// validation and connectivity

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotThreeRegular: return "not-3-regular";
    case ViolationKind::NotSimple: return "not-simple";
    case ViolationKind::Disconnected: return "disconnected";
    case ViolationKind::BadOrder: return "bad-order";
  }
  return "unknown";
}

namespace {

bool connected_without(const CubicGraph& g, Vertex skip_a, Vertex skip_b) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  if (skip_a >= 0) seen[static_cast<std::size_t>(skip_a)] = 1;
  if (skip_b >= 0) seen[static_cast<std::size_t>(skip_b)] = 1;
  Vertex start = -1;
  int remaining = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      ++remaining;
      if (start < 0) start = v;
    }
  }
  if (remaining == 0) return true;
  std::vector<Vertex> stack{start};
  seen[static_cast<std::size_t>(start)] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == remaining;
}

}  // namespace

bool is_connected(const CubicGraph& g) { return connected_without(g, -1, -1); }

ValidationReport validate_cubic(const CubicGraph& g) {
  ValidationReport report;
  const int n = g.order();
  if (n < 4 || n % 2 != 0)
    report.violations.push_back({ViolationKind::BadOrder, -1, "order " + std::to_string(n) + " is not even and >= 4"});
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    std::vector<Vertex> sorted(nb.begin(), nb.end());
    std::sort(sorted.begin(), sorted.end());
    const bool loop = std::find(sorted.begin(), sorted.end(), v) != sorted.end();
    const bool dup = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    bool asym = false;
    for (Vertex w : nb) {
      const auto wn = g.neighbors(w);
      if (std::find(wn.begin(), wn.end(), v) == wn.end()) asym = true;
    }
    if (loop || dup || asym)
      report.violations.push_back({ViolationKind::NotSimple, v,
                                   loop ? "self-loop" : (dup ? "repeated neighbor" : "asymmetric adjacency")});
    if (nb.size() != 3)
      report.violations.push_back({ViolationKind::NotThreeRegular, v, "degree " + std::to_string(nb.size())});
  }
  if (n > 0 && !is_connected(g)) report.violations.push_back({ViolationKind::Disconnected, -1, "graph is disconnected"});
  return report;
}

bool is_three_connected(const CubicGraph& g) {
  const int n = g.order();
  if (n < 4) return false;
  if (!is_connected(g)) return false;
  for (Vertex a = 0; a < n; ++a) {
    if (!connected_without(g, a, -1)) return false;
    for (Vertex b = a + 1; b < n; ++b)
      if (!connected_without(g, a, b)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// paths and cycles

std::vector<Path3> three_paths_between(const CubicGraph& g, Vertex u, Vertex v) {
  std::vector<Path3> out;
  if (u == v) return out;
  for (Vertex a : g.neighbors(u)) {
    if (a == v) continue;
    for (Vertex b : g.neighbors(a)) {
      if (b == u || b == v) continue;
      if (g.adjacent(b, v)) out.emplace_back(u, a, b, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Path3> all_three_paths(const CubicGraph& g) {
  std::vector<Path3> out;
  const int n = g.order();
  for (Vertex t0 = 0; t0 < n; ++t0)
    for (Vertex t1 : g.neighbors(t0))
      for (Vertex t2 : g.neighbors(t1)) {
        if (t2 == t0) continue;
        for (Vertex t3 : g.neighbors(t2)) {
          if (t3 == t1 || t3 == t0) continue;
          if (t0 < t3) out.emplace_back(t0, t1, t2, t3);
        }
      }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::vector<Vertex>> cycles_of_length(const CubicGraph& g, int k) {
  std::vector<std::vector<Vertex>> out;
  if (k < 3) return out;
  const int n = g.order();
  std::vector<Vertex> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);
  std::function<void(Vertex)> extend = [&](Vertex s) {
    const Vertex tail = path.back();
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(tail, s) && path[1] < path.back()) out.push_back(path);
      return;
    }
    for (Vertex w : g.neighbors(tail)) {
      if (w <= s || on_path[static_cast<std::size_t>(w)]) continue;
      on_path[static_cast<std::size_t>(w)] = 1;
      path.push_back(w);
      extend(s);
      path.pop_back();
      on_path[static_cast<std::size_t>(w)] = 0;
    }
  };
  for (Vertex s = 0; s < n; ++s) {
    path.assign(1, s);
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------
// isomorphism search

namespace {

/// Isomorphism-invariant vertex colours: short-cycle counts through each
/// vertex, refined once by the multiset of neighbour colours.
std::vector<std::uint64_t> vertex_colours(const CubicGraph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  std::vector<std::uint64_t> base(n, 0);
  for (int k = 3; k <= 6; ++k) {
    for (const auto& cyc : cycles_of_length(g, k))
      for (Vertex v : cyc) base[static_cast<std::size_t>(v)] += std::uint64_t{1} << (12 * (k - 3));
  }
  std::vector<std::uint64_t> refined(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint64_t> nb;
    for (Vertex w : g.neighbors(static_cast<Vertex>(v))) nb.push_back(base[static_cast<std::size_t>(w)]);
    std::sort(nb.begin(), nb.end());
    std::uint64_t h = base[v] * 0x9E3779B97F4A7C15ULL + g.neighbors(static_cast<Vertex>(v)).size();
    for (auto c : nb) h = (h ^ c) * 0x100000001B3ULL + 0x9E37;
    refined[v] = h;
  }
  return refined;
}

/// Enumerates isomorphisms g -> h; stops early when `first_only`.
std::vector<VertexPermutation> search_isomorphisms(const CubicGraph& g, const CubicGraph& h, bool first_only) {
  std::vector<VertexPermutation> found;
  const int n = g.order();
  if (n != h.order() || g.size() != h.size()) return found;
  if (n == 0) {
    found.push_back(VertexPermutation{});
    return found;
  }
  const auto cg = vertex_colours(g);
  const auto ch = vertex_colours(h);
  {
    auto sg = cg, sh = ch;
    std::sort(sg.begin(), sg.end());
    std::sort(sh.begin(), sh.end());
    if (sg != sh) return found;
  }

  // Breadth-first vertex order; each vertex after a component root has a
  // mapped parent, which limits candidates to the parent image's neighbours.
  std::vector<Vertex> order;
  std::vector<Vertex> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::deque<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      for (Vertex w : g.neighbors(v)) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        }
      }
    }
  }

  std::vector<Vertex> map(static_cast<std::size_t>(n), -1);
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> candidates_buf;

  std::function<bool(std::size_t)> step = [&](std::size_t depth) -> bool {
    if (depth == order.size()) {
      found.push_back(VertexPermutation{map});
      return first_only;
    }
    const Vertex v = order[depth];
    std::vector<Vertex> candidates;
    const Vertex p = parent[static_cast<std::size_t>(v)];
    if (p >= 0) {
      const auto nb = h.neighbors(map[static_cast<std::size_t>(p)]);
      candidates.assign(nb.begin(), nb.end());
    } else {
      for (Vertex c = 0; c < n; ++c) candidates.push_back(c);
    }
    for (Vertex c : candidates) {
      if (used[static_cast<std::size_t>(c)] || cg[static_cast<std::size_t>(v)] != ch[static_cast<std::size_t>(c)]) continue;
      if (g.neighbors(v).size() != h.neighbors(c).size()) continue;
      bool consistent = true;
      for (std::size_t i = 0; i < depth && consistent; ++i) {
        const Vertex u = order[i];
        if (g.adjacent(v, u) != h.adjacent(c, map[static_cast<std::size_t>(u)])) consistent = false;
      }
      if (!consistent) continue;
      map[static_cast<std::size_t>(v)] = c;
      used[static_cast<std::size_t>(c)] = 1;
      if (step(depth + 1)) return true;
      used[static_cast<std::size_t>(c)] = 0;
      map[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  step(0);
  std::sort(found.begin(), found.end());
  return found;
}

}  // namespace

std::vector<VertexPermutation> automorphisms(const CubicGraph& g) { return search_isomorphisms(g, g, false); }

std::optional<VertexPermutation> is_isomorphic(const CubicGraph& g, const CubicGraph& h) {
  auto found = search_isomorphisms(g, h, true);
  if (found.empty()) return std::nullopt;
  return found.front();
}

// ---------------------------------------------------------------------------
// reference graphs

CubicGraph petersen_graph() {
  std::vector<VertexPair> e;
  for (int i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return CubicGraph(10, e);
}

CubicGraph franklin_graph() {
  enum : Vertex { t0, t0p, t1, t2, t3, t4, t4p, t5, t5p, x0, x2, x5 };
  const std::vector<VertexPair> e{
      {t0, t1}, {t1, t2}, {t2, t3}, {t3, t4},  {t4, t5},  {t5, t0},  {t0p, t1}, {t3, t4p}, {t4p, t5p},
      {t5p, t0p}, {x0, t0}, {x0, t4p}, {x2, t2}, {x5, t5}, {x5, x2}, {t4, t5p}, {x0, x5}, {x2, t0p}};
  return CubicGraph(12, e);
}

CubicGraph complete_graph_k4() {
  const std::vector<VertexPair> e{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  return CubicGraph(4, e);
}

CubicGraph cube_graph() {
  std::vector<VertexPair> e;
  for (int v = 0; v < 8; ++v)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((v & bit) == 0) e.emplace_back(v, v | bit);
  return CubicGraph(8, e);
}

CubicGraph prism_graph(int k) {
  std::vector<VertexPair> e;
  for (int i = 0; i < k; ++i) {
    e.emplace_back(i, (i + 1) % k);
    e.emplace_back(k + i, k + (i + 1) % k);
    e.emplace_back(i, k + i);
  }
  return CubicGraph(2 * k, e);
}

}  // namespace scaffold
