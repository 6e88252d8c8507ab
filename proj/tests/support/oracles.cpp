#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace scaffold::oracle {

std::string encode_graph6(int n, const std::vector<std::pair<int, int>>& edges) {
  std::set<std::pair<int, int>> e;
  for (auto [a, b] : edges) e.insert({std::min(a, b), std::max(a, b)});
  std::string out(1, static_cast<char>(n + 63));
  std::vector<int> bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push_back(e.count({i, j}) ? 1 : 0);
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int x = 0;
    for (std::size_t b = 0; b < 6; ++b) x = x * 2 + bits[k + b];
    out += static_cast<char>(x + 63);
  }
  return out;
}

std::set<std::array<int, 4>> three_paths(const CubicGraph& g) {
  std::set<std::array<int, 4>> out;
  const int n = g.order();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          if (a == b || a == c || a == d || b == c || b == d || c == d) continue;
          if (!g.adjacent(a, b) || !g.adjacent(b, c) || !g.adjacent(c, d)) continue;
          std::array<int, 4> f{a, b, c, d}, r{d, c, b, a};
          out.insert(std::min(f, r));
        }
  return out;
}

Cycle canonical_cycle(const Cycle& c) {
  Cycle best = c;
  const std::size_t k = c.size();
  for (int dir = 0; dir < 2; ++dir) {
    Cycle base = c;
    if (dir) std::reverse(base.begin(), base.end());
    for (std::size_t s = 0; s < k; ++s) {
      Cycle rot(k);
      for (std::size_t i = 0; i < k; ++i) rot[i] = base[(s + i) % k];
      best = std::min(best, rot);
    }
  }
  return best;
}

std::set<Cycle> cycles(const CubicGraph& g, int k) {
  std::set<Cycle> out;
  Cycle path;
  std::function<void()> grow = [&] {
    if (static_cast<int>(path.size()) == k) {
      if (g.adjacent(path.back(), path.front())) out.insert(canonical_cycle(path));
      return;
    }
    for (int v = 0; v < g.order(); ++v) {
      if (std::find(path.begin(), path.end(), v) != path.end()) continue;
      if (!path.empty() && !g.adjacent(path.back(), v)) continue;
      path.push_back(v);
      grow();
      path.pop_back();
    }
  };
  grow();
  return out;
}

std::set<std::vector<int>> automorphisms(const CubicGraph& g) {
  const int n = g.order();
  std::set<std::vector<int>> out;
  std::vector<int> image;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  std::function<void()> grow = [&] {
    const int v = static_cast<int>(image.size());
    if (v == n) {
      out.insert(image);
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used[static_cast<std::size_t>(w)]) continue;
      bool ok = true;
      for (int u = 0; u < v && ok; ++u) ok = g.adjacent(u, v) == g.adjacent(image[static_cast<std::size_t>(u)], w);
      if (!ok) continue;
      used[static_cast<std::size_t>(w)] = 1;
      image.push_back(w);
      grow();
      image.pop_back();
      used[static_cast<std::size_t>(w)] = 0;
    }
  };
  grow();
  return out;
}

bool three_connected(const CubicGraph& g) {
  const int n = g.order();
  for (int x = 0; x < n; ++x)
    for (int y = x; y < n; ++y) {
      std::vector<char> seen(static_cast<std::size_t>(n), 0);
      seen[static_cast<std::size_t>(x)] = seen[static_cast<std::size_t>(y)] = 1;
      int start = 0;
      while (seen[static_cast<std::size_t>(start)]) ++start;
      std::vector<int> stack{start};
      seen[static_cast<std::size_t>(start)] = 1;
      int reached = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
          if (g.adjacent(v, w) && !seen[static_cast<std::size_t>(w)]) {
            seen[static_cast<std::size_t>(w)] = 1;
            ++reached;
            stack.push_back(w);
          }
      }
      if (reached != n - (x == y ? 1 : 2)) return false;
    }
  return true;
}

std::vector<Cycle> trace(const CubicGraph& g, const std::vector<std::array<int, 3>>& rotation,
                         const std::vector<int>& sign_of_edge_index) {
  struct Dart {
    int u, v, orient;
    auto operator<=>(const Dart&) const = default;
  };
  std::map<std::pair<int, int>, int> sign;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto [a, b] = g.edges()[i];
    sign[{a, b}] = sign[{b, a}] = sign_of_edge_index[i];
  }
  auto step = [&](Dart d) {
    const int orient = d.orient * sign.at({d.u, d.v});
    const auto& r = rotation[static_cast<std::size_t>(d.v)];
    const int at = static_cast<int>(std::find(r.begin(), r.end(), d.u) - r.begin());
    const int w = r[static_cast<std::size_t>((at + (orient > 0 ? 1 : 2)) % 3)];
    return Dart{d.v, w, orient};
  };
  std::set<Dart> done;
  std::vector<Cycle> out;
  std::set<Cycle> emitted;
  for (int u = 0; u < g.order(); ++u)
    for (int v : g.neighbors(u))
      for (int o : {1, -1}) {
        const Dart start{u, v, o};
        if (done.count(start)) continue;
        Cycle walk;
        Dart d = start;
        do {
          done.insert(d);
          walk.push_back(d.u);
          d = step(d);
        } while (!(d == start));
        // The reverse orbit traces the same face backwards.
        const Cycle key = canonical_cycle(walk);
        if (emitted.insert(key).second) out.push_back(key);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool polyhedral(const std::vector<Cycle>& walks) {
  std::vector<std::set<int>> vs;
  std::vector<std::set<std::pair<int, int>>> es;
  for (const auto& w : walks) {
    std::set<int> s(w.begin(), w.end());
    if (s.size() != w.size()) return false;
    std::set<std::pair<int, int>> e;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const int a = w[i], b = w[(i + 1) % w.size()];
      e.insert({std::min(a, b), std::max(a, b)});
    }
    vs.push_back(std::move(s));
    es.push_back(std::move(e));
  }
  for (std::size_t i = 0; i < walks.size(); ++i)
    for (std::size_t j = i + 1; j < walks.size(); ++j) {
      std::vector<int> shared;
      std::set_intersection(vs[i].begin(), vs[i].end(), vs[j].begin(), vs[j].end(), std::back_inserter(shared));
      if (shared.size() <= 1) continue;
      if (shared.size() > 2) return false;
      const std::pair<int, int> e{shared[0], shared[1]};
      if (!es[i].count(e) || !es[j].count(e)) return false;
    }
  return true;
}

}  // namespace scaffold::oracle
