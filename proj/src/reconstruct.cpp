#include "scaffoldkit/reconstruct.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_map>

namespace scaffold {

namespace {

std::string describe(const Path3& p) {
  return "(" + std::to_string(p.v[0]) + " " + std::to_string(p.v[1]) + " " + std::to_string(p.v[2]) + " " +
         std::to_string(p.v[3]) + ")";
}

std::string describe(VertexPair p) { return "[" + std::to_string(p.first) + " " + std::to_string(p.second) + "]"; }

}  // namespace

class ReconstructionContext {
 public:
  struct Disjunction {
    std::array<Vertex, 3> stem;
    std::array<std::size_t, 2> options;
  };

  ReconstructionContext(const CubicGraph& g, const ExtendedGraph& ext);

  std::optional<std::size_t> find(Vertex a, Vertex b, Vertex c, Vertex d) const {
    if (a == c || a == d || b == d) return std::nullopt;
    const Path3 p(a, b, c, d);
    auto it = index_.find(key(p));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  CubicGraph graph;
  ExtendedGraph ext;
  std::vector<Path3> paths;
  std::vector<std::size_t> pair_of;
  std::vector<VertexPair> pairs;
  std::vector<int> pair_mult;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<Disjunction> disjunctions;
  std::vector<std::size_t> triangle_paths;
  std::vector<std::array<std::size_t, 4>> square_windows;
  std::vector<char> in_fork;
  bool is_k4 = false;

 private:
  std::uint64_t key(const Path3& p) const {
    std::uint64_t k = 0;
    for (Vertex x : p.v) k = k * static_cast<std::uint64_t>(graph.order()) + static_cast<std::uint64_t>(x);
    return k;
  }

  std::unordered_map<std::uint64_t, std::size_t> index_;
};

ReconstructionContext::ReconstructionContext(const CubicGraph& g, const ExtendedGraph& e)
    : graph(g), ext(e), paths(all_three_paths(g)) {
  const int n = g.order();
  for (std::size_t i = 0; i < paths.size(); ++i) index_.emplace(key(paths[i]), i);

  std::map<VertexPair, std::size_t> pair_index;
  auto pair_id = [&](VertexPair p) {
    auto [it, inserted] = pair_index.try_emplace(p, pairs.size());
    if (inserted) {
      pairs.push_back(p);
      pair_mult.push_back(ext.multiplicity(p));
      candidates.emplace_back();
    }
    return it->second;
  };
  pair_of.resize(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto id = pair_id(paths[i].endpoints());
    pair_of[i] = id;
    candidates[id].push_back(i);
  }
  for (const auto& [p, edge] : ext.scaffold) pair_id(p);

  for (Vertex b = 0; b < n; ++b)
    for (Vertex a : g.neighbors(b))
      for (Vertex c : g.neighbors(b)) {
        if (a == c || g.adjacent(a, c)) continue;
        std::vector<std::size_t> opts;
        for (Vertex d : g.neighbors(c))
          if (d != b)
            if (auto id = find(a, b, c, d)) opts.push_back(*id);
        if (opts.size() == 2) disjunctions.push_back({{a, b, c}, {opts[0], opts[1]}});
      }

  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& v = paths[i].v;
    if (g.adjacent(v[0], v[2]) || g.adjacent(v[1], v[3])) triangle_paths.push_back(i);
  }

  is_k4 = n == 4 && g.size() == 6;
  if (!is_k4) {
    for (const auto& cyc : cycles_of_length(g, 4)) {
      std::array<std::size_t, 4> w{};
      for (std::size_t i = 0; i < 4; ++i) w[i] = *find(cyc[i], cyc[(i + 1) % 4], cyc[(i + 2) % 4], cyc[(i + 3) % 4]);
      square_windows.push_back(w);
    }
  }

  in_fork.assign(paths.size(), 0);
  for (const auto& f : find_forks(ext)) {
    const auto& t = f.vertices;
    if (auto id = find(t[0], t[1], t[2], t[3])) in_fork[*id] = 1;
    if (auto id = find(t[0], t[1], t[2], t[4])) in_fork[*id] = 1;
  }
}

std::string rule_id(Rule r) {
  switch (r) {
    case Rule::NoScaffold: return "no-scaffold";
    case Rule::R1Continuation: return "R1";
    case Rule::R2UniqueWitness: return "R2";
    case Rule::R3Triangle: return "R3";
    case Rule::R4Quadrilateral: return "R4";
    case Rule::R5ChordShortcut: return "R5";
    case Rule::R6CycleClosure: return "R6";
    case Rule::R7Multiplicity: return "R7";
    case Rule::R8Elimination: return "R8";
    case Rule::Probe: return "probe";
    case Rule::Branch: return "branch";
  }
  return "?";
}

std::string to_string(ReconstructionError::Kind kind) {
  switch (kind) {
    case ReconstructionError::Kind::InvalidInput: return "invalid-input";
    case ReconstructionError::Kind::NotAnExtendedGraph: return "not-an-extended-graph";
    case ReconstructionError::Kind::UniquenessViolation: return "uniqueness-violation";
    case ReconstructionError::Kind::BranchDepthExceeded: return "branch-depth-exceeded";
  }
  return "?";
}

std::string to_string(SpecialGraph s) {
  switch (s) {
    case SpecialGraph::None: return "none";
    case SpecialGraph::Petersen: return "petersen";
    case SpecialGraph::Franklin: return "franklin";
  }
  return "?";
}

std::size_t ReconstructionState::unknown_count() const {
  return static_cast<std::size_t>(std::count(assignment.begin(), assignment.end(), PathState::Unknown));
}

PathState ReconstructionState::value_of(const Path3& p) const {
  auto id = context->find(p.v[0], p.v[1], p.v[2], p.v[3]);
  if (!id) throw std::out_of_range("not a 3-path of the graph: " + describe(p));
  return assignment[*id];
}

const std::vector<Path3>& ReconstructionState::paths() const { return context->paths; }

ReconstructionState init_state(const CubicGraph& g, const ExtendedGraph& ext) {
  using K = ReconstructionError::Kind;
  if (!ext.graph.same_labeled_graph(g)) throw ReconstructionError(K::InvalidInput, "scaffold is over a different graph");
  for (const auto& [p, edge] : ext.scaffold) {
    if (p.first == p.second) throw ReconstructionError(K::InvalidInput, "scaffold loop at " + std::to_string(p.first));
    if (p.first < 0 || p.second >= g.order())
      throw ReconstructionError(K::InvalidInput, "scaffold edge " + describe(p) + " out of range");
    if (edge.multiplicity != 1 && edge.multiplicity != 2)
      throw ReconstructionError(K::InvalidInput, "scaffold edge " + describe(p) + " has multiplicity " +
                                                     std::to_string(edge.multiplicity));
  }
  ReconstructionState s;
  auto ctx = std::make_shared<const ReconstructionContext>(g, ext);
  s.assignment.assign(ctx->paths.size(), PathState::Unknown);
  for (std::size_t i = 0; i < ctx->paths.size(); ++i)
    if (ctx->pair_mult[ctx->pair_of[i]] == 0) {
      s.assignment[i] = PathState::NonFacial;
      s.trail.push_back({i, PathState::NonFacial, Rule::NoScaffold});
    }
  s.context = std::move(ctx);
  return s;
}

namespace {

class Propagator {
 public:
  explicit Propagator(ReconstructionState& s) : s_(s), c_(*s.context), g_(c_.graph) {}

  std::optional<Contradiction> run() {
    do {
      changed_ = false;
      if (!r3() || !r4() || !r1() || !counting() || !r5() || !r6()) return std::move(fail_);
    } while (changed_);
    return std::nullopt;
  }

 private:
  PathState at(std::size_t i) const { return s_.assignment[i]; }

  bool set(std::size_t i, PathState v, Rule rule) {
    if (at(i) == v) return true;
    if (at(i) != PathState::Unknown) {
      return contradict(rule, describe(c_.paths[i]) + " is already " +
                                  (at(i) == PathState::Facial ? "facial" : "non-facial"),
                        {i});
    }
    s_.assignment[i] = v;
    s_.trail.push_back({i, v, rule});
    changed_ = true;
    return true;
  }

  bool set_window(Vertex a, Vertex b, Vertex c, Vertex d, Rule rule) {
    auto id = c_.find(a, b, c, d);
    if (!id) return contradict(rule, "window (" + std::to_string(a) + " " + std::to_string(b) + " " +
                                         std::to_string(c) + " " + std::to_string(d) + ") is not a 3-path", {});
    return set(*id, PathState::Facial, rule);
  }

  bool contradict(Rule rule, std::string detail, std::vector<std::size_t> ids) {
    Contradiction c{rule, std::move(detail), {}, {}};
    for (auto i : ids) {
      c.paths.push_back(c_.paths[i]);
      for (const auto& d : s_.trail)
        if (d.path == i) c.causes.push_back({c_.paths[i], d.value, d.rule});
    }
    fail_ = std::move(c);
    return false;
  }

  // Exactly one continuation of each non-triangle 2-path is facial.
  bool r1() {
    for (const auto& d : c_.disjunctions) {
      const auto [x, y] = d.options;
      const PathState a = at(x), b = at(y);
      if (a == PathState::Facial && b == PathState::Facial)
        return contradict(Rule::R1Continuation, "both continuations facial", {x, y});
      if (a == PathState::NonFacial && b == PathState::NonFacial)
        return contradict(Rule::R1Continuation, "no continuation facial", {x, y});
      if (a == PathState::Facial && !set(y, PathState::NonFacial, Rule::R1Continuation)) return false;
      if (b == PathState::Facial && !set(x, PathState::NonFacial, Rule::R1Continuation)) return false;
      if (a == PathState::NonFacial && !set(y, PathState::Facial, Rule::R1Continuation)) return false;
      if (b == PathState::NonFacial && !set(x, PathState::Facial, Rule::R1Continuation)) return false;
    }
    return true;
  }

  bool r3() {
    for (auto i : c_.triangle_paths)
      if (!set(i, PathState::NonFacial, Rule::R3Triangle)) return false;
    return true;
  }

  bool r4() {
    for (const auto& w : c_.square_windows)
      for (auto i : w)
        if (!set(i, PathState::Facial, Rule::R4Quadrilateral)) return false;
    return true;
  }

  // R2, R7 and R8: per scaffold pair, the facial witnesses number exactly m.
  bool counting() {
    for (std::size_t p = 0; p < c_.pairs.size(); ++p) {
      const int m = c_.pair_mult[p];
      if (m == 0) continue;
      const auto& cand = c_.candidates[p];
      std::vector<std::size_t> facial, open;
      for (auto i : cand) {
        if (at(i) == PathState::Facial) facial.push_back(i);
        if (at(i) == PathState::Unknown) open.push_back(i);
      }
      const auto name = describe(c_.pairs[p]);
      if (static_cast<int>(facial.size()) > m)
        return contradict(Rule::R7Multiplicity, name + " has more facial witnesses than its multiplicity", facial);
      for (std::size_t a = 0; a < facial.size(); ++a)
        for (std::size_t b = a + 1; b < facial.size(); ++b)
          if (!c_.paths[facial[a]].internally_disjoint(c_.paths[facial[b]]))
            return contradict(Rule::R7Multiplicity, name + " has facial witnesses sharing a vertex",
                              {facial[a], facial[b]});
      if (static_cast<int>(facial.size() + open.size()) < m)
        return contradict(m == 1 ? Rule::R2UniqueWitness : Rule::R8Elimination,
                          name + " has too few candidate witnesses left", cand);
      if (m == 1 && three_disjoint(cand))
        return contradict(Rule::R7Multiplicity, name + " is single but has three disjoint 3-paths", cand);
      if (static_cast<int>(facial.size()) == m) {
        for (auto i : open)
          if (!set(i, PathState::NonFacial, Rule::R7Multiplicity)) return false;
      } else if (static_cast<int>(facial.size() + open.size()) == m) {
        for (auto i : open)
          if (!set(i, PathState::Facial, m == 1 ? Rule::R2UniqueWitness : Rule::R8Elimination)) return false;
      }
    }
    return true;
  }

  bool three_disjoint(const std::vector<std::size_t>& cand) const {
    const std::size_t k = cand.size();
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        if (!c_.paths[cand[a]].internally_disjoint(c_.paths[cand[b]])) continue;
        for (std::size_t c = b + 1; c < k; ++c)
          if (c_.paths[cand[a]].internally_disjoint(c_.paths[cand[c]]) &&
              c_.paths[cand[b]].internally_disjoint(c_.paths[cand[c]]))
            return true;
      }
    return false;
  }

  // Successor of the directed 2-path (a b c) along known facial windows.
  std::optional<Vertex> next(Vertex a, Vertex b, Vertex c) const {
    for (Vertex d : g_.neighbors(c)) {
      if (d == b) continue;
      auto id = c_.find(a, b, c, d);
      if (id && at(*id) == PathState::Facial) return d;
    }
    return std::nullopt;
  }

  // Maximal chains of facial windows; each is a subwalk of one facial cycle.
  bool r5() {
    for (std::size_t i = 0; i < c_.paths.size(); ++i) {
      if (at(i) != PathState::Facial) continue;
      const auto& p = c_.paths[i].v;
      std::vector<Vertex> chain(p.begin(), p.end());
      bool closed = false;
      auto contains = [&](Vertex x) { return std::find(chain.begin(), chain.end(), x) != chain.end(); };
      while (true) {
        const std::size_t k = chain.size();
        auto w = next(chain[k - 3], chain[k - 2], chain[k - 1]);
        if (!w) break;
        if (*w == chain.front()) {
          closed = true;
          break;
        }
        if (contains(*w)) return contradict(Rule::R5ChordShortcut, "facial chain revisits " + std::to_string(*w), {i});
        chain.push_back(*w);
      }
      while (!closed) {
        auto w = next(chain[2], chain[1], chain[0]);
        if (!w) break;
        if (*w == chain.back()) {
          closed = true;
          break;
        }
        if (contains(*w)) return contradict(Rule::R5ChordShortcut, "facial chain revisits " + std::to_string(*w), {i});
        chain.insert(chain.begin(), *w);
      }
      if (!check_chain(chain, closed, i)) return false;
    }
    return true;
  }

  bool check_chain(const std::vector<Vertex>& chain, bool closed, std::size_t origin) {
    const std::size_t k = chain.size();
    if (closed) {
      for (std::size_t j = 0; j < k; ++j)
        if (!set_window(chain[j], chain[(j + 1) % k], chain[(j + 2) % k], chain[(j + 3) % k], Rule::R6CycleClosure))
          return false;
    }
    auto gap = [&](std::size_t a, std::size_t b) {
      const std::size_t d = b - a;
      return closed ? std::min(d, k - d) : d;
    };
    std::vector<int> pos(static_cast<std::size_t>(g_.order()), -1);
    for (std::size_t j = 0; j < k; ++j) pos[static_cast<std::size_t>(chain[j])] = static_cast<int>(j);
    const bool ends = !closed;
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = a + 1; b < k; ++b) {
        if (gap(a, b) < 2) continue;
        const bool end_pair = ends && a == 0 && b == k - 1;
        if (g_.adjacent(chain[a], chain[b])) {
          if (end_pair) {
            if (!set_window(chain[k - 3], chain[k - 2], chain[k - 1], chain[0], Rule::R5ChordShortcut)) return false;
            continue;
          }
          return contradict(Rule::R5ChordShortcut,
                            "chord " + describe(VertexPair(chain[a], chain[b])) + " of a facial cycle", {origin});
        }
        for (Vertex x : g_.neighbors(chain[a])) {
          if (pos[static_cast<std::size_t>(x)] >= 0 || !g_.adjacent(x, chain[b])) continue;
          if (end_pair) {
            if (!set_window(chain[k - 2], chain[k - 1], x, chain[0], Rule::R5ChordShortcut) ||
                !set_window(chain[k - 1], x, chain[0], chain[1], Rule::R5ChordShortcut))
              return false;
            continue;
          }
          return contradict(Rule::R5ChordShortcut,
                            "shortcut through " + std::to_string(x) + " between " + std::to_string(chain[a]) +
                                " and " + std::to_string(chain[b]) + " of a facial cycle",
                            {origin});
        }
      }
    return true;
  }

  // Two internally disjoint facial witnesses of a non-edge pair close a hexagon.
  bool r6() {
    for (std::size_t p = 0; p < c_.pairs.size(); ++p) {
      if (c_.pair_mult[p] != 2) continue;
      const auto [u, w] = c_.pairs[p];
      if (g_.adjacent(u, w)) continue;
      std::vector<std::size_t> facial;
      for (auto i : c_.candidates[p])
        if (at(i) == PathState::Facial) facial.push_back(i);
      if (facial.size() != 2) continue;
      const auto& a = c_.paths[facial[0]].v;
      const auto& b = c_.paths[facial[1]].v;
      if (!c_.paths[facial[0]].internally_disjoint(c_.paths[facial[1]])) continue;
      std::array<Vertex, 6> cyc{};
      const bool same_start = a[0] == b[0];
      cyc = {a[0], a[1], a[2], a[3], same_start ? b[2] : b[1], same_start ? b[1] : b[2]};
      for (std::size_t j = 0; j < 6; ++j)
        if (!set_window(cyc[j], cyc[(j + 1) % 6], cyc[(j + 2) % 6], cyc[(j + 3) % 6], Rule::R6CycleClosure))
          return false;
    }
    return true;
  }

  ReconstructionState& s_;
  const ReconstructionContext& c_;
  const CubicGraph& g_;
  bool changed_ = false;
  std::optional<Contradiction> fail_;
};

}  // namespace

std::optional<Contradiction> propagate(ReconstructionState& state) { return Propagator(state).run(); }

std::vector<PathState> replay(const ReconstructionState& state) {
  std::vector<PathState> out(state.assignment.size(), PathState::Unknown);
  for (const auto& d : state.trail) out[d.path] = d.value;
  return out;
}

std::vector<Fork> find_forks(const ExtendedGraph& ext) {
  const auto& g = ext.graph;
  std::vector<Fork> out;
  for (Vertex t2 = 0; t2 < g.order(); ++t2)
    for (Vertex t1 : g.neighbors(t2))
      for (Vertex t3 : g.neighbors(t2)) {
        if (t3 == t1) continue;
        std::vector<Vertex> ends;
        for (Vertex t4 : g.neighbors(t3))
          if (t4 != t2 && t4 != t1 && ext.contains(VertexPair(t1, t4))) ends.push_back(t4);
        if (ends.size() == 2) out.push_back({{t1, t2, t3, ends[0], ends[1]}});
      }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Butterfly> detect_butterflies(const ExtendedGraph& ext) {
  const auto& g = ext.graph;
  // 6-cycles (t0 t1 t2 t3 t4 t5) through a fixed 3-path t1 t2 t3 t4
  auto closures = [&](Vertex t1, Vertex t2, Vertex t3, Vertex t4) {
    std::vector<std::pair<Vertex, Vertex>> out;  // (t0, t5)
    for (Vertex t5 : g.neighbors(t4)) {
      if (t5 == t3 || t5 == t1 || t5 == t2) continue;
      for (Vertex t0 : g.neighbors(t5))
        if (t0 != t4 && t0 != t1 && t0 != t2 && t0 != t3 && g.adjacent(t0, t1)) out.emplace_back(t0, t5);
    }
    return out;
  };
  std::set<Butterfly> found;
  for (const auto& f : find_forks(ext)) {
    const auto [t1, t2, t3, a, b] = f.vertices;
    for (const auto& [t4, t4p] : {std::pair{a, b}, std::pair{b, a}})
      for (const auto& [t0, t5] : closures(t1, t2, t3, t4))
        for (const auto& [t0p, t5p] : closures(t1, t2, t3, t4p)) {
          std::array<Vertex, 9> v{t0, t0p, t1, t2, t3, t4, t4p, t5, t5p};
          auto sorted = v;
          std::sort(sorted.begin(), sorted.end());
          if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) continue;
          if (!ext.contains(VertexPair(t0, t3))) continue;
          const auto kind = ext.contains(VertexPair(t0p, t3)) ? ButterflyKind::B1 : ButterflyKind::B2;
          found.insert({kind, v});
        }
  }
  return {found.begin(), found.end()};
}

SpecialGraph recognize_special(const CubicGraph& g) {
  if (g.order() == 10 && is_isomorphic(g, petersen_graph())) return SpecialGraph::Petersen;
  if (g.order() == 12 && is_isomorphic(g, franklin_graph())) return SpecialGraph::Franklin;
  return SpecialGraph::None;
}

FacialSystem assemble_walks(const CubicGraph& g, std::span<const Path3> facial) {
  const auto n = static_cast<std::size_t>(g.order());
  auto code = [n](Vertex a, Vertex b, Vertex c) {
    return (static_cast<std::size_t>(a) * n + static_cast<std::size_t>(b)) * n + static_cast<std::size_t>(c);
  };
  std::vector<Vertex> succ(n * n * n, -1);
  auto link = [&](Vertex a, Vertex b, Vertex c, Vertex d) {
    auto& slot = succ[code(a, b, c)];
    if (slot != -1 && slot != d)
      throw AssemblyError("2-path (" + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) +
                          ") has two facial continuations");
    slot = d;
  };
  for (const auto& p : facial) {
    link(p.v[0], p.v[1], p.v[2], p.v[3]);
    link(p.v[3], p.v[2], p.v[1], p.v[0]);
  }
  std::vector<std::array<Vertex, 3>> states;
  for (Vertex b = 0; b < g.order(); ++b)
    for (Vertex a : g.neighbors(b))
      for (Vertex c : g.neighbors(b)) {
        if (a == c) continue;
        states.push_back({a, b, c});
        auto& slot = succ[code(a, b, c)];
        if (slot != -1) continue;
        if (!g.adjacent(a, c))
          throw AssemblyError("2-path (" + std::to_string(a) + " " + std::to_string(b) + " " + std::to_string(c) +
                              ") has no facial continuation");
        slot = a;
      }

  std::vector<char> seen(n * n * n, 0);
  std::vector<FacialWalk> walks;
  for (const auto& [a0, b0, c0] : states) {
    if (seen[code(a0, b0, c0)]) continue;
    std::vector<Vertex> walk;
    Vertex a = a0, b = b0, c = c0;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > states.size()) throw AssemblyError("facial chain starting at " + std::to_string(a0) + " never closes");
      seen[code(a, b, c)] = 1;
      seen[code(c, b, a)] = 1;
      walk.push_back(a);
      const Vertex d = succ[code(a, b, c)];
      a = b;
      b = c;
      c = d;
      if (a == a0 && b == b0 && c == c0) break;
    }
    walks.push_back(FacialWalk::canonical(std::move(walk)));
  }
  auto fs = FacialSystem::from_walks(std::move(walks));
  if (!covers_each_edge_twice(g, fs)) throw AssemblyError("assembled walks do not cover every edge twice");
  return fs;
}

namespace {

class Search {
 public:
  Search(const CubicGraph& g, const ExtendedGraph& ext, const ReconstructOptions& opts)
      : g_(g), ext_(ext), opts_(opts) {}

  void run(ReconstructionState root) {
    if (auto c = propagate(root)) {
      root_failure_ = std::move(c);
      return;
    }
    solve(std::move(root), 0);
  }

  std::map<FacialSystem, std::vector<Decision>> solutions;
  int branch_count = 0;
  int leaves_rejected = 0;
  std::optional<Contradiction> root_failure_;

 private:
  void solve(ReconstructionState s, int depth) {
    while (true) {
      std::vector<std::size_t> open;
      for (std::size_t i = 0; i < s.assignment.size(); ++i)
        if (s.assignment[i] == PathState::Unknown) open.push_back(i);
      if (open.empty()) {
        leaf(s);
        return;
      }
      // Failed-literal probing: settle any variable one of whose values
      // contradicts at fixpoint.
      bool settled = false;
      for (auto i : open) {
        auto facial = assume(s, i, PathState::Facial, Rule::Probe);
        auto nonfacial = assume(s, i, PathState::NonFacial, Rule::Probe);
        if (!facial && !nonfacial) return;
        if (!facial || !nonfacial) {
          s = std::move(facial ? *facial : *nonfacial);
          settled = true;
          break;
        }
      }
      if (settled) continue;

      std::size_t pick = open.front();
      for (auto i : open)
        if (s.context->in_fork[i]) {
          pick = i;
          break;
        }
      if (depth + 1 > opts_.max_branch_depth)
        throw ReconstructionError(ReconstructionError::Kind::BranchDepthExceeded,
                                  "branch depth exceeds " + std::to_string(opts_.max_branch_depth));
      ++branch_count;
      for (auto value : {PathState::Facial, PathState::NonFacial})
        if (auto child = assume(s, pick, value, Rule::Branch)) {
          child->branch_depth = depth + 1;
          solve(std::move(*child), depth + 1);
        }
      return;
    }
  }

  static std::optional<ReconstructionState> assume(const ReconstructionState& s, std::size_t i, PathState v, Rule r) {
    ReconstructionState t = s;
    t.assignment[i] = v;
    t.trail.push_back({i, v, r});
    if (propagate(t)) return std::nullopt;
    return t;
  }

  void leaf(const ReconstructionState& s) {
    std::vector<Path3> facial;
    for (std::size_t i = 0; i < s.assignment.size(); ++i)
      if (s.assignment[i] == PathState::Facial) facial.push_back(s.context->paths[i]);
    try {
      auto fs = assemble_walks(g_, facial);
      if (!polyhedral(g_, fs) || !extended_equal(build_extended(g_, fs), ext_)) {
        ++leaves_rejected;
        return;
      }
      solutions.try_emplace(std::move(fs), s.trail);
    } catch (const AssemblyError&) {
      ++leaves_rejected;
    } catch (const CorruptSystemError&) {
      ++leaves_rejected;
    }
  }

  const CubicGraph& g_;
  const ExtendedGraph& ext_;
  const ReconstructOptions& opts_;
};

}  // namespace

ReconstructionOutcome reconstruct(const CubicGraph& g, const ExtendedGraph& ext, const ReconstructOptions& opts) {
  using K = ReconstructionError::Kind;
  if (const auto report = validate_cubic(g); !report.ok())
    throw ReconstructionError(K::InvalidInput, "graph is not a connected simple cubic graph: " +
                                                   report.violations.front().detail);
  Search search(g, ext, opts);
  search.run(init_state(g, ext));
  if (search.root_failure_) {
    const auto& c = *search.root_failure_;
    throw ReconstructionError(K::NotAnExtendedGraph, rule_id(c.rule) + ": " + c.detail, c);
  }
  if (search.solutions.empty())
    throw ReconstructionError(K::NotAnExtendedGraph, "no completion yields a polyhedral system with this scaffold (" +
                                                         std::to_string(search.leaves_rejected) + " leaves rejected)");
  const auto aut = automorphisms(g);
  const auto& [first, first_trail] = *search.solutions.begin();
  for (const auto& [fs, trail] : search.solutions)
    if (!systems_equivalent(aut, first, fs))
      throw ReconstructionError(K::UniquenessViolation, "two inequivalent systems share the scaffold: " +
                                                            first.serialize() + " and " + fs.serialize());

  ReconstructionOutcome out;
  out.system = first;
  for (const auto& [fs, trail] : search.solutions) out.solutions.push_back(fs);
  out.branch_count = search.branch_count;
  out.special = search.branch_count > 0 ? recognize_special(g) : SpecialGraph::None;
  out.trail = first_trail;
  for (const auto& d : out.trail) ++out.used_rules[rule_id(d.rule)];
  return out;
}

}  // namespace scaffold
