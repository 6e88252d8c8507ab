#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "scaffoldkit/graph.hpp"

using namespace scaffold;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const CubicGraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.first, e.second);
  return out;
}

CubicGraph relabel(const CubicGraph& g, const std::vector<int>& p) {
  std::vector<VertexPair> edges;
  for (const auto& e : g.edges()) edges.emplace_back(p[static_cast<std::size_t>(e.first)], p[static_cast<std::size_t>(e.second)]);
  return CubicGraph(g.order(), edges);
}

// Two K4s, each missing one edge, joined across by two edges.
CubicGraph two_k4_gadget() {
  std::vector<VertexPair> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7}, {0, 4}, {1, 5}};
  return CubicGraph(8, edges);
}

}  // namespace

TEST_CASE("graph6 decodes K4 and the Petersen graph") {
  const auto k4 = parse_graph6("C~");
  CHECK(k4.order() == 4);
  CHECK(k4.size() == 6);
  CHECK(k4.same_labeled_graph(complete_graph_k4()));

  const auto petersen = petersen_graph();
  const auto line = oracle::encode_graph6(10, edge_pairs(petersen));
  CHECK(parse_graph6(line).same_labeled_graph(petersen));
  CHECK(emit_graph6(petersen) == line);
  CHECK(emit_graph6(k4) == "C~");
}

TEST_CASE("graph6 accepts the optional header") { CHECK(parse_graph6(">>graph6<<C~").size() == 6); }

TEST_CASE("graph6 round-trips every corpus line") {
  for (int n = 4; n <= 14; n += 2)
    for (const auto& line : testing::corpus_lines(n)) {
      const auto g = parse_graph6(line);
      CHECK(emit_graph6(g) == line);
      CHECK(oracle::encode_graph6(g.order(), edge_pairs(g)) == line);
    }
}

TEST_CASE("graph6 errors carry byte offsets") {
  auto offset_of = [](const std::string& s) {
    try {
      parse_graph6(s);
    } catch (const Graph6Error& e) {
      return static_cast<long>(e.offset());
    }
    return -1L;
  };
  CHECK(offset_of("") == 0);
  CHECK(offset_of("C") == 1);        // bit field missing
  CHECK(offset_of("C~~") == 2);      // one byte too many
  CHECK(offset_of("C\x1f") == 1);    // below the 63 bias
  CHECK(offset_of("D?@") == 2);      // 10 bits for n = 5, so the last two bits are padding
  CHECK(offset_of("D??") == -1);
}

TEST_CASE("degenerate graph6 input parses and then fails validation") {
  // 'A' encodes n = 2 and 'B' encodes n = 3.
  for (const auto& [text, n] : {std::pair<std::string, int>{"A?", 2}, {"B?", 3}}) {
    const auto g = parse_graph6(text);
    CHECK(g.order() == n);
    CHECK(g.size() == 0);
    const auto report = validate_cubic(g);
    CHECK_FALSE(report.ok());
    CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::BadOrder; }));
  }
}

TEST_CASE("validate_cubic") {
  CHECK(validate_cubic(complete_graph_k4()).ok());

  SUBCASE("K4 minus an edge is not 3-regular at both ends") {
    std::vector<VertexPair> edges{{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const auto report = validate_cubic(CubicGraph(4, edges));
    std::vector<Vertex> bad;
    for (const auto& v : report.violations)
      if (v.kind == ViolationKind::NotThreeRegular) bad.push_back(v.vertex);
    std::sort(bad.begin(), bad.end());
    CHECK(bad == std::vector<Vertex>{0, 1});
  }
  SUBCASE("two disjoint K4s are disconnected") {
    std::vector<VertexPair> edges;
    for (int base : {0, 4})
      for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) edges.emplace_back(base + a, base + b);
    const auto report = validate_cubic(CubicGraph(8, edges));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == ViolationKind::Disconnected);
  }
  SUBCASE("loops and repeated neighbours are not simple") {
    const auto report = validate_cubic(CubicGraph(std::vector<std::vector<Vertex>>{{0, 1, 2}, {0, 2, 3}, {0, 1, 3}, {1, 2, 2}}));
    CHECK(std::any_of(report.violations.begin(), report.violations.end(),
                      [](const Violation& v) { return v.kind == ViolationKind::NotSimple; }));
  }
  SUBCASE("every corpus graph is a connected cubic graph") {
    for (const auto& g : testing::corpus_up_to(14)) CHECK(validate_cubic(g).ok());
  }
}

TEST_CASE("3-connectivity") {
  CHECK(is_three_connected(complete_graph_k4()));
  CHECK(is_three_connected(petersen_graph()));
  CHECK(oracle::three_connected(petersen_graph()));
  CHECK_FALSE(is_three_connected(two_k4_gadget()));
  CHECK_FALSE(oracle::three_connected(two_k4_gadget()));
  for (const auto& g : testing::corpus_up_to(10)) CHECK(is_three_connected(g) == oracle::three_connected(g));
}

TEST_CASE("automorphism group orders") {
  CHECK(automorphisms(complete_graph_k4()).size() == 24);
  CHECK(automorphisms(petersen_graph()).size() == 120);
  CHECK(automorphisms(cube_graph()).size() == 48);
  CHECK(automorphisms(prism_graph(3)).size() == 12);
  CHECK(automorphisms(franklin_graph()).size() == 48);
}

TEST_CASE("automorphisms form a group") {
  for (const auto& g : {petersen_graph(), franklin_graph(), prism_graph(5)}) {
    const auto aut = automorphisms(g);
    const std::set<VertexPermutation> group(aut.begin(), aut.end());
    CHECK(group.count(VertexPermutation::identity(g.order())) == 1);
    for (const auto& a : aut) {
      CHECK(a.preserves(g));
      CHECK(group.count(a.inverse()) == 1);
      for (const auto& b : aut) CHECK(group.count(a.compose(b)) == 1);
    }
  }
}

TEST_CASE("automorphisms agree with the naive backtracking oracle") {
  for (const auto& g : testing::corpus_up_to(10)) {
    std::set<std::vector<int>> got;
    for (const auto& p : automorphisms(g)) got.insert(std::vector<int>(p.image.begin(), p.image.end()));
    CHECK(got == oracle::automorphisms(g));
  }
}

TEST_CASE("the 14-vertex corpus contains asymmetric graphs") {
  int asymmetric = 0;
  for (const auto& g : testing::corpus(14)) {
    if (automorphisms(g).size() != 1) continue;
    ++asymmetric;
    CHECK(oracle::automorphisms(g).size() == 1);
  }
  CHECK(asymmetric > 0);
}

TEST_CASE("isomorphism witnesses") {
  const auto p = petersen_graph();
  std::vector<int> perm(10);
  std::iota(perm.begin(), perm.end(), 0);
  std::mt19937 rng(7);
  std::shuffle(perm.begin(), perm.end(), rng);
  const auto q = relabel(p, perm);
  const auto w = is_isomorphic(p, q);
  REQUIRE(w.has_value());
  for (const auto& e : p.edges()) CHECK(q.adjacent((*w)(e.first), (*w)(e.second)));
  CHECK_FALSE(is_isomorphic(p, franklin_graph()).has_value());

  const auto tens = testing::corpus(10);
  for (std::size_t i = 0; i < tens.size(); ++i)
    for (std::size_t j = 0; j < tens.size(); ++j) CHECK(is_isomorphic(tens[i], tens[j]).has_value() == (i == j));
}

TEST_CASE("Path3 canonical orientation") {
  const Path3 a(3, 1, 2, 0), b(0, 2, 1, 3);
  CHECK(a == b);
  CHECK(a.v == std::array<Vertex, 4>{0, 2, 1, 3});
  CHECK(a.endpoints() == VertexPair(0, 3));
  CHECK(Path3(0, 1, 2, 3).internally_disjoint(Path3(0, 4, 5, 3)));
  CHECK_FALSE(Path3(0, 1, 2, 3).internally_disjoint(Path3(0, 1, 5, 3)));
}

TEST_CASE("3-paths agree with the 4-nested-loop oracle") {
  for (const auto& g : testing::corpus_up_to(10)) {
    std::set<std::array<int, 4>> got;
    for (const auto& p : all_three_paths(g)) got.insert({p.v[0], p.v[1], p.v[2], p.v[3]});
    const auto want = oracle::three_paths(g);
    CHECK(got == want);
    for (Vertex u = 0; u < g.order(); ++u)
      for (Vertex v = u + 1; v < g.order(); ++v) {
        const auto between = three_paths_between(g, u, v);
        CHECK(between.size() <= 9);
        std::size_t expect = 0;
        for (const auto& p : want)
          if ((p[0] == u && p[3] == v) || (p[0] == v && p[3] == u)) ++expect;
        CHECK(between.size() == expect);
        for (const auto& p : between) CHECK(p.endpoints() == VertexPair(u, v));
      }
  }
}

TEST_CASE("3-paths between adjacent cube vertices go around the two incident squares") {
  const auto cube = cube_graph();
  const auto [u, v] = cube.edges().front();
  const auto paths = three_paths_between(cube, u, v);
  CHECK(paths.size() == 2);
  for (const auto& p : paths) CHECK(cube.adjacent(p.v[0], p.v[3]));
}

TEST_CASE("3-paths between adjacent K4 vertices use both other vertices") {
  const auto paths = three_paths_between(complete_graph_k4(), 0, 1);
  CHECK(paths.size() == 2);
  for (const auto& p : paths) {
    std::set<Vertex> inner{p.v[1], p.v[2]};
    CHECK(inner == std::set<Vertex>{2, 3});
  }
}

TEST_CASE("cycles of small length") {
  CHECK(cycles_of_length(complete_graph_k4(), 3).size() == 4);
  CHECK(cycles_of_length(petersen_graph(), 5).size() == 12);
  CHECK(cycles_of_length(petersen_graph(), 3).empty());
  CHECK(cycles_of_length(petersen_graph(), 4).empty());
  CHECK(cycles_of_length(cube_graph(), 4).size() == 6);
}

TEST_CASE("cycles agree with the naive oracle") {
  for (const auto& g : testing::corpus_up_to(10))
    for (int k = 3; k <= 6; ++k) {
      std::set<oracle::Cycle> got;
      const auto found = cycles_of_length(g, k);
      for (const auto& c : found) got.insert(oracle::canonical_cycle(std::vector<int>(c.begin(), c.end())));
      CHECK(got.size() == found.size());
      CHECK(got == oracle::cycles(g, k));
    }
}

TEST_CASE("reference graphs") {
  const auto f = franklin_graph();
  CHECK(validate_cubic(f).ok());
  CHECK(f.order() == 12);
  // LCF [5,-5]^6
  std::vector<VertexPair> lcf;
  for (int i = 0; i < 12; ++i) {
    lcf.emplace_back(i, (i + 1) % 12);
    const int j = ((i + (i % 2 == 0 ? 5 : -5)) % 12 + 12) % 12;
    if (i < j) lcf.emplace_back(i, j);
  }
  CHECK(is_isomorphic(f, CubicGraph(12, lcf)).has_value());
  CHECK(validate_cubic(prism_graph(6)).ok());
  CHECK(prism_graph(6).order() == 12);
}
