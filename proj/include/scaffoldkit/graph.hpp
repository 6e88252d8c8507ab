#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace scaffold {

using Vertex = std::int32_t;

/// Unordered vertex pair, stored with first < second.
struct VertexPair {
  Vertex first = 0;
  Vertex second = 0;

  VertexPair() = default;
  VertexPair(Vertex a, Vertex b) : first(a < b ? a : b), second(a < b ? b : a) {}

  auto operator<=>(const VertexPair&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with ordered adjacency lists.
///
/// Parsing produces arbitrary simple graphs; everything downstream of
/// validate_cubic() assumes the cubic invariants hold.
class CubicGraph {
 public:
  CubicGraph() = default;
  /// Builds from an edge list. Adjacency lists come out sorted ascending.
  CubicGraph(int n, std::span<const VertexPair> edges);
  /// Builds from explicit adjacency lists (kept verbatim, order included).
  explicit CubicGraph(std::vector<std::vector<Vertex>> adjacency);

  int order() const { return static_cast<int>(adj_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(Vertex u, Vertex v) const {
    return matrix_[static_cast<std::size_t>(u) * adj_.size() + static_cast<std::size_t>(v)] != 0;
  }

  /// Edges as (u < v), sorted lexicographically.
  const std::vector<VertexPair>& edges() const { return edges_; }
  /// Index into edges(), or -1 if u and v are not adjacent.
  int edge_index(Vertex u, Vertex v) const;

  const std::vector<std::vector<Vertex>>& adjacency() const { return adj_; }

  /// Vertex-for-vertex equality (same n, same edge set).
  bool same_labeled_graph(const CubicGraph& other) const { return edges_ == other.edges_ && order() == other.order(); }

 private:
  void index();

  std::vector<std::vector<Vertex>> adj_;
  std::vector<VertexPair> edges_;
  std::vector<std::uint8_t> matrix_;
  std::vector<int> edge_id_;
};

/// A 3-path (t0 t1 t2 t3); the stored orientation is the lexicographically
/// smaller of the quadruple and its reverse.
struct Path3 {
  std::array<Vertex, 4> v{};

  Path3() = default;
  Path3(Vertex t0, Vertex t1, Vertex t2, Vertex t3);

  VertexPair endpoints() const { return {v[0], v[3]}; }
  bool internally_disjoint(const Path3& other) const;

  auto operator<=>(const Path3&) const = default;
};

/// Bijection on vertex ids: image[v] is where v goes.
struct VertexPermutation {
  std::vector<Vertex> image;

  static VertexPermutation identity(int n);
  Vertex operator()(Vertex v) const { return image[static_cast<std::size_t>(v)]; }
  /// (this ∘ other)(v) = this(other(v)).
  VertexPermutation compose(const VertexPermutation& other) const;
  VertexPermutation inverse() const;
  bool preserves(const CubicGraph& g) const;

  auto operator<=>(const VertexPermutation&) const = default;
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

CubicGraph parse_graph6(std::string_view text);
std::string emit_graph6(const CubicGraph& g);

/// Reads a corpus: one graph6 line per graph, blank and '#' lines skipped.
std::vector<std::string> read_corpus_lines(std::string_view content);

enum class ViolationKind { NotThreeRegular, NotSimple, Disconnected, BadOrder };

struct Violation {
  ViolationKind kind;
  Vertex vertex = -1;  // offending vertex where one applies
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

std::string to_string(ViolationKind kind);

ValidationReport validate_cubic(const CubicGraph& g);

bool is_connected(const CubicGraph& g);
bool is_three_connected(const CubicGraph& g);

std::vector<VertexPermutation> automorphisms(const CubicGraph& g);
/// Witness mapping g's vertex v to h's vertex witness(v), if one exists.
std::optional<VertexPermutation> is_isomorphic(const CubicGraph& g, const CubicGraph& h);

std::vector<Path3> three_paths_between(const CubicGraph& g, Vertex u, Vertex v);
/// Every Path3 of g, sorted.
std::vector<Path3> all_three_paths(const CubicGraph& g);

/// Simple cycles of length k (3..6) as vertex sequences starting at their
/// smallest vertex, oriented so the second vertex is below the last.
std::vector<std::vector<Vertex>> cycles_of_length(const CubicGraph& g, int k);

/// Reference graphs used by tests, recognition and the CLI.
CubicGraph petersen_graph();
/// Franklin graph labelled t0,t0',t1,t2,t3,t4,t4',t5,t5',x0,x2,x5 = 0..11
/// (the labelling of the butterfly-two analysis).
CubicGraph franklin_graph();
CubicGraph complete_graph_k4();
CubicGraph cube_graph();
CubicGraph prism_graph(int k);

}  // namespace scaffold
