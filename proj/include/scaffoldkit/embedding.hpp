#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "scaffoldkit/graph.hpp"

namespace scaffold {

/// Signed rotation system: a cyclic order of the three neighbours at every
/// vertex plus a sign per edge (indexed like CubicGraph::edges()).
struct EmbeddingScheme {
  std::vector<std::array<Vertex, 3>> rotation;
  std::vector<std::int8_t> signature;

  bool valid_for(const CubicGraph& g) const;
};

/// Closed boundary walk of one face, as its cyclic vertex sequence.
///
/// Canonical form: the least rotation of either traversal direction.
struct FacialWalk {
  std::vector<Vertex> vertices;

  static FacialWalk canonical(std::vector<Vertex> cyclic);
  std::size_t length() const { return vertices.size(); }
  bool is_cycle() const;
  /// Undirected edges traversed, with repetition.
  std::vector<VertexPair> edge_list() const;

  auto operator<=>(const FacialWalk&) const = default;
};

/// Set of facial walks of one embedding, kept sorted.
struct FacialSystem {
  std::vector<FacialWalk> walks;

  static FacialSystem from_walks(std::vector<FacialWalk> walks);
  FacialSystem relabeled(const VertexPermutation& p) const;
  /// Walk-set serialisation used for canonical keys.
  std::string serialize() const;

  auto operator<=>(const FacialSystem&) const = default;
};

FacialSystem trace_faces(const CubicGraph& g, const EmbeddingScheme& s);

class MalformedSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// 2 - n + m - f; throws MalformedSystemError when negative.
int euler_genus(const CubicGraph& g, const FacialSystem& fs);

/// Every edge is covered exactly twice across the walk multiset.
bool covers_each_edge_twice(const CubicGraph& g, const FacialSystem& fs);

enum class PolyhedralityIssue { WalkNotCycle, ImproperPair };

struct PolyhedralityViolation {
  PolyhedralityIssue kind;
  std::size_t first = 0;   // walk index
  std::size_t second = 0;  // second walk index (ImproperPair only)
  std::vector<Vertex> shared_vertices;
  std::vector<VertexPair> shared_edges;
};

struct PolyhedralityReport {
  std::vector<PolyhedralityViolation> violations;
  bool ok() const { return violations.empty(); }
};

PolyhedralityReport is_polyhedral(const CubicGraph& g, const FacialSystem& fs);
/// Same predicate without building a report; used on hot paths.
bool polyhedral(const CubicGraph& g, const FacialSystem& fs);

bool systems_equivalent(const CubicGraph& g, const FacialSystem& a, const FacialSystem& b);
bool systems_equivalent(const std::vector<VertexPermutation>& aut, const FacialSystem& a, const FacialSystem& b);

/// Minimum serialisation of the walk set over Aut(g).
std::string canonical_system(const CubicGraph& g, const FacialSystem& fs);
std::string canonical_system(const std::vector<VertexPermutation>& aut, const FacialSystem& fs);

}  // namespace scaffold
