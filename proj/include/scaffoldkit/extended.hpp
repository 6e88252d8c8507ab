#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "scaffoldkit/embedding.hpp"
#include "scaffoldkit/graph.hpp"

namespace scaffold {

struct ScaffoldEdge {
  VertexPair endpoints;
  int multiplicity = 1;
  /// Facial 3-paths that induced the edge; diagnostics only, may be empty on input.
  std::vector<Path3> witnesses;
};

/// G plus its scaffold edges. Graph edges and scaffold edges are separate
/// classes, so a scaffold edge may run parallel to a graph edge.
struct ExtendedGraph {
  CubicGraph graph;
  std::map<VertexPair, ScaffoldEdge> scaffold;

  int multiplicity(VertexPair p) const {
    auto it = scaffold.find(p);
    return it == scaffold.end() ? 0 : it->second.multiplicity;
  }
  bool contains(VertexPair p) const { return scaffold.count(p) != 0; }
  std::map<VertexPair, int> multiplicities() const;
  int count_with_multiplicity(int m) const;
};

class CorruptSystemError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every Path3 appearing as four consecutive vertices of some walk
/// (closed windows of triangles excluded), deduplicated and sorted.
std::vector<Path3> facial_three_paths(const FacialSystem& fs);

ExtendedGraph build_extended(const CubicGraph& g, const FacialSystem& fs);

/// Compares endpoint -> multiplicity maps; throws UsageError on different graphs.
bool extended_equal(const ExtendedGraph& a, const ExtendedGraph& b);

ExtendedGraph relabel_extended(const ExtendedGraph& ext, const VertexPermutation& p);
/// Minimum serialisation of the scaffold map over the given automorphisms.
std::string canonical_extended(const std::vector<VertexPermutation>& aut, const ExtendedGraph& ext);

}  // namespace scaffold
