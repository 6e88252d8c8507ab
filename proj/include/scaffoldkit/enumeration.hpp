#pragma once

#include <cstdint>
#include <iterator>
#include <map>
#include <stdexcept>
#include <vector>

#include "scaffoldkit/embedding.hpp"
#include "scaffoldkit/graph.hpp"

namespace scaffold {

/// The normalised scheme space of a cubic graph: one rotation bit per vertex
/// and one signature bit per edge outside the lowest-index BFS tree.
///
/// Index bit v (v < n) flips the rotation at v from ascending (a b c) to
/// (a c b); bit n + k sets the k-th non-tree edge negative.
class SchemeSpace {
 public:
  explicit SchemeSpace(const CubicGraph& g);

  std::uint64_t size() const { return std::uint64_t{1} << (order_ + static_cast<int>(cotree_.size())); }
  EmbeddingScheme at(std::uint64_t index) const;
  /// Same as at(), reusing the storage of `out`.
  void fill(std::uint64_t index, EmbeddingScheme& out) const;
  const std::vector<int>& tree_edges() const { return tree_; }
  const std::vector<int>& cotree_edges() const { return cotree_; }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = EmbeddingScheme;
    using difference_type = std::ptrdiff_t;

    iterator(const SchemeSpace* space, std::uint64_t index) : space_(space), index_(index) {}
    EmbeddingScheme operator*() const { return space_->at(index_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    const SchemeSpace* space_;
    std::uint64_t index_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  const CubicGraph* graph_;
  int order_;
  std::vector<int> tree_;
  std::vector<int> cotree_;
};

class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EnumerationOptions {
  int max_n = 14;
  unsigned jobs = 1;
};

struct EmbeddingCensus {
  CubicGraph graph;
  /// Pairwise inequivalent polyhedral systems, ordered by canonical key.
  std::vector<FacialSystem> systems;
  std::uint64_t scheme_count_scanned = 0;
  std::map<int, int> genus_histogram;
  /// Every distinct labelled polyhedral system met during the scan.
  std::vector<FacialSystem> labeled_systems;
};

/// Distinct labelled polyhedral systems over the whole scheme space.
std::vector<FacialSystem> enumerate_polyhedral_labeled(const CubicGraph& g, const EnumerationOptions& opts,
                                                       std::uint64_t* scanned = nullptr);

EmbeddingCensus enumerate_polyhedral(const CubicGraph& g, const EnumerationOptions& opts = {});

}  // namespace scaffold
