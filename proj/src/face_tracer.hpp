#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <vector>

#include "scaffoldkit/embedding.hpp"

namespace scaffold {

/// Face tracing for signed rotation systems on a fixed cubic graph.
///
/// A traversal state is (vertex v, rotation slot i, local orientation e):
/// leave v along rot[v][i]; at the far end flip e if the edge is negative and
/// take the next slot (e == 0) or the previous one (e == 1). Each face shows up
/// as two mutually reverse orbits; only one of them is emitted.
class FaceTracer {
 public:
  explicit FaceTracer(const CubicGraph& g) : g_(g) {
    const auto n = static_cast<std::size_t>(g.order());
    pos_.resize(n);
    edge_.resize(n);
    visited_.resize(n * 6);
  }

  /// Polyhedrality of the traced system without materialising it. Stops at
  /// the first walk that revisits a vertex. Needs n <= 64 and m <= 64.
  bool polyhedral_scheme(const EmbeddingScheme& s) {
    load(s);
    std::fill(visited_.begin(), visited_.end(), 0);
    vmasks_.clear();
    emasks_.clear();
    for (std::size_t start = 0; start < visited_.size(); ++start) {
      if (visited_[start]) continue;
      std::uint64_t vm = 0, em = 0;
      std::size_t state = start;
      do {
        const auto v = static_cast<std::size_t>(state / 6);
        const auto slot = static_cast<std::size_t>((state / 2) % 3);
        const int e = static_cast<int>(state % 2);
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (vm & bit) return false;
        vm |= bit;
        visited_[state] = 1;
        const Vertex w = pos_[v][slot];
        const int edge = edge_[v][slot];
        em |= std::uint64_t{1} << edge;
        const int e2 = s.signature[static_cast<std::size_t>(edge)] < 0 ? 1 - e : e;
        const int j = slot_of(w, static_cast<Vertex>(v));
        visited_[id(w, j, 1 - e2)] = 1;
        state = id(w, e2 == 0 ? (j + 1) % 3 : (j + 2) % 3, e2);
      } while (state != start);
      for (std::size_t k = 0; k < vmasks_.size(); ++k) {
        const int shared = std::popcount(vm & vmasks_[k]);
        if (shared <= 1) continue;
        if (shared > 2 || std::popcount(em & emasks_[k]) != 1) return false;
      }
      vmasks_.push_back(vm);
      emasks_.push_back(em);
    }
    return true;
  }

  FacialSystem trace(const EmbeddingScheme& s) {
    load(s);
    std::fill(visited_.begin(), visited_.end(), 0);
    std::vector<FacialWalk> walks;
    for (std::size_t start = 0; start < visited_.size(); ++start) {
      if (visited_[start]) continue;
      std::vector<Vertex> seq;
      std::size_t state = start;
      do {
        const auto v = static_cast<Vertex>(state / 6);
        const int slot = static_cast<int>((state / 2) % 3);
        const int e = static_cast<int>(state % 2);
        seq.push_back(v);
        visited_[state] = 1;
        const Vertex w = pos_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)];
        const int sign = s.signature[static_cast<std::size_t>(edge_[static_cast<std::size_t>(v)][static_cast<std::size_t>(slot)])];
        const int e2 = sign < 0 ? 1 - e : e;
        const int j = slot_of(w, v);
        visited_[id(w, j, 1 - e2)] = 1;  // reverse traversal of this step
        const int next = e2 == 0 ? (j + 1) % 3 : (j + 2) % 3;
        state = id(w, next, e2);
      } while (state != start);
      walks.push_back(FacialWalk{std::move(seq)});
    }
    return FacialSystem::from_walks(std::move(walks));
  }

 private:
  void load(const EmbeddingScheme& s) {
    for (std::size_t v = 0; v < pos_.size(); ++v)
      for (std::size_t i = 0; i < 3; ++i) {
        const Vertex w = s.rotation[v][i];
        pos_[v][i] = w;
        edge_[v][i] = g_.edge_index(static_cast<Vertex>(v), w);
      }
  }

  static std::size_t id(Vertex v, int slot, int e) {
    return static_cast<std::size_t>(v) * 6 + static_cast<std::size_t>(slot) * 2 + static_cast<std::size_t>(e);
  }
  int slot_of(Vertex v, Vertex w) const {
    const auto& r = pos_[static_cast<std::size_t>(v)];
    return r[0] == w ? 0 : (r[1] == w ? 1 : 2);
  }

  const CubicGraph& g_;
  std::vector<std::array<Vertex, 3>> pos_;
  std::vector<std::array<int, 3>> edge_;
  std::vector<char> visited_;
  std::vector<std::uint64_t> vmasks_, emasks_;
};

}  // namespace scaffold
