#include "scaffoldkit/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <set>
#include <string>
#include <thread>
#include <unordered_map>

#include "face_tracer.hpp"

namespace scaffold {

SchemeSpace::SchemeSpace(const CubicGraph& g) : graph_(&g), order_(g.order()) {
  const int n = g.order();
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<char> in_tree(static_cast<std::size_t>(g.size()), 0);
  for (Vertex root = 0; root < n; ++root) {
    if (seen[static_cast<std::size_t>(root)]) continue;
    std::deque<Vertex> queue{root};
    seen[static_cast<std::size_t>(root)] = 1;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (seen[static_cast<std::size_t>(w)]) continue;
        seen[static_cast<std::size_t>(w)] = 1;
        in_tree[static_cast<std::size_t>(g.edge_index(v, w))] = 1;
        queue.push_back(w);
      }
    }
  }
  for (int e = 0; e < g.size(); ++e) (in_tree[static_cast<std::size_t>(e)] ? tree_ : cotree_).push_back(e);
  if (order_ + static_cast<int>(cotree_.size()) >= 63) throw SizeGuardError("scheme space exceeds 2^62");
}

EmbeddingScheme SchemeSpace::at(std::uint64_t index) const {
  EmbeddingScheme s;
  fill(index, s);
  return s;
}

void SchemeSpace::fill(std::uint64_t index, EmbeddingScheme& s) const {
  const auto& g = *graph_;
  s.rotation.resize(static_cast<std::size_t>(order_));
  for (Vertex v = 0; v < order_; ++v) {
    const auto nb = g.neighbors(v);
    auto& r = s.rotation[static_cast<std::size_t>(v)];
    if ((index >> v) & 1U)
      r = {nb[0], nb[2], nb[1]};
    else
      r = {nb[0], nb[1], nb[2]};
  }
  s.signature.assign(static_cast<std::size_t>(g.size()), 1);
  for (std::size_t k = 0; k < cotree_.size(); ++k)
    if ((index >> (static_cast<std::size_t>(order_) + k)) & 1U)
      s.signature[static_cast<std::size_t>(cotree_[k])] = -1;
}

std::vector<FacialSystem> enumerate_polyhedral_labeled(const CubicGraph& g, const EnumerationOptions& opts,
                                                       std::uint64_t* scanned) {
  if (g.order() > opts.max_n)
    throw SizeGuardError("graph has " + std::to_string(g.order()) + " vertices; bound is " +
                         std::to_string(opts.max_n));
  const SchemeSpace space(g);
  const std::uint64_t total = space.size();
  const unsigned jobs = std::max(1U, std::min<unsigned>(opts.jobs, 64));

  // Shards are contiguous index ranges, i.e. fixed high-order bits.
  std::vector<std::set<FacialSystem>> shard_results(jobs);
  auto work = [&](unsigned shard) {
    FaceTracer tracer(g);
    const bool fast = g.order() <= 64 && g.size() <= 64;
    EmbeddingScheme scheme;
    const std::uint64_t lo = total * shard / jobs;
    const std::uint64_t hi = total * (shard + 1) / jobs;
    auto& out = shard_results[shard];
    for (std::uint64_t i = lo; i < hi; ++i) {
      space.fill(i, scheme);
      if (fast && !tracer.polyhedral_scheme(scheme)) continue;
      auto fs = tracer.trace(scheme);
      if (polyhedral(g, fs)) out.insert(std::move(fs));
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> workers;
    for (unsigned s = 0; s < jobs; ++s) workers.emplace_back(work, s);
  }
  std::set<FacialSystem> merged;
  for (auto& r : shard_results) merged.merge(r);
  if (scanned) *scanned = total;
  return {merged.begin(), merged.end()};
}

EmbeddingCensus enumerate_polyhedral(const CubicGraph& g, const EnumerationOptions& opts) {
  EmbeddingCensus census;
  census.graph = g;
  census.labeled_systems = enumerate_polyhedral_labeled(g, opts, &census.scheme_count_scanned);
  const auto aut = automorphisms(g);
  // canonical key -> least labelled representative of the class
  std::map<std::string, FacialSystem> classes;
  for (const auto& fs : census.labeled_systems) {
    auto key = canonical_system(aut, fs);
    auto it = classes.find(key);
    if (it == classes.end())
      classes.emplace(std::move(key), fs);
    else if (fs < it->second)
      it->second = fs;
  }
  for (auto& [key, fs] : classes) {
    ++census.genus_histogram[euler_genus(g, fs)];
    census.systems.push_back(std::move(fs));
  }
  return census;
}

}  // namespace scaffold
