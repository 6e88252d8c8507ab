#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "scaffoldkit/embedding.hpp"
#include "scaffoldkit/extended.hpp"
#include "scaffoldkit/graph.hpp"

namespace scaffold {

enum class PathState : std::uint8_t { Unknown, Facial, NonFacial };

/// Deduction rules. R1..R8 are the propagation rules; Probe marks a
/// disjunction settled because one side contradicts at fixpoint; Branch marks
/// a search decision.
enum class Rule : std::uint8_t {
  NoScaffold,
  R1Continuation,
  R2UniqueWitness,
  R3Triangle,
  R4Quadrilateral,
  R5ChordShortcut,
  R6CycleClosure,
  R7Multiplicity,
  R8Elimination,
  Probe,
  Branch,
};

std::string rule_id(Rule r);

struct Decision {
  std::size_t path;  // index into ReconstructionContext::paths
  PathState value;
  Rule rule;
};

/// Immutable lookup tables for one (graph, scaffold) input.
class ReconstructionContext;

struct ReconstructionState {
  std::shared_ptr<const ReconstructionContext> context;
  std::vector<PathState> assignment;
  std::vector<Decision> trail;
  int branch_depth = 0;

  std::size_t unknown_count() const;
  PathState value_of(const Path3& p) const;
  const std::vector<Path3>& paths() const;
};

struct Contradiction {
  struct Cause {
    Path3 path;
    PathState value;
    Rule rule;
  };

  Rule rule;
  std::string detail;
  std::vector<Path3> paths;
  /// Earlier decisions on the clashing paths.
  std::vector<Cause> causes;
};

class ReconstructionError : public std::runtime_error {
 public:
  enum class Kind { InvalidInput, NotAnExtendedGraph, UniquenessViolation, BranchDepthExceeded };

  ReconstructionError(Kind kind, const std::string& what, std::optional<Contradiction> c = std::nullopt)
      : std::runtime_error(what), kind_(kind), contradiction_(std::move(c)) {}
  Kind kind() const { return kind_; }
  const std::optional<Contradiction>& contradiction() const { return contradiction_; }

 private:
  Kind kind_;
  std::optional<Contradiction> contradiction_;
};

std::string to_string(ReconstructionError::Kind kind);

/// All Path3 UNKNOWN except those whose endpoint pair carries no scaffold
/// edge, which start NONFACIAL. Throws InvalidInput on loops, multiplicity
/// outside {1, 2}, or a scaffold over a different graph.
ReconstructionState init_state(const CubicGraph& g, const ExtendedGraph& ext);

/// Drives R1..R8 to their least fixpoint. Returns the first contradiction
/// met; the state is then left partially updated.
std::optional<Contradiction> propagate(ReconstructionState& state);

/// Re-applies a trail to a fresh initial state.
std::vector<PathState> replay(const ReconstructionState& state);

struct Fork {
  // t1, t2, t3, t4, t4'
  std::array<Vertex, 5> vertices{};
  auto operator<=>(const Fork&) const = default;
};

enum class ButterflyKind { B1, B2 };

struct Butterfly {
  ButterflyKind kind;
  // t0, t0', t1, t2, t3, t4, t4', t5, t5'
  std::array<Vertex, 9> vertices{};
  auto operator<=>(const Butterfly&) const = default;
};

std::vector<Fork> find_forks(const ExtendedGraph& ext);
std::vector<Butterfly> detect_butterflies(const ExtendedGraph& ext);

enum class SpecialGraph { None, Petersen, Franklin };
std::string to_string(SpecialGraph s);
SpecialGraph recognize_special(const CubicGraph& g);

class AssemblyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Chains the facial Path3 set (everything else non-facial) into closed
/// walks. Triangle faces come from 2-paths with no facial continuation.
FacialSystem assemble_walks(const CubicGraph& g, std::span<const Path3> facial);

struct ReconstructOptions {
  int max_branch_depth = 32;
};

struct ReconstructionOutcome {
  FacialSystem system;
  /// Every valid completion found; all are Aut(G)-equivalent to `system`.
  std::vector<FacialSystem> solutions;
  int branch_count = 0;
  SpecialGraph special = SpecialGraph::None;
  std::map<std::string, int> used_rules;
  std::vector<Decision> trail;
};

ReconstructionOutcome reconstruct(const CubicGraph& g, const ExtendedGraph& ext, const ReconstructOptions& opts = {});

}  // namespace scaffold
