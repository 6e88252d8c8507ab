#pragma once

#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "scaffoldkit/enumeration.hpp"
#include "scaffoldkit/json_io.hpp"
#include "scaffoldkit/reconstruct.hpp"

namespace scaffold {

/// Per-graph outcome of the bijection check.
struct GraphRecord {
  std::string graph6;
  int order = 0;
  std::size_t census_size = 0;
  std::map<int, int> genus_histogram;
  bool injectivity_ok = true;
  bool roundtrip_ok = true;
  std::map<int, int> branch_histogram;  // branch_count -> runs
  std::set<std::string> specials;
  std::optional<std::string> error;  // graph rejected before checking
  std::vector<Json> witnesses;

  bool ok() const { return injectivity_ok && roundtrip_ok && !error; }
};

struct VerificationReport {
  std::string corpus_id;
  std::vector<GraphRecord> records;
  int graphs = 0;
  int systems = 0;
  int injectivity_failures = 0;
  int roundtrip_failures = 0;
  int errors = 0;
  int branched_runs = 0;
  double wall_seconds = 0;

  bool ok() const { return injectivity_failures == 0 && roundtrip_failures == 0 && errors == 0; }
  void add(const GraphRecord& r);
};

/// A census entry to verify; `claimed` holds the scaffold to feed the
/// reconstructor for each system (defaults to build_extended).
struct CensusEntry {
  std::string graph6;
  std::vector<FacialSystem> systems;
  std::vector<std::optional<ExtendedGraph>> claimed;
};

struct VerifyOptions {
  EnumerationOptions enumeration;
  ReconstructOptions reconstruction;
};

GraphRecord verify_graph(const CubicGraph& g, const VerifyOptions& opts);
GraphRecord verify_census_entry(const CensusEntry& entry, const VerifyOptions& opts);

/// Runs every entry on `jobs` workers; `emit` sees records in input order.
VerificationReport verify_entries(const std::string& corpus_id, const std::vector<CensusEntry>& entries,
                                  const VerifyOptions& opts, const std::function<void(const GraphRecord&)>& emit);

Json to_json(const GraphRecord& r);
Json aggregate_json(const VerificationReport& report);

/// Census JSON-lines file: one Census object per line, optionally carrying a
/// "scaffolds" array of ExtendedGraph objects aligned with "systems".
std::vector<CensusEntry> read_census_lines(const std::string& content);

/// Commands behind the CLI. Each writes JSON to `out`, diagnostics to `err`,
/// and returns the process exit code.
namespace commands {

struct Common {
  int max_n = 14;
  unsigned jobs = 1;
};

int validate(const std::string& corpus_content, std::ostream& out);
int enumerate(const std::string& graph6, const Common& c, std::ostream& out, std::ostream& err);
int extend(const std::string& graph6, const std::string& system_json, std::ostream& out, std::ostream& err);
int reconstruct(const std::string& extended_json, std::ostream& out, std::ostream& err, int max_branch_depth = 32);
int verify_bijection(const std::string& corpus_id, const std::vector<CensusEntry>& entries, const Common& c,
                     std::ostream& out, std::ostream& err);
int detect(const std::string& input, bool input_is_extended, const Common& c, std::ostream& out,
           std::ostream& err);

}  // namespace commands

}  // namespace scaffold
