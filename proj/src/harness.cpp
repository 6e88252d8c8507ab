#include "scaffoldkit/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <mutex>
#include <ostream>
#include <thread>

namespace scaffold {

void VerificationReport::add(const GraphRecord& r) {
  ++graphs;
  systems += static_cast<int>(r.census_size);
  if (!r.injectivity_ok) ++injectivity_failures;
  if (!r.roundtrip_ok) ++roundtrip_failures;
  if (r.error) ++errors;
  for (const auto& [branches, runs] : r.branch_histogram)
    if (branches > 0) branched_runs += runs;
  records.push_back(r);
}

namespace {

GraphRecord check_systems(const CubicGraph& g, const std::vector<FacialSystem>& systems,
                          const std::vector<std::optional<ExtendedGraph>>& claimed, const VerifyOptions& opts) {
  GraphRecord rec;
  rec.graph6 = emit_graph6(g);
  rec.order = g.order();
  rec.census_size = systems.size();
  const auto aut = automorphisms(g);
  const int n = g.order();

  std::map<std::string, std::size_t> seen;  // canonical scaffold -> system index
  for (std::size_t i = 0; i < systems.size(); ++i) {
    const auto& fs = systems[i];
    try {
      ++rec.genus_histogram[euler_genus(g, fs)];
    } catch (const MalformedSystemError& e) {
      rec.roundtrip_ok = false;
      rec.witnesses.push_back(Json{{"kind", "malformed-system"}, {"system", to_json(fs, n)}, {"message", e.what()}});
      continue;
    }
    ExtendedGraph built;
    try {
      built = build_extended(g, fs);
    } catch (const CorruptSystemError& e) {
      rec.roundtrip_ok = false;
      rec.witnesses.push_back(Json{{"kind", "corrupt-system"}, {"system", to_json(fs, n)}, {"message", e.what()}});
      continue;
    }
    auto [it, fresh] = seen.try_emplace(canonical_extended(aut, built), i);
    if (!fresh && !systems_equivalent(aut, systems[it->second], fs)) {
      rec.injectivity_ok = false;
      rec.witnesses.push_back(Json{{"kind", "injectivity"},
                                   {"first", to_json(systems[it->second], n)},
                                   {"second", to_json(fs, n)},
                                   {"scaffold", to_json(built)}});
    }

    const ExtendedGraph& input = i < claimed.size() && claimed[i] ? *claimed[i] : built;
    try {
      const auto outcome = reconstruct(g, input, opts.reconstruction);
      ++rec.branch_histogram[outcome.branch_count];
      if (outcome.special != SpecialGraph::None) rec.specials.insert(to_string(outcome.special));
      if (!systems_equivalent(aut, outcome.system, fs)) {
        rec.roundtrip_ok = false;
        rec.witnesses.push_back(Json{{"kind", "roundtrip"},
                                     {"expected", to_json(fs, n)},
                                     {"got", to_json(outcome.system, n)},
                                     {"scaffold", to_json(input)}});
      }
    } catch (const ReconstructionError& e) {
      rec.roundtrip_ok = false;
      Json w{{"kind", "roundtrip"},
             {"error", to_string(e.kind())},
             {"message", e.what()},
             {"expected", to_json(fs, n)},
             {"scaffold", to_json(input)}};
      if (e.contradiction()) w["contradiction"] = to_json(*e.contradiction());
      rec.witnesses.push_back(std::move(w));
    }
  }
  return rec;
}

GraphRecord rejected(const std::string& graph6, const std::string& why) {
  GraphRecord rec;
  rec.graph6 = graph6;
  rec.error = why;
  rec.witnesses.push_back(Json{{"kind", "rejected"}, {"message", why}});
  return rec;
}

std::optional<std::string> admission_problem(const CubicGraph& g) {
  const auto report = validate_cubic(g);
  if (report.ok()) return std::nullopt;
  return "not a connected cubic graph: " + report.violations.front().detail;
}

}  // namespace

GraphRecord verify_graph(const CubicGraph& g, const VerifyOptions& opts) {
  if (auto why = admission_problem(g)) return rejected(emit_graph6(g), *why);
  try {
    const auto census = enumerate_polyhedral(g, opts.enumeration);
    return check_systems(g, census.systems, {}, opts);
  } catch (const SizeGuardError& e) {
    return rejected(emit_graph6(g), e.what());
  }
}

GraphRecord verify_census_entry(const CensusEntry& entry, const VerifyOptions& opts) {
  CubicGraph g;
  try {
    g = parse_graph6(entry.graph6);
  } catch (const Graph6Error& e) {
    return rejected(entry.graph6, e.what());
  }
  if (auto why = admission_problem(g)) return rejected(entry.graph6, *why);
  if (g.order() > opts.enumeration.max_n)
    return rejected(entry.graph6, "graph has " + std::to_string(g.order()) + " vertices; bound is " +
                                      std::to_string(opts.enumeration.max_n));
  if (entry.systems.empty()) return verify_graph(g, opts);
  return check_systems(g, entry.systems, entry.claimed, opts);
}

VerificationReport verify_entries(const std::string& corpus_id, const std::vector<CensusEntry>& entries,
                                  const VerifyOptions& opts, const std::function<void(const GraphRecord&)>& emit) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.corpus_id = corpus_id;
  // Per-graph work is parallel; enumeration inside each graph stays serial.
  VerifyOptions inner = opts;
  inner.enumeration.jobs = 1;
  const unsigned jobs =
      std::max(1U, std::min<unsigned>(opts.enumeration.jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size()))));

  std::vector<std::optional<GraphRecord>> results(entries.size());
  std::mutex mu;
  std::condition_variable ready;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      GraphRecord r = verify_census_entry(entries[i], inner);
      std::lock_guard lock(mu);
      results[i] = std::move(r);
      ready.notify_all();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned k = 0; k < jobs; ++k) pool.emplace_back(worker);
  for (std::size_t i = 0; i < entries.size(); ++i) {
    std::unique_lock lock(mu);
    ready.wait(lock, [&] { return results[i].has_value(); });
    GraphRecord r = std::move(*results[i]);
    results[i].reset();
    lock.unlock();
    if (emit) emit(r);
    report.add(r);
  }
  pool.clear();
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Json to_json(const GraphRecord& r) {
  Json genus = Json::object();
  for (const auto& [k, v] : r.genus_histogram) genus[std::to_string(k)] = v;
  Json branches = Json::object();
  for (const auto& [k, v] : r.branch_histogram) branches[std::to_string(k)] = v;
  Json j{{"graph6", r.graph6},
         {"n", r.order},
         {"census_size", r.census_size},
         {"genus_histogram", std::move(genus)},
         {"injectivity_ok", r.injectivity_ok},
         {"roundtrip_ok", r.roundtrip_ok},
         {"branch_histogram", std::move(branches)},
         {"specials", Json(std::vector<std::string>(r.specials.begin(), r.specials.end()))}};
  if (r.error) j["error"] = *r.error;
  if (!r.witnesses.empty()) j["witnesses"] = r.witnesses;
  return j;
}

Json aggregate_json(const VerificationReport& report) {
  std::set<std::string> specials;
  for (const auto& r : report.records) specials.insert(r.specials.begin(), r.specials.end());
  return Json{{"aggregate", true},
              {"corpus", report.corpus_id},
              {"graphs", report.graphs},
              {"systems", report.systems},
              {"injectivity_failures", report.injectivity_failures},
              {"roundtrip_failures", report.roundtrip_failures},
              {"errors", report.errors},
              {"branched_runs", report.branched_runs},
              {"specials", Json(std::vector<std::string>(specials.begin(), specials.end()))},
              {"ok", report.ok()},
              {"wall_seconds", report.wall_seconds}};
}

std::vector<CensusEntry> read_census_lines(const std::string& content) {
  std::vector<CensusEntry> out;
  std::size_t pos = 0;
  int line_no = 0;
  while (pos <= content.size()) {
    const std::size_t end = std::min(content.find('\n', pos), content.size());
    const std::string line = content.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw JsonFormatError("census line " + std::to_string(line_no) + ": " + e.what());
    }
    if (!j.contains("graph6") || !j["graph6"].is_string())
      throw JsonFormatError("census line " + std::to_string(line_no) + ": missing \"graph6\"");
    CensusEntry entry;
    entry.graph6 = j["graph6"].get<std::string>();
    if (j.contains("systems"))
      for (const auto& s : j["systems"]) entry.systems.push_back(facial_system_from_json(s));
    if (j.contains("scaffolds"))
      for (const auto& s : j["scaffolds"])
        entry.claimed.push_back(s.is_null() ? std::nullopt : std::optional(extended_graph_from_json(s)));
    out.push_back(std::move(entry));
  }
  return out;
}

namespace commands {

namespace {

void write_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int fail(std::ostream& err, std::ostream& out, const std::string& kind, const std::string& message) {
  write_json(out, Json{{"error", kind}, {"message", message}});
  err << "error: " << message << '\n';
  return 1;
}

}  // namespace

int validate(const std::string& corpus_content, std::ostream& out) {
  bool all_ok = true;
  int index = 0;
  for (const auto& line : read_corpus_lines(corpus_content)) {
    Json rec{{"index", index++}, {"graph6", line}};
    try {
      const auto g = parse_graph6(line);
      const auto report = validate_cubic(g);
      Json violations = Json::array();
      for (const auto& v : report.violations)
        violations.push_back(Json{{"kind", to_string(v.kind)}, {"vertex", v.vertex}, {"detail", v.detail}});
      rec["n"] = g.order();
      rec["ok"] = report.ok();
      rec["three_connected"] = report.ok() && is_three_connected(g);
      rec["violations"] = std::move(violations);
      all_ok = all_ok && report.ok();
    } catch (const Graph6Error& e) {
      rec["ok"] = false;
      rec["violations"] = Json::array({Json{{"kind", "parse-error"}, {"offset", e.offset()}, {"detail", e.what()}}});
      all_ok = false;
    }
    write_json(out, rec);
  }
  return all_ok ? 0 : 1;
}

int enumerate(const std::string& graph6, const Common& c, std::ostream& out, std::ostream& err) {
  try {
    const auto g = parse_graph6(graph6);
    if (const auto report = validate_cubic(g); !report.ok())
      return fail(err, out, "invalid-input", report.violations.front().detail);
    write_json(out, to_json(enumerate_polyhedral(g, {c.max_n, c.jobs})));
    return 0;
  } catch (const Graph6Error& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const SizeGuardError& e) {
    return fail(err, out, "size-guard", e.what());
  }
}

int extend(const std::string& graph6, const std::string& system_json, std::ostream& out, std::ostream& err) {
  try {
    const auto g = parse_graph6(graph6);
    int n = 0;
    const auto fs = facial_system_from_json(Json::parse(system_json), &n);
    if (n != g.order()) return fail(err, out, "invalid-input", "system order does not match the graph");
    if (!covers_each_edge_twice(g, fs))
      return fail(err, out, "invalid-input", "faces do not cover every edge of the graph twice");
    write_json(out, to_json(build_extended(g, fs)));
    return 0;
  } catch (const Graph6Error& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const Json::exception& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const JsonFormatError& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const CorruptSystemError& e) {
    return fail(err, out, "corrupt-system", e.what());
  }
}

int reconstruct(const std::string& extended_json, std::ostream& out, std::ostream& err, int max_branch_depth) {
  try {
    const auto ext = extended_graph_from_json(Json::parse(extended_json));
    const auto outcome = scaffold::reconstruct(ext.graph, ext, {max_branch_depth});
    write_json(out, to_json(outcome, ext.graph.order()));
    return 0;
  } catch (const ReconstructionError& e) {
    Json j{{"error", to_string(e.kind())}, {"message", e.what()}};
    if (e.contradiction()) j["contradiction"] = to_json(*e.contradiction());
    write_json(out, j);
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const Graph6Error& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const Json::exception& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const JsonFormatError& e) {
    return fail(err, out, "parse-error", e.what());
  }
}

int verify_bijection(const std::string& corpus_id, const std::vector<CensusEntry>& entries, const Common& c,
                     std::ostream& out, std::ostream& err) {
  VerifyOptions opts;
  opts.enumeration = {c.max_n, c.jobs};
  const auto report = verify_entries(corpus_id, entries, opts, [&](const GraphRecord& r) {
    write_json(out, to_json(r));
    if (!r.ok()) err << "failure on " << r.graph6 << '\n';
  });
  write_json(out, aggregate_json(report));
  return report.ok() ? 0 : 1;
}

int detect(const std::string& input, bool input_is_extended, const Common& c, std::ostream& out,
           std::ostream& err) {
  auto describe = [](const ExtendedGraph& ext) {
    Json forks = Json::array();
    for (const auto& f : find_forks(ext)) forks.push_back(f.vertices);
    Json butterflies = Json::array();
    for (const auto& b : detect_butterflies(ext))
      butterflies.push_back(Json{{"kind", b.kind == ButterflyKind::B1 ? "B1" : "B2"}, {"vertices", b.vertices}});
    return Json{{"forks", std::move(forks)}, {"butterflies", std::move(butterflies)}};
  };
  try {
    if (input_is_extended) {
      const auto ext = extended_graph_from_json(Json::parse(input));
      Json j = describe(ext);
      j["graph6"] = emit_graph6(ext.graph);
      j["special"] = to_string(recognize_special(ext.graph));
      write_json(out, j);
      return 0;
    }
    const auto g = parse_graph6(input);
    if (const auto report = validate_cubic(g); !report.ok())
      return fail(err, out, "invalid-input", report.violations.front().detail);
    const auto census = enumerate_polyhedral(g, {c.max_n, c.jobs});
    Json systems = Json::array();
    for (const auto& fs : census.systems) {
      Json j = describe(build_extended(g, fs));
      j["faces"] = to_json(fs, g.order())["faces"];
      systems.push_back(std::move(j));
    }
    write_json(out, Json{{"graph6", emit_graph6(g)},
                         {"special", to_string(recognize_special(g))},
                         {"systems", std::move(systems)}});
    return 0;
  } catch (const Graph6Error& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const Json::exception& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const JsonFormatError& e) {
    return fail(err, out, "parse-error", e.what());
  } catch (const SizeGuardError& e) {
    return fail(err, out, "size-guard", e.what());
  }
}

}  // namespace commands

}  // namespace scaffold
