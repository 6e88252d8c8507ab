// scaffoldkit: polyhedral embeddings of cubic graphs and their scaffold edges.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "scaffoldkit/harness.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// A graph6 argument may also name a file; its first graph line is used.
std::string graph6_argument(const std::string& arg) {
  if (!std::filesystem::is_regular_file(arg)) return arg;
  const auto lines = scaffold::read_corpus_lines(slurp(arg));
  if (lines.empty()) throw std::runtime_error(arg + " holds no graph6 line");
  return lines.front();
}

std::vector<scaffold::CensusEntry> corpus_entries(const std::string& path) {
  std::vector<scaffold::CensusEntry> entries;
  for (auto& line : scaffold::read_corpus_lines(slurp(path))) entries.push_back({std::move(line), {}, {}});
  return entries;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Polyhedral embeddings of cubic graphs, scaffold edges and reconstruction"};
  app.require_subcommand(1);

  scaffold::commands::Common common;
  std::string out_path;
  app.add_option("--max-n", common.max_n, "Largest graph order accepted for enumeration")
      ->envname("SCAFFOLDKIT_MAX_N")
      ->capture_default_str();
  app.add_option("--jobs", common.jobs, "Worker threads")->capture_default_str();
  app.add_option("--out", out_path, "Write output here instead of stdout");

  auto* validate = app.add_subcommand("validate", "Check a graph6 corpus for connected cubic graphs");
  std::string validate_file;
  validate->add_option("corpus", validate_file, "graph6 corpus file ('-' for stdin)")->required();

  auto* enumerate = app.add_subcommand("enumerate", "Census of polyhedral embeddings of one graph");
  std::string enumerate_g6;
  enumerate->add_option("graph6", enumerate_g6, "graph6 string or file")->required();

  auto* extend = app.add_subcommand("extend", "Scaffold edges of a facial system");
  std::string extend_g6, extend_system;
  extend->add_option("graph6", extend_g6, "graph6 string or file")->required();
  extend->add_option("system", extend_system, "FacialSystem JSON file ('-' for stdin)")->required();

  auto* rebuild = app.add_subcommand("reconstruct", "Rebuild the facial system from an extended graph");
  std::string rebuild_file;
  int max_depth = 32;
  rebuild->add_option("extended", rebuild_file, "ExtendedGraph JSON file ('-' for stdin)")->required();
  rebuild->add_option("--max-depth", max_depth, "Branch depth cap")->capture_default_str();

  auto* verify = app.add_subcommand("verify-bijection", "Injectivity and round-trip checks over a corpus");
  std::string verify_corpus, census_file, seed_corpus;
  verify->add_option("corpus", verify_corpus, "graph6 corpus file");
  verify->add_option("--census", census_file, "Census JSON-lines file (systems and optional claimed scaffolds)");
  app.add_option("--seed-corpus", seed_corpus, "Extra graph6 corpus appended to the input corpus");

  auto* detect = app.add_subcommand("detect", "Forks, butterflies and special graphs");
  std::string detect_input;
  bool detect_extended = false;
  detect->add_option("input", detect_input, "graph6 string or file, or ExtendedGraph JSON with --extended")
      ->required();
  detect->add_flag("--extended", detect_extended, "Input is an ExtendedGraph JSON file");

  CLI11_PARSE(app, argc, argv);

  std::ofstream file_out;
  if (!out_path.empty()) {
    file_out.open(out_path, std::ios::binary);
    if (!file_out) {
      std::cerr << "error: cannot write " << out_path << '\n';
      return 2;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file_out;

  try {
    if (*validate) return scaffold::commands::validate(slurp(validate_file), out);
    if (*enumerate) return scaffold::commands::enumerate(graph6_argument(enumerate_g6), common, out, std::cerr);
    if (*extend)
      return scaffold::commands::extend(graph6_argument(extend_g6), slurp(extend_system), out, std::cerr);
    if (*rebuild) return scaffold::commands::reconstruct(slurp(rebuild_file), out, std::cerr, max_depth);
    if (*verify) {
      if (verify_corpus.empty() && census_file.empty()) {
        std::cerr << "error: give a corpus file or --census\n";
        return 2;
      }
      std::vector<scaffold::CensusEntry> entries;
      std::string id;
      if (!census_file.empty()) {
        entries = scaffold::read_census_lines(slurp(census_file));
        id = census_file;
      }
      if (!verify_corpus.empty()) {
        auto more = corpus_entries(verify_corpus);
        entries.insert(entries.end(), more.begin(), more.end());
        id = id.empty() ? verify_corpus : id + "+" + verify_corpus;
      }
      if (!seed_corpus.empty()) {
        auto more = corpus_entries(seed_corpus);
        entries.insert(entries.end(), more.begin(), more.end());
        id += "+" + seed_corpus;
      }
      return scaffold::commands::verify_bijection(id, entries, common, out, std::cerr);
    }
    if (*detect) {
      const auto input = detect_extended ? slurp(detect_input) : graph6_argument(detect_input);
      return scaffold::commands::detect(input, detect_extended, common, out, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    out << scaffold::Json{{"error", "io"}, {"message", e.what()}}.dump() << '\n';
    return 2;
  }
  return 0;
}
