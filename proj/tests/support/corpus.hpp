#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "scaffoldkit/graph.hpp"

namespace scaffold::testing {

inline std::string data_path(const std::string& name) { return std::string(SCAFFOLDKIT_TEST_DATA) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::vector<std::string> corpus_lines(int n) {
  const std::string name = std::string("cubic_") + (n < 10 ? "0" : "") + std::to_string(n) + ".g6";
  return read_corpus_lines(read_file(data_path(name)));
}

inline std::vector<CubicGraph> corpus(int n) {
  std::vector<CubicGraph> out;
  for (const auto& line : corpus_lines(n)) out.push_back(parse_graph6(line));
  return out;
}

inline std::vector<CubicGraph> corpus_up_to(int n) {
  std::vector<CubicGraph> out;
  for (int k = 4; k <= n; k += 2)
    for (auto& g : corpus(k)) out.push_back(std::move(g));
  return out;
}

}  // namespace scaffold::testing
