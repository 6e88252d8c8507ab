#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "scaffoldkit/embedding.hpp"
#include "scaffoldkit/enumeration.hpp"
#include "scaffoldkit/extended.hpp"
#include "scaffoldkit/reconstruct.hpp"

namespace scaffold {

using Json = nlohmann::ordered_json;

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json to_json(const FacialSystem& fs, int n);
/// Faces are re-canonicalised; vertex ids must lie in [0, n).
FacialSystem facial_system_from_json(const Json& j, int* n = nullptr);

Json to_json(const EmbeddingCensus& census);

/// "parallel" marks a scaffold edge whose endpoints are also adjacent in G.
Json to_json(const ExtendedGraph& ext);
/// Witnesses are optional and kept verbatim when present.
ExtendedGraph extended_graph_from_json(const Json& j);

Json to_json(const ReconstructionOutcome& outcome, int n);
Json to_json(const Contradiction& c);

}  // namespace scaffold
