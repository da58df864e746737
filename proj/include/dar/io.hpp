#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "json.hpp"

#include "dar/certify.hpp"
#include "dar/colouring.hpp"
#include "dar/families.hpp"
#include "dar/graph.hpp"
#include "dar/rainbow.hpp"

namespace dar {

using Json = nlohmann::ordered_json;

// Text formats. Blank lines and anything after '#' are ignored; errors carry
// the 1-based line number.

/// "n m" then m lines "u v".
Graph read_graph(std::istream& in);
Graph parse_graph(const std::string& text);
Graph load_graph(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);

/// Lines "u v colour"; edges not listed stay uncoloured.
EdgeColouring read_colouring(std::istream& in, const Graph& g);
EdgeColouring load_colouring(const std::string& path, const Graph& g);
void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c);

/// Graphviz; coloured edges are labelled with their colour.
std::string to_dot(const Graph& g, const EdgeColouring* c = nullptr);

// JSON.

Json graph_to_json(const Graph& g);
/// {"edges": [[u, v, c], ...]} over coloured edges in edge-id order.
Json colouring_to_json(const Graph& g, const EdgeColouring& c);
EdgeColouring colouring_from_json(const Json& j, const Graph& g);

/// {verdict, witness?, stats: {nodes, max_depth}, mode, budget?}. Wall time is
/// left out so that reruns produce identical bytes.
Json certificate_to_json(const Graph& g, const ForcesCertificate& cert);

Json embedding_to_json(const Embedding& e);

/// {universe: [...], sets: [[...]], groups: [[indices]]}; elements are "v3",
/// "c5" or plain integers (vertices).
SetFamily family_from_json(const Json& j);
Json family_to_json(const SetFamily& f);

std::string read_file(const std::string& path);

}  // namespace dar
