#include "dar/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "dar/error.hpp"

namespace dar {

namespace {

// Yields the whitespace-separated integer fields of each non-blank line.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<long long>& fields) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      std::istringstream words(line);
      fields.clear();
      std::string word;
      while (words >> word) {
        std::size_t used = 0;
        long long value = 0;
        try {
          value = std::stoll(word, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != word.size()) throw ParseError("expected an integer, got '" + word + "'", line_no_);
        fields.push_back(value);
      }
      if (!fields.empty()) return true;
    }
    return false;
  }

  int line() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), "cannot open " + path);
  return in;
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<long long> f;
  if (!reader.next(f)) throw ParseError("missing header line \"n m\"", reader.line() + 1);
  if (f.size() != 2 || f[0] < 0 || f[1] < 0 || f[0] > 1'000'000)
    throw ParseError("header must be \"n m\" with non-negative n and m", reader.line());
  const int n = static_cast<int>(f[0]);
  const long long m = f[1];
  std::vector<std::pair<Vertex, Vertex>> edges;
  std::set<std::pair<Vertex, Vertex>> seen;
  for (long long i = 0; i < m; ++i) {
    if (!reader.next(f)) throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i), reader.line() + 1);
    if (f.size() != 2) throw ParseError("edge line must be \"u v\"", reader.line());
    if (f[0] < 0 || f[0] >= n || f[1] < 0 || f[1] >= n) throw ParseError("vertex out of range", reader.line());
    if (f[0] == f[1]) throw ParseError("loop at vertex " + std::to_string(f[0]), reader.line());
    const std::pair<Vertex, Vertex> key{std::min(f[0], f[1]), std::max(f[0], f[1])};
    if (!seen.insert(key).second) throw ParseError("parallel edge", reader.line());
    edges.emplace_back(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
  }
  if (reader.next(f)) throw ParseError("unexpected content after the last edge", reader.line());
  return Graph(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return read_graph(in);
}

Graph load_graph(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColouring read_colouring(std::istream& in, const Graph& g) {
  LineReader reader(in);
  EdgeColouring c(g.edge_count());
  std::vector<long long> f;
  while (reader.next(f)) {
    if (f.size() != 3) throw ParseError("colouring line must be \"u v colour\"", reader.line());
    if (f[0] < 0 || f[0] >= g.vertex_count() || f[1] < 0 || f[1] >= g.vertex_count())
      throw ParseError("vertex out of range", reader.line());
    const EdgeId e = g.edge_id(static_cast<Vertex>(f[0]), static_cast<Vertex>(f[1]));
    if (e < 0) throw ParseError("no edge " + std::to_string(f[0]) + "-" + std::to_string(f[1]), reader.line());
    if (f[2] < 1 || f[2] > 1'000'000'000) throw ParseError("colours must be positive", reader.line());
    if (c.coloured(e)) throw ParseError("edge coloured twice", reader.line());
    c.set(e, static_cast<Colour>(f[2]));
  }
  return c;
}

EdgeColouring load_colouring(const std::string& path, const Graph& g) {
  auto in = open_input(path);
  return read_colouring(in, g);
}

void write_colouring(std::ostream& out, const Graph& g, const EdgeColouring& c) {
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (c.coloured(e)) out << g.edge(e).u << ' ' << g.edge(e).v << ' ' << c.at(e) << '\n';
}

std::string to_dot(const Graph& g, const EdgeColouring* c) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) out << "  " << v << " [label=\"" << g.label(v) << "\"];\n";
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    out << "  " << g.edge(e).u << " -- " << g.edge(e).v;
    if (c && c->coloured(e)) out << " [label=\"" << c->at(e) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  j["edges"] = std::move(edges);
  if (!g.labels().empty()) j["labels"] = g.labels();
  return j;
}

Json colouring_to_json(const Graph& g, const EdgeColouring& c) {
  Json edges = Json::array();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (c.coloured(e)) edges.push_back({g.edge(e).u, g.edge(e).v, c.at(e)});
  return Json{{"edges", std::move(edges)}};
}

EdgeColouring colouring_from_json(const Json& j, const Graph& g) {
  require(j.is_object() && j.contains("edges") && j["edges"].is_array(), "colouring JSON needs an \"edges\" array");
  EdgeColouring c(g.edge_count());
  for (const auto& item : j["edges"]) {
    require(item.is_array() && item.size() == 3 && item[0].is_number_integer() && item[1].is_number_integer() &&
                item[2].is_number_integer(),
            "colouring entries must be [u, v, colour]");
    const int u = item[0], v = item[1], col = item[2];
    require(u >= 0 && u < g.vertex_count() && v >= 0 && v < g.vertex_count(), "vertex out of range");
    const EdgeId e = g.edge_id(u, v);
    require(e >= 0, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    require(!c.coloured(e), "edge coloured twice");
    c.set(e, col);
  }
  return c;
}

Json certificate_to_json(const Graph& g, const ForcesCertificate& cert) {
  Json j;
  j["verdict"] = to_string(cert.verdict());
  if (cert.witness()) j["witness"] = colouring_to_json(g, *cert.witness());
  j["stats"] = {{"nodes", cert.stats().nodes}, {"max_depth", cert.stats().max_depth}};
  j["mode"] = to_string(cert.mode());
  if (cert.budget()) j["budget_nodes"] = *cert.budget();
  return j;
}

Json embedding_to_json(const Embedding& e) {
  return Json{{"vertex_map", e.vertex_map},
              {"image_edges", e.image_edges},
              {"colours", e.colours},
              {"rainbow", e.is_rainbow()}};
}

namespace {

Element element_from_json(const Json& j) {
  if (j.is_number_integer()) {
    const long long v = j;
    require(v >= 0 && v <= 1'000'000'000, "element ids must be non-negative");
    return Element::vertex(static_cast<int>(v));
  }
  require(j.is_string(), "elements are strings like \"v3\", \"c5\" or integers");
  return parse_element(j.get<std::string>());
}

}  // namespace

SetFamily family_from_json(const Json& j) {
  require(j.is_object() && j.contains("sets") && j["sets"].is_array(), "family JSON needs a \"sets\" array");
  SetFamily f;
  std::set<Element> universe;
  if (j.contains("universe")) {
    require(j["universe"].is_array(), "\"universe\" must be an array");
    for (const auto& e : j["universe"]) universe.insert(element_from_json(e));
  }
  for (const auto& s : j["sets"]) {
    require(s.is_array(), "each set must be an array");
    std::vector<Element> set;
    for (const auto& e : s) {
      set.push_back(element_from_json(e));
      if (!j.contains("universe")) universe.insert(set.back());
    }
    f.sets.push_back(std::move(set));
  }
  if (j.contains("groups")) {
    require(j["groups"].is_array(), "\"groups\" must be an array");
    for (const auto& g : j["groups"]) {
      require(g.is_array(), "each group must be an array of set indices");
      std::vector<int> ids;
      for (const auto& id : g) {
        require(id.is_number_integer(), "group entries must be set indices");
        ids.push_back(id.get<int>());
      }
      f.groups.push_back(std::move(ids));
    }
  }
  f.universe.assign(universe.begin(), universe.end());
  f.normalise();
  return f;
}

Json family_to_json(const SetFamily& f) {
  auto names = [](const std::vector<Element>& xs) {
    Json out = Json::array();
    for (const Element& e : xs) out.push_back(to_string(e));
    return out;
  };
  Json sets = Json::array();
  for (const auto& s : f.sets) sets.push_back(names(s));
  Json j{{"universe", names(f.universe)}, {"sets", std::move(sets)}};
  if (!f.groups.empty()) j["groups"] = f.groups;
  return j;
}

std::string read_file(const std::string& path) {
  auto in = open_input(path);
  std::ostringstream text;
  text << in.rdbuf();
  return text.str();
}

}  // namespace dar
