#pragma once

// Text formats.
//
// Edge list:
//   # comment lines start with '#'
//   n m
//   u v            (m lines, 0-indexed; duplicates and self-loops tolerated)
//
// Instance file: an edge list followed by
//   planted: <space-separated ids>
// with generation parameters carried in a comment line
//   # params: {"model": "gnp", "n": 100, ...}
//
// Vertex id list: whitespace-separated ids, '#' comments allowed.

#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lamis/errors.hpp"
#include "lamis/graph.hpp"
#include "lamis/instance.hpp"

namespace lamis {

inline nlohmann::json to_json(const GenParams& p) {
  return {{"model", to_string(p.model)}, {"n", p.n},         {"alpha", p.alpha},
          {"p", p.p},                    {"d", p.degree},    {"seed", p.seed},
          {"ensure_maximal", p.ensure_maximal}};
}

inline GenParams gen_params_from_json(const nlohmann::json& j) {
  GenParams p;
  p.model = parse_graph_model(j.value("model", std::string("external")));
  p.n = j.value("n", std::size_t{0});
  p.alpha = j.value("alpha", 0.0);
  p.p = j.value("p", 0.0);
  p.degree = j.value("d", std::size_t{0});
  p.seed = j.value("seed", std::uint64_t{0});
  p.ensure_maximal = j.value("ensure_maximal", false);
  return p;
}

namespace detail {

struct ParsedEdgeFile {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::optional<std::vector<Vertex>> planted;
  std::optional<nlohmann::json> params;
};

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::uint64_t parse_id(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(token, &used);
  } catch (const std::exception&) {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  if (used != token.size() || token.front() == '-') {
    throw ParseError(line, "expected a non-negative integer, got '" + token + "'");
  }
  return value;
}

inline ParsedEdgeFile parse_edge_file(std::istream& in) {
  ParsedEdgeFile out;
  std::string raw;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t declared_m = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const std::string body = trim(line.substr(1));
      if (body.rfind("params:", 0) == 0) {
        try {
          out.params = nlohmann::json::parse(body.substr(7));
        } catch (const nlohmann::json::exception& e) {
          throw ParseError(line_no, std::string("malformed params JSON: ") + e.what());
        }
      }
      continue;
    }
    if (line.rfind("planted:", 0) == 0) {
      if (!have_header) throw ParseError(line_no, "planted section before header");
      if (out.planted) throw ParseError(line_no, "duplicate planted section");
      std::istringstream ids(line.substr(8));
      std::vector<Vertex> planted;
      std::string token;
      while (ids >> token) {
        const auto v = parse_id(token, line_no);
        if (v >= out.n) throw ParseError(line_no, "planted id " + token + " >= n");
        planted.push_back(static_cast<Vertex>(v));
      }
      out.planted = std::move(planted);
      continue;
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) throw ParseError(line_no, "expected two integers");
    const auto x = parse_id(a, line_no);
    const auto y = parse_id(b, line_no);
    if (!have_header) {
      out.n = x;
      declared_m = y;
      have_header = true;
      continue;
    }
    if (out.planted) throw ParseError(line_no, "edge after planted section");
    if (x >= out.n || y >= out.n) throw ParseError(line_no, "edge (" + a + ", " + b + ") has an endpoint >= n");
    out.edges.emplace_back(static_cast<Vertex>(x), static_cast<Vertex>(y));
  }
  if (!have_header) throw ParseError(line_no, "missing 'n m' header");
  if (out.edges.size() != declared_m) {
    throw ParseError(line_no, "header declares " + std::to_string(declared_m) + " edges, found " +
                                  std::to_string(out.edges.size()));
  }
  return out;
}

inline std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return in;
}

inline std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  return out;
}

}  // namespace detail

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

/// Reads an edge list. A trailing planted section, if present, is ignored.
inline Graph read_edge_list(std::istream& in) {
  auto parsed = detail::parse_edge_file(in);
  return build_graph(parsed.n, parsed.edges);
}

inline Graph read_edge_list(const std::string& path) {
  auto in = detail::open_input(path);
  return read_edge_list(in);
}

inline void write_instance(std::ostream& out, const PlantedInstance& inst) {
  out << "# planted independent set instance\n";
  out << "# params: " << to_json(inst.params).dump() << '\n';
  write_edge_list(out, inst.graph);
  out << "planted:";
  for (Vertex v : inst.planted) out << ' ' << v;
  out << '\n';
}

inline void write_instance(const PlantedInstance& inst, const std::string& path) {
  auto out = detail::open_output(path);
  write_instance(out, inst);
}

/// Throws ParseError on malformed input, a missing planted section, or a
/// planted set that is not independent.
inline PlantedInstance read_instance(std::istream& in) {
  auto parsed = detail::parse_edge_file(in);
  if (!parsed.planted) throw ParseError(0, "missing 'planted:' section");
  Graph g = build_graph(parsed.n, parsed.edges);
  VertexSet planted(parsed.n, std::move(*parsed.planted));
  if (!is_independent_set(g, planted)) throw ParseError(0, "planted set is not independent");
  PlantedInstance inst{std::move(g), std::move(planted), {}};
  if (parsed.params) {
    try {
      inst.params = gen_params_from_json(*parsed.params);
    } catch (const std::exception& e) {
      throw ParseError(0, std::string("bad params: ") + e.what());
    }
  } else {
    inst.params = make_instance(inst.graph, inst.planted).params;
  }
  return inst;
}

inline PlantedInstance read_instance(const std::string& path) {
  auto in = detail::open_input(path);
  return read_instance(in);
}

inline void write_vertex_ids(std::ostream& out, const VertexSet& s) {
  bool first = true;
  for (Vertex v : s) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

/// Reads a vertex id list over universe [0, n).
inline VertexSet read_vertex_ids(std::istream& in, std::size_t n) {
  std::vector<Vertex> ids;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto hash = raw.find('#');
    std::istringstream fields(hash == std::string::npos ? raw : raw.substr(0, hash));
    std::string token;
    while (fields >> token) {
      const auto v = detail::parse_id(token, line_no);
      if (v >= n) throw ParseError(line_no, "vertex id " + token + " >= n = " + std::to_string(n));
      ids.push_back(static_cast<Vertex>(v));
    }
  }
  return VertexSet(n, std::move(ids));
}

inline VertexSet read_vertex_ids(const std::string& path, std::size_t n) {
  auto in = detail::open_input(path);
  return read_vertex_ids(in, n);
}

}  // namespace lamis
