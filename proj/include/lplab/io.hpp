#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "lplab/errors.hpp"
#include "lplab/graph.hpp"

namespace lplab {

enum class GraphFormat { json, edgelist };

inline GraphFormat format_from_name(std::string_view name) {
  if (name == "json") return GraphFormat::json;
  if (name == "edgelist" || name == "txt") return GraphFormat::edgelist;
  throw PreconditionError("unknown graph format '" + std::string(name) + "'");
}

// Picks the format from a file extension; anything but .json is an edge list.
inline GraphFormat format_from_path(std::string_view path) {
  return path.size() >= 5 && path.substr(path.size() - 5) == ".json" ? GraphFormat::json
                                                                     : GraphFormat::edgelist;
}

inline Graph graph_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges")) {
    throw ParseError("graph JSON needs an object with \"n\" and \"edges\"");
  }
  if (!doc["n"].is_number_integer()) throw ParseError("\"n\" must be an integer");
  const auto& arr = doc["edges"];
  if (!arr.is_array()) throw ParseError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& e = arr[i];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw ParseError("edge #" + std::to_string(i) + " is not a pair of integers");
    }
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(doc["n"].get<int>(), std::move(edges));
}

inline nlohmann::json graph_to_json(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"n", g.n()}, {"edges", std::move(edges)}};
}

namespace detail {

inline Graph parse_edgelist(std::istream& in) {
  std::string line;
  int line_no = 0;
  auto next_content_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      auto pos = line.find_first_not_of(" \t\r");
      if (pos != std::string::npos && line[pos] != '#') return true;
    }
    return false;
  };
  auto fail = [&](const std::string& what) {
    throw ParseError("line " + std::to_string(line_no) + ": " + what);
  };

  if (!next_content_line()) throw ParseError("empty edge list: expected header \"n m\"");
  long long n = 0;
  long long m = 0;
  {
    std::istringstream hs(line);
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) fail("header must be \"n m\"");
    if (n < 0 || m < 0) fail("negative count in header");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    if (!next_content_line()) {
      throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(i));
    }
    std::istringstream ls(line);
    long long u = 0;
    long long v = 0;
    std::string extra;
    if (!(ls >> u >> v) || (ls >> extra)) fail("edge line must be \"u v\"");
    if (u < 0 || v < 0 || u >= n || v >= n) {
      fail("out-of-range endpoint in edge [" + std::to_string(u) + "," + std::to_string(v) + "]");
    }
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (next_content_line()) fail("trailing content after " + std::to_string(m) + " edges");
  try {
    return Graph(static_cast<int>(n), std::move(edges));
  } catch (const ValidationError& e) {
    throw ValidationError(std::string(e.what()) + " (edge index counts data lines from 0)");
  }
}

}  // namespace detail

inline Graph load_graph(std::istream& in, GraphFormat format) {
  if (format == GraphFormat::edgelist) return detail::parse_edgelist(in);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return graph_from_json(doc);
}

inline Graph load_graph(std::string_view text, GraphFormat format) {
  std::istringstream in{std::string(text)};
  return load_graph(in, format);
}

inline void save_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  if (format == GraphFormat::json) {
    out << graph_to_json(g).dump() << '\n';
    return;
  }
  out << g.n() << ' ' << g.m() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline std::string save_graph(const Graph& g, GraphFormat format) {
  std::ostringstream out;
  save_graph(out, g, format);
  return out.str();
}

}  // namespace lplab
