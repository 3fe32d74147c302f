#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "apg/game.hpp"

namespace apg {

inline bool valid_vertex_name(const std::string& s) {
  if (s.empty() || s.front() == '#') return false;
  for (unsigned char c : s)
    if (std::isspace(c)) return false;
  return true;
}

/// Reads the line format: `#` comments, an optional leading `vertices`
/// line, then one `blue ...` / `red ...` line per edge. Undeclared vertices
/// get declared on first appearance. Errors are reported as `source:line`.
inline Game parse_apg(std::istream& in, const std::string& source = "<input>") {
  std::vector<std::string> names;
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> blue, red;
  bool seen_vertices = false, seen_edge = false;
  std::string line;
  int lineno = 0;
  auto fail = [&](ErrorKind k, const std::string& msg) {
    throw Error(k, source + ":" + std::to_string(lineno) + ": " + msg);
  };
  auto declare = [&](const std::string& name) {
    auto [it, fresh] = index.emplace(name, static_cast<int>(names.size()));
    if (fresh) {
      if (names.size() >= static_cast<std::size_t>(kMaxVertices))
        fail(ErrorKind::TooManyVertices, "more than " + std::to_string(kMaxVertices) + " vertices");
      names.push_back(name);
    }
    return it->second;
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw) || kw.front() == '#') continue;
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);

    if (kw == "vertices") {
      if (seen_vertices) fail(ErrorKind::Parse, "second 'vertices' line");
      if (seen_edge) fail(ErrorKind::Parse, "'vertices' must come before any edge");
      seen_vertices = true;
      for (const auto& t : toks) {
        if (index.count(t)) fail(ErrorKind::DuplicateVertex, "vertex '" + t + "' declared twice");
        declare(t);
      }
    } else if (kw == "blue" || kw == "red") {
      seen_edge = true;
      if (toks.empty()) fail(ErrorKind::EmptyEdge, kw + " edge with no vertices");
      std::vector<int> e;
      for (const auto& t : toks) {
        if (t.front() == '#') break;
        e.push_back(declare(t));
      }
      if (e.empty()) fail(ErrorKind::EmptyEdge, kw + " edge with no vertices");
      (kw == "blue" ? blue : red).push_back(std::move(e));
    } else {
      fail(ErrorKind::Parse, "unknown keyword '" + kw + "' (expected vertices, blue or red)");
    }
  }

  auto to_edges = [](const std::vector<std::vector<int>>& raw) {
    EdgeList out;
    for (const auto& e : raw) {
      VertexSet s;
      for (int v : e) s.insert(v);
      out.push_back(s);
    }
    return out;
  };
  return Game::from_indices(std::move(names), to_edges(blue), to_edges(red));
}

inline Game parse_apg_string(const std::string& text, const std::string& source = "<string>") {
  std::istringstream in(text);
  return parse_apg(in, source);
}

inline Game load_apg(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Parse, path + ": cannot open");
  return parse_apg(in, path);
}

inline std::string to_apg(const Game& g) {
  std::ostringstream os;
  os << "vertices";
  for (const auto& n : g.names()) {
    if (!valid_vertex_name(n)) throw Error(ErrorKind::Parse, "vertex name '" + n + "' cannot be written");
    os << ' ' << n;
  }
  os << '\n';
  auto edges = [&](const char* kw, const EdgeList& list) {
    for (const auto& e : list) {
      os << kw;
      e.for_each([&](int v) { os << ' ' << g.name(v); });
      os << '\n';
    }
  };
  edges("blue", g.blue_edges());
  edges("red", g.red_edges());
  return os.str();
}

inline void save_apg(const Game& g, const std::string& path) {
  const std::string text = to_apg(g);
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::Parse, path + ": cannot write");
  out << text;
}

}  // namespace apg
