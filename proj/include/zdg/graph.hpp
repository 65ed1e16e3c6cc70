#pragma once

// Undirected simple graphs on dense vertex ids with bitset adjacency rows,
// BFS distances, the structural invariants the surveys need, family
// classification by definition checking, and deterministic DOT/JSON/edge-list
// export.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

namespace zdg {

inline constexpr int kMaxGraphOrder = 4096;

class Graph {
 public:
  explicit Graph(int n, std::vector<std::string> labels = {},
                 std::string name = "G")
      : n_(n), words_((n + 63) / 64), name_(std::move(name)),
        labels_(std::move(labels)) {
    if (n < 0 || n > kMaxGraphOrder)
      throw std::invalid_argument("graph order out of range");
    adj_.assign(std::size_t(n_) * words_, 0);
    if (labels_.empty()) {
      labels_.reserve(n_);
      for (int v = 0; v < n_; ++v) labels_.push_back(std::to_string(v));
    }
    if (int(labels_.size()) != n_)
      throw std::invalid_argument("label count mismatch");
  }

  int n() const noexcept { return n_; }

  void add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    adj_[std::size_t(u) * words_ + v / 64] |= (std::uint64_t(1) << (v % 64));
    adj_[std::size_t(v) * words_ + u / 64] |= (std::uint64_t(1) << (u % 64));
  }

  bool adjacent(int u, int v) const {
    return (adj_[std::size_t(u) * words_ + v / 64] >>
            (v % 64)) & 1;
  }

  int degree(int v) const {
    int d = 0;
    for (int w = 0; w < words_; ++w)
      d += std::popcount(adj_[std::size_t(v) * words_ + w]);
    return d;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = adj_[std::size_t(v) * words_ + w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(w * 64 + b);
        bits &= bits - 1;
      }
    }
    return out;
  }

  int edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
  }

  /// Sorted (u,v) pairs with u < v.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
      for (int v : neighbors(u))
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

 private:
  void check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
  }
  int n_;
  int words_;
  std::string name_;
  std::vector<std::uint64_t> adj_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Distances
// ---------------------------------------------------------------------------

struct DistanceMatrix {
  static constexpr int kUnreachable = -1;
  int n = 0;
  std::vector<std::int16_t> d;

  int at(int u, int v) const { return d[std::size_t(u) * n + v]; }
  bool all_reachable() const {
    for (std::int16_t x : d)
      if (x < 0) return false;
    return true;
  }
};

/// BFS from every vertex; entries are hop counts, kUnreachable where no path.
inline DistanceMatrix all_pairs_distances(const Graph& g) {
  DistanceMatrix m;
  m.n = g.n();
  m.d.assign(std::size_t(g.n()) * g.n(), DistanceMatrix::kUnreachable);
  std::vector<int> queue(g.n());
  for (int s = 0; s < g.n(); ++s) {
    auto* row = m.d.data() + std::size_t(s) * g.n();
    row[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.neighbors(u))
        if (row[v] < 0) {
          row[v] = std::int16_t(row[u] + 1);
          queue[tail++] = v;
        }
    }
  }
  return m;
}

inline bool is_connected(const Graph& g) {
  if (g.n() <= 1) return true;
  std::vector<char> seen(g.n(), 0);
  std::vector<int> stack = {0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    for (int v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = 1;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n();
}

/// Largest finite distance; nullopt when the graph is disconnected.
/// A one-vertex graph has diameter 0; the empty graph has no diameter.
inline std::optional<int> diameter(const Graph& g, const DistanceMatrix& dm) {
  if (g.n() == 0)
    throw std::invalid_argument("diameter of the empty graph is undefined");
  int best = 0;
  for (int u = 0; u < g.n(); ++u)
    for (int v = u + 1; v < g.n(); ++v) {
      int d = dm.at(u, v);
      if (d < 0) return std::nullopt;
      best = std::max(best, d);
    }
  return best;
}

/// Shortest cycle length; nullopt for forests.
inline std::optional<int> girth(const Graph& g) {
  const int n = g.n();
  if (n < 3) return std::nullopt;
  int best = -1;
  std::vector<int> dist(n), par(n), queue(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(par.begin(), par.end(), -1);
    dist[s] = 0;
    int head = 0, tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      int u = queue[head++];
      for (int v : g.neighbors(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          par[v] = u;
          queue[tail++] = v;
        } else if (v != par[u] && u < v) {
          int cand = dist[u] + dist[v] + 1;
          if (best < 0 || cand < best) best = cand;
        }
      }
    }
    if (best == 3) return 3;
  }
  if (best < 0) return std::nullopt;
  return best;
}

inline std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.n());
  for (int v = 0; v < g.n(); ++v) out[v] = g.degree(v);
  std::sort(out.begin(), out.end());
  return out;
}

inline int min_degree(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("min degree of empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

inline bool has_degree_one_vertex(const Graph& g) {
  for (int v = 0; v < g.n(); ++v)
    if (g.degree(v) == 1) return true;
  return false;
}

/// Articulation points, per component.
inline std::vector<int> cut_vertices(const Graph& g) {
  const int n = g.n();
  std::vector<int> disc(n, -1), low(n, 0);
  std::vector<char> cut(n, 0);
  int timer = 0;

  // Iterative DFS; state per frame: vertex, parent, neighbor list position.
  std::vector<int> nbr_pos(n, 0), parent(n, -1), children(n, 0);
  std::vector<std::vector<int>> nbrs(n);
  for (int v = 0; v < n; ++v) nbrs[v] = g.neighbors(v);

  for (int root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::vector<int> stack = {root};
    disc[root] = low[root] = timer++;
    while (!stack.empty()) {
      int u = stack.back();
      if (nbr_pos[u] < int(nbrs[u].size())) {
        int v = nbrs[u][nbr_pos[u]++];
        if (disc[v] < 0) {
          parent[v] = u;
          ++children[u];
          disc[v] = low[v] = timer++;
          stack.push_back(v);
        } else if (v != parent[u]) {
          low[u] = std::min(low[u], disc[v]);
        }
      } else {
        stack.pop_back();
        int p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (p != root && low[u] >= disc[p]) cut[p] = 1;
        }
      }
    }
    if (children[root] >= 2) cut[root] = 1;
  }

  std::vector<int> out;
  for (int v = 0; v < n; ++v)
    if (cut[v]) out.push_back(v);
  return out;
}

// ---------------------------------------------------------------------------
// Twin classes
// ---------------------------------------------------------------------------

/// Distance-similarity: u ~ v iff d(u,x) = d(v,x) for every x outside {u,v}.
/// This is an equivalence relation; classes are returned ordered by their
/// smallest member, members ascending.
inline std::vector<std::vector<int>> twin_classes(const Graph& g,
                                                  const DistanceMatrix& dm) {
  const int n = g.n();
  auto similar = [&](int u, int v) {
    for (int x = 0; x < n; ++x) {
      if (x == u || x == v) continue;
      if (dm.at(u, x) != dm.at(v, x)) return false;
    }
    return true;
  };
  std::vector<std::vector<int>> classes;
  for (int v = 0; v < n; ++v) {
    bool placed = false;
    for (auto& cls : classes)
      if (similar(cls.front(), v)) {
        cls.push_back(v);
        placed = true;
        break;
      }
    if (!placed) classes.push_back({v});
  }
  return classes;
}

// ---------------------------------------------------------------------------
// Family classification
// ---------------------------------------------------------------------------

// Definition-checking predicates. Several families overlap (K_2 = P_2,
// C_3 = K_3, C_4 = K_{2,2}, K_{1,m} = star); classify_family picks a
// canonical tag with the precedence Empty, SingleVertex, Path, Cycle,
// Complete, CompleteBipartite, Other, while the predicates stay available
// for checks that care about a specific reading.

inline bool is_path_graph(const Graph& g) {
  const int n = g.n();
  if (n == 0) return false;
  if (n == 1) return true;  // one-vertex path
  if (!is_connected(g)) return false;
  int deg1 = 0;
  for (int v = 0; v < n; ++v) {
    int d = g.degree(v);
    if (d == 1)
      ++deg1;
    else if (d != 2)
      return false;
  }
  return deg1 == 2 && g.edge_count() == n - 1;
}

inline bool is_cycle_graph(const Graph& g) {
  const int n = g.n();
  if (n < 3 || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != 2) return false;
  return true;
}

inline bool is_complete_graph(const Graph& g) {
  const int n = g.n();
  if (n == 0) return false;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

/// Sides (a,b) with a <= b when the graph is a complete bipartite K_{a,b}
/// (both sides nonempty, so n >= 2); nullopt otherwise.
inline std::optional<std::pair<int, int>> complete_bipartite_sides(
    const Graph& g) {
  const int n = g.n();
  if (n < 2 || !is_connected(g)) return std::nullopt;
  std::vector<int> color(n, -1);
  std::vector<int> queue = {0};
  color[0] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h) {
    int u = queue[h];
    for (int v : g.neighbors(u)) {
      if (color[v] < 0) {
        color[v] = 1 - color[u];
        queue.push_back(v);
      } else if (color[v] == color[u]) {
        return std::nullopt;
      }
    }
  }
  int a = 0;
  for (int v = 0; v < n; ++v)
    if (color[v] == 0) ++a;
  int b = n - a;
  if (a == 0 || b == 0) return std::nullopt;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (color[u] != color[v] && !g.adjacent(u, v)) return std::nullopt;
  return std::make_pair(std::min(a, b), std::max(a, b));
}

struct FamilyClass {
  enum class Kind {
    Empty,
    SingleVertex,
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Other
  };
  Kind kind = Kind::Other;
  int a = 0, b = 0;   // Path/Cycle/Complete: a = order; CB: sides a <= b
  bool star = false;  // CB with a side of size 1

  std::string to_string() const {
    switch (kind) {
      case Kind::Empty: return "empty";
      case Kind::SingleVertex: return "K1";
      case Kind::Path: return "P" + std::to_string(a);
      case Kind::Cycle: return "C" + std::to_string(a);
      case Kind::Complete: return "K" + std::to_string(a);
      case Kind::CompleteBipartite:
        return "K" + std::to_string(a) + "x" + std::to_string(b);
      case Kind::Other: return "other";
    }
    return "other";
  }
};

inline FamilyClass classify_family(const Graph& g) {
  FamilyClass f;
  if (g.n() == 0) {
    f.kind = FamilyClass::Kind::Empty;
    return f;
  }
  if (g.n() == 1) {
    f.kind = FamilyClass::Kind::SingleVertex;
    return f;
  }
  if (is_path_graph(g)) {
    f.kind = FamilyClass::Kind::Path;
    f.a = g.n();
    return f;
  }
  if (is_cycle_graph(g)) {
    f.kind = FamilyClass::Kind::Cycle;
    f.a = g.n();
    return f;
  }
  if (is_complete_graph(g)) {
    f.kind = FamilyClass::Kind::Complete;
    f.a = g.n();
    return f;
  }
  if (auto sides = complete_bipartite_sides(g)) {
    f.kind = FamilyClass::Kind::CompleteBipartite;
    f.a = sides->first;
    f.b = sides->second;
    f.star = (f.a == 1);
    return f;
  }
  return f;
}

// ---------------------------------------------------------------------------
// Builders used by the claim suite and tests
// ---------------------------------------------------------------------------

inline Graph make_path_graph(int m) {
  Graph g(m);
  for (int v = 0; v + 1 < m; ++v) g.add_edge(v, v + 1);
  g.set_name("P" + std::to_string(m));
  return g;
}

inline Graph make_cycle_graph(int m) {
  if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g(m);
  for (int v = 0; v < m; ++v) g.add_edge(v, (v + 1) % m);
  g.set_name("C" + std::to_string(m));
  return g;
}

inline Graph make_complete_graph(int m) {
  Graph g(m);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
  g.set_name("K" + std::to_string(m));
  return g;
}

inline Graph make_complete_bipartite_graph(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  g.set_name("K" + std::to_string(a) + "x" + std::to_string(b));
  return g;
}

// ---------------------------------------------------------------------------
// Export / import
// ---------------------------------------------------------------------------

enum class GraphFormat { Dot, Json, EdgeList };

inline std::optional<GraphFormat> graph_format_from_token(
    std::string_view token) {
  if (token == "dot") return GraphFormat::Dot;
  if (token == "json") return GraphFormat::Json;
  if (token == "edges" || token == "edge-list") return GraphFormat::EdgeList;
  return std::nullopt;
}

/// Deterministic output: vertices ascending, edges sorted (u,v), u < v.
/// The edge list uses vertex labels (isolated vertices do not appear there;
/// JSON is the lossless format).
inline std::string export_graph(const Graph& g, GraphFormat fmt) {
  switch (fmt) {
    case GraphFormat::Dot: {
      std::string out = "graph \"" + g.name() + "\" {\n";
      for (int v = 0; v < g.n(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
      for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
      out += "}\n";
      return out;
    }
    case GraphFormat::Json: {
      nlohmann::ordered_json j;
      j["n"] = g.n();
      j["labels"] = g.labels();
      auto edges = nlohmann::ordered_json::array();
      for (auto [u, v] : g.edges()) edges.push_back({u, v});
      j["edges"] = std::move(edges);
      return j.dump(2) + "\n";
    }
    case GraphFormat::EdgeList: {
      std::string out;
      for (auto [u, v] : g.edges())
        out += g.label(u) + " " + g.label(v) + "\n";
      return out;
    }
  }
  throw std::invalid_argument("unknown graph format");
}

inline Graph import_graph_json(std::string_view text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw std::invalid_argument("graph JSON: missing integer field 'n'");
  int n = j["n"].get<int>();
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  Graph g(n, std::move(labels));
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graph JSON: edges must be [u,v] pairs");
      g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
  }
  return g;
}

/// "u v" per line; tokens become labels, vertices appear in first-use order.
inline Graph import_graph_edge_list(std::string_view text) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> edges;
  auto vertex_of = [&](const std::string& tok) {
    for (std::size_t i = 0; i < labels.size(); ++i)
      if (labels[i] == tok) return int(i);
    labels.push_back(tok);
    return int(labels.size()) - 1;
  };

  std::size_t pos = 0;
  int lineno = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = (eol == std::string_view::npos) ? text.size() + 1 : eol + 1;
    ++lineno;
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r'))
        ++i;
      std::size_t start = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
             line[i] != '\r')
        ++i;
      if (i > start) toks.emplace_back(line.substr(start, i - start));
    }
    if (toks.empty()) continue;
    if (toks.size() != 2)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": expected 'u v'");
    int u = vertex_of(toks[0]);
    int v = vertex_of(toks[1]);
    if (u == v)
      throw std::invalid_argument("edge list line " + std::to_string(lineno) +
                                  ": self-loop");
    edges.emplace_back(u, v);
  }

  Graph g(int(labels.size()), labels);
  for (auto [u, v] : edges)
    if (!g.adjacent(u, v)) g.add_edge(u, v);
  return g;
}

}  // namespace zdg
