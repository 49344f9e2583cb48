#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey {

/// Undirected edge, stored with u < v. Ordering by (u, v) is the canonical
/// edge order used everywhere (witnesses, search order, serialization).
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
/// No loops, no multi-edges; adjacency is kept symmetric. The arrowing
/// search engine additionally requires n <= 64 (one word per row); graphs
/// built by the host constructions may be larger and only use the generic
/// multi-word paths.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int vertexCount() const { return n_; }
  int edgeCount() const { return edgeCount_; }
  int wordsPerRow() const { return words_; }

  bool hasEdge(int u, int v) const;
  void addEdge(int u, int v);
  void removeEdge(int u, int v);
  bool empty() const { return edgeCount_ == 0; }

  int degree(int v) const;
  int minDegree() const;

  /// Adjacency row of v as words_ 64-bit words.
  const std::uint64_t* row(int v) const { return adj_.data() + static_cast<std::size_t>(v) * words_; }

  /// Single-word adjacency row; only valid when n <= 64.
  std::uint64_t row64(int v) const { return adj_[static_cast<std::size_t>(v) * words_]; }

  template <typename F>
  void forEachNeighbor(int v, F&& f) const {
    const std::uint64_t* r = row(v);
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        int b = __builtin_ctzll(bits);
        bits &= bits - 1;
        f(w * 64 + b);
      }
    }
  }

  /// All edges in canonical (lexicographic) order.
  std::vector<Edge> edges() const;

  /// Adds k isolated vertices, returns the index of the first new vertex.
  int addVertices(int k);

  /// Copy with all edges at v removed (the vertex itself stays, isolated).
  Graph withoutEdgesAt(int v) const;
  /// Copy without one edge.
  Graph withoutEdge(Edge e) const;
  /// Copy restricted to the given (sorted or unsorted) vertex subset,
  /// relabeled 0..k-1 in ascending original order.
  Graph inducedSubgraph(const std::vector<int>& vertices) const;

  /// Disjoint-union append of `other`; returns the vertex offset.
  int appendDisjoint(const Graph& other);

  bool isConnected() const;
  bool isTree() const;

  /// Length of a shortest cycle; nullopt for forests.
  std::optional<int> girth() const;

  /// Shortest path length between the endpoint sets of two edges
  /// (0 when they share a vertex, nullopt when separated).
  /// Throws std::invalid_argument if either edge is missing.
  std::optional<int> edgeDistance(Edge e, Edge f) const;

  /// BFS distances from a source set given as a vertex list; -1 = unreachable.
  std::vector<int> distancesFrom(const std::vector<int>& sources) const;

  bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

  /// Optional vertex names for constructed graphs (empty when unused).
  std::vector<std::string> labels;

 private:
  void checkVertex(int v) const;

  int n_ = 0;
  int words_ = 0;
  int edgeCount_ = 0;
  std::vector<std::uint64_t> adj_;
};

// Common small-graph factories.
Graph completeGraph(int n);
Graph cycleGraph(int n);
Graph pathGraph(int n);
Graph starGraph(int leaves);
Graph completeMultipartite(const std::vector<int>& parts);
Graph emptyGraph(int n);
Graph petersenGraph();

}  // namespace ramsey
