#include "ramsey/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace ramsey {

Graph::Graph(int n) : n_(n), words_((n + 63) / 64) {
  if (n < 0) throw std::invalid_argument("graph: negative vertex count");
  adj_.assign(static_cast<std::size_t>(n_) * words_, 0);
}

void Graph::checkVertex(int v) const {
  if (v < 0 || v >= n_) throw std::out_of_range("graph: vertex out of range");
}

bool Graph::hasEdge(int u, int v) const {
  checkVertex(u);
  checkVertex(v);
  if (u == v) return false;
  return (row(u)[v / 64] >> (v % 64)) & 1;
}

void Graph::addEdge(int u, int v) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) throw std::invalid_argument("graph: loop edge");
  std::uint64_t bitV = std::uint64_t{1} << (v % 64);
  std::uint64_t bitU = std::uint64_t{1} << (u % 64);
  std::uint64_t& ru = adj_[static_cast<std::size_t>(u) * words_ + v / 64];
  if (ru & bitV) return;
  ru |= bitV;
  adj_[static_cast<std::size_t>(v) * words_ + u / 64] |= bitU;
  ++edgeCount_;
}

void Graph::removeEdge(int u, int v) {
  checkVertex(u);
  checkVertex(v);
  if (u == v) return;
  std::uint64_t bitV = std::uint64_t{1} << (v % 64);
  std::uint64_t bitU = std::uint64_t{1} << (u % 64);
  std::uint64_t& ru = adj_[static_cast<std::size_t>(u) * words_ + v / 64];
  if (!(ru & bitV)) return;
  ru &= ~bitV;
  adj_[static_cast<std::size_t>(v) * words_ + u / 64] &= ~bitU;
  --edgeCount_;
}

int Graph::degree(int v) const {
  checkVertex(v);
  int d = 0;
  const std::uint64_t* r = row(v);
  for (int w = 0; w < words_; ++w) d += __builtin_popcountll(r[w]);
  return d;
}

int Graph::minDegree() const {
  if (n_ == 0) return 0;
  int best = degree(0);
  for (int v = 1; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edgeCount_);
  for (int u = 0; u < n_; ++u) {
    forEachNeighbor(u, [&](int v) {
      if (v > u) out.push_back(Edge{u, v});
    });
  }
  // Row scan already yields (u,v) lexicographic order.
  return out;
}

int Graph::addVertices(int k) {
  if (k < 0) throw std::invalid_argument("graph: negative vertex batch");
  Graph bigger(n_ + k);
  for (int u = 0; u < n_; ++u) {
    forEachNeighbor(u, [&](int v) {
      if (v > u) bigger.addEdge(u, v);
    });
  }
  bigger.labels = labels;
  int first = n_;
  *this = std::move(bigger);
  return first;
}

Graph Graph::withoutEdgesAt(int v) const {
  checkVertex(v);
  Graph g = *this;
  std::vector<int> nb;
  forEachNeighbor(v, [&](int w) { nb.push_back(w); });
  for (int w : nb) g.removeEdge(v, w);
  return g;
}

Graph Graph::withoutEdge(Edge e) const {
  Graph g = *this;
  g.removeEdge(e.u, e.v);
  return g;
}

Graph Graph::inducedSubgraph(const std::vector<int>& vertices) const {
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  for (int v : vs) checkVertex(v);
  Graph g(static_cast<int>(vs.size()));
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (hasEdge(vs[i], vs[j])) g.addEdge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

int Graph::appendDisjoint(const Graph& other) {
  int offset = n_;
  addVertices(other.vertexCount());
  for (const Edge& e : other.edges()) addEdge(offset + e.u, offset + e.v);
  return offset;
}

std::vector<int> Graph::distancesFrom(const std::vector<int>& sources) const {
  std::vector<int> dist(n_, -1);
  std::deque<int> queue;
  for (int s : sources) {
    checkVertex(s);
    if (dist[s] == -1) {
      dist[s] = 0;
      queue.push_back(s);
    }
  }
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    forEachNeighbor(u, [&](int w) {
      if (dist[w] == -1) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool Graph::isConnected() const {
  if (n_ <= 1) return true;
  std::vector<int> dist = distancesFrom({0});
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

bool Graph::isTree() const { return n_ >= 1 && edgeCount_ == n_ - 1 && isConnected(); }

std::optional<int> Graph::girth() const {
  // Shortest cycle through each edge: remove it, take dist between endpoints.
  int best = -1;
  for (const Edge& e : edges()) {
    Graph g = withoutEdge(e);
    std::vector<int> dist = g.distancesFrom({e.u});
    if (dist[e.v] >= 0) {
      int len = dist[e.v] + 1;
      if (best == -1 || len < best) best = len;
    }
  }
  if (best == -1) return std::nullopt;
  return best;
}

std::optional<int> Graph::edgeDistance(Edge e, Edge f) const {
  if (!hasEdge(e.u, e.v) || !hasEdge(f.u, f.v)) throw std::invalid_argument("edgeDistance: edge not in graph");
  if (e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v) return 0;
  std::vector<int> dist = distancesFrom({e.u, e.v});
  int du = dist[f.u], dv = dist[f.v];
  if (du == -1 && dv == -1) return std::nullopt;
  if (du == -1) return dv;
  if (dv == -1) return du;
  return std::min(du, dv);
}

Graph completeGraph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.addEdge(u, v);
  return g;
}

Graph cycleGraph(int n) {
  if (n < 3) throw std::invalid_argument("cycleGraph: need n >= 3");
  Graph g(n);
  for (int v = 0; v < n; ++v) g.addEdge(v, (v + 1) % n);
  return g;
}

Graph pathGraph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) g.addEdge(v, v + 1);
  return g;
}

Graph starGraph(int leaves) {
  Graph g(leaves + 1);
  for (int v = 1; v <= leaves; ++v) g.addEdge(0, v);
  return g;
}

Graph completeMultipartite(const std::vector<int>& parts) {
  int n = 0;
  for (int p : parts) n += p;
  Graph g(n);
  std::vector<int> part(n);
  int idx = 0;
  for (std::size_t p = 0; p < parts.size(); ++p)
    for (int i = 0; i < parts[p]; ++i) part[idx++] = static_cast<int>(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v]) g.addEdge(u, v);
  return g;
}

Graph emptyGraph(int n) { return Graph(n); }

Graph petersenGraph() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.addEdge(i, (i + 1) % 5);      // outer pentagon
    g.addEdge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.addEdge(i, 5 + i);            // spokes
  }
  return g;
}

}  // namespace ramsey
