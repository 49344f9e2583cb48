#include "ramsey/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ramsey {

namespace {

struct CanonState {
  int n;
  const std::function<int(int, int)>* val;
  std::vector<int> perm;      // perm[position] = original vertex
  std::vector<bool> used;
  std::vector<int> best;      // best complete sequence so far
  std::vector<int> current;   // cells decided so far
  bool haveBest = false;
};

// Places position p; cells (u,p) for u < p become decided. The current
// prefix is compared against the best-so-far at every entry (best may have
// been replaced since the ancestor frames were entered), and branches whose
// prefix already exceeds it are pruned.
void canonDfs(CanonState& s, int p) {
  if (s.haveBest) {
    for (std::size_t i = 0; i < s.current.size(); ++i) {
      if (s.current[i] < s.best[i]) break;
      if (s.current[i] > s.best[i]) return;
    }
  }
  if (p == s.n) {
    if (!s.haveBest || s.current < s.best) {
      s.best = s.current;
      s.haveBest = true;
    }
    return;
  }
  std::size_t cellBase = s.current.size();
  for (int w = 0; w < s.n; ++w) {
    if (s.used[w]) continue;
    for (int u = 0; u < p; ++u) s.current.push_back((*s.val)(s.perm[u], w));
    s.used[w] = true;
    s.perm[p] = w;
    canonDfs(s, p + 1);
    s.used[w] = false;
    s.current.resize(cellBase);
  }
}

}  // namespace

std::vector<int> canonicalCellSequence(int n, const std::function<int(int, int)>& val) {
  if (n <= 1) return {};
  CanonState s;
  s.n = n;
  s.val = &val;
  s.perm.assign(n, -1);
  s.used.assign(n, false);
  canonDfs(s, 0);
  return s.best;
}

// Cell 0 is the most significant bit, so integer order on codes agrees with
// lexicographic order on cell sequences.
std::uint64_t codeOf(const Graph& g) {
  int n = g.vertexCount();
  if (n > 11) throw std::invalid_argument("codeOf: n > 11 does not fit 64 bits");
  int cells = n * (n - 1) / 2;
  std::uint64_t code = 0;
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (g.hasEdge(u, v)) code |= std::uint64_t{1} << (cells - 1 - idx);
  return code;
}

Graph fromCode(int n, std::uint64_t code) {
  Graph g(n);
  int cells = n * (n - 1) / 2;
  int idx = 0;
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u, ++idx)
      if (code & (std::uint64_t{1} << (cells - 1 - idx))) g.addEdge(u, v);
  return g;
}

std::uint64_t canonicalCode(const Graph& g) {
  int n = g.vertexCount();
  if (n > 11) throw std::invalid_argument("canonicalCode: n > 11 does not fit 64 bits");
  std::vector<int> seq =
      canonicalCellSequence(n, [&](int u, int v) { return g.hasEdge(u, v) ? 1 : 0; });
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    if (seq[i]) code |= std::uint64_t{1} << (seq.size() - 1 - i);
  return code;
}

std::vector<Graph> nonIsomorphicGraphs(int n) {
  if (n < 1) return {};
  std::set<std::uint64_t> level = {0};  // the 1-vertex graph
  for (int k = 2; k <= n; ++k) {
    std::set<std::uint64_t> next;
    for (std::uint64_t parentCode : level) {
      Graph parent = fromCode(k - 1, parentCode);
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (k - 1)); ++mask) {
        Graph g = parent;
        g.addVertices(1);
        for (int u = 0; u < k - 1; ++u)
          if (mask & (std::uint64_t{1} << u)) g.addEdge(u, k - 1);
        next.insert(canonicalCode(g));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  out.reserve(level.size());
  for (std::uint64_t code : level) out.push_back(fromCode(n, code));
  return out;
}

std::vector<Graph> nonIsomorphicGraphsUpTo(int n) {
  std::vector<Graph> out;
  for (int k = 1; k <= n; ++k) {
    std::vector<Graph> level = nonIsomorphicGraphs(k);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

}  // namespace ramsey
