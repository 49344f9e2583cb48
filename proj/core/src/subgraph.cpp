#include "ramsey/subgraph.hpp"

#include <algorithm>
#include <functional>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Word-vector set helpers; all sets are over the host graph's vertices.
using Words = std::vector<std::uint64_t>;

Words fullSet(int n) {
  Words w((n + 63) / 64, 0);
  for (int v = 0; v < n; ++v) w[v / 64] |= std::uint64_t{1} << (v % 64);
  return w;
}

bool testBit(const Words& w, int v) { return (w[v / 64] >> (v % 64)) & 1; }
void clearBit(Words& w, int v) { w[v / 64] &= ~(std::uint64_t{1} << (v % 64)); }
void setBit(Words& w, int v) { w[v / 64] |= std::uint64_t{1} << (v % 64); }

int popcount(const Words& w) {
  int c = 0;
  for (std::uint64_t x : w) c += __builtin_popcountll(x);
  return c;
}

Words intersectRow(const Words& w, const Graph& g, int v) {
  Words out(w.size());
  const std::uint64_t* r = g.row(v);
  for (std::size_t i = 0; i < w.size(); ++i) out[i] = w[i] & r[i];
  return out;
}

// Clears bits 0..v from w (keeps only vertices > v).
void keepAbove(Words& w, int v) {
  int word = v / 64;
  for (int i = 0; i < word; ++i) w[i] = 0;
  int bit = v % 64;
  if (bit == 63)
    w[word] = 0;
  else
    w[word] &= ~((std::uint64_t{2} << bit) - 1);
}

template <typename F>
void forEachBit(const Words& w, F&& f) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    std::uint64_t bits = w[i];
    while (bits) {
      int b = __builtin_ctzll(bits);
      bits &= bits - 1;
      f(static_cast<int>(i * 64 + b));
    }
  }
}

// Ascending-order clique extension; the first complete extension found is
// the lexicographically least, provided callers seed cand with all vertices.
bool cliqueExtend(const Graph& g, const Words& cand, int need, std::vector<int>* pick) {
  if (need == 0) return true;
  if (popcount(cand) < need) return false;
  bool found = false;
  forEachBit(cand, [&](int v) {
    if (found) return;
    Words next = intersectRow(cand, g, v);
    keepAbove(next, v);
    if (pick) pick->push_back(v);
    if (cliqueExtend(g, next, need - 1, pick)) {
      found = true;
      return;
    }
    if (pick) pick->pop_back();
  });
  return found;
}

void cliqueCollect(const Graph& g, const Words& cand, int need, std::vector<int>& pick,
                   std::vector<std::vector<int>>& out) {
  if (need == 0) {
    out.push_back(pick);
    return;
  }
  if (popcount(cand) < need) return;
  forEachBit(cand, [&](int v) {
    Words next = intersectRow(cand, g, v);
    keepAbove(next, v);
    pick.push_back(v);
    cliqueCollect(g, next, need - 1, pick, out);
    pick.pop_back();
  });
}

// DFS for a cycle of length exactly `length` whose least vertex is `anchor`;
// all other cycle vertices are > anchor.
bool cycleFromAnchor(const Graph& g, int anchor, int length, Words& visited, int current, int remaining) {
  if (remaining == 0) return g.hasEdge(current, anchor);
  bool found = false;
  g.forEachNeighbor(current, [&](int w) {
    if (found || w <= anchor || testBit(visited, w)) return;
    setBit(visited, w);
    if (cycleFromAnchor(g, anchor, length, visited, w, remaining - 1)) found = true;
    clearBit(visited, w);
  });
  return found;
}

// Does g restricted to `subset` (given sorted) carry a Hamilton cycle?
bool spansCycle(const Graph& g, const std::vector<int>& subset) {
  int k = static_cast<int>(subset.size());
  std::vector<std::vector<int>> adj(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      if (g.hasEdge(subset[i], subset[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  for (int i = 0; i < k; ++i)
    if (adj[i].size() < 2) return false;
  std::vector<bool> used(k, false);
  used[0] = true;
  std::function<bool(int, int)> dfs = [&](int at, int left) {
    if (left == 0) return std::find(adj[at].begin(), adj[at].end(), 0) != adj[at].end();
    for (int nx : adj[at]) {
      if (used[nx]) continue;
      used[nx] = true;
      if (dfs(nx, left - 1)) return true;
      used[nx] = false;
    }
    return false;
  };
  return dfs(0, k - 1);
}

// Lexicographically least `length`-subset spanning a cycle, by ordered
// subset search with a light degree prune.
bool leastCycleWitness(const Graph& g, int length, std::vector<int>& chosen, int nextMin) {
  int n = g.vertexCount();
  int have = static_cast<int>(chosen.size());
  if (have == length) return spansCycle(g, chosen);
  for (int v = nextMin; v <= n - (length - have); ++v) {
    chosen.push_back(v);
    // Every chosen vertex still needs degree >= 2 within chosen+future.
    bool ok = true;
    for (int u : chosen) {
      int d = 0;
      for (int w : chosen)
        if (w != u && g.hasEdge(u, w)) ++d;
      if (d < 2) {
        g.forEachNeighbor(u, [&](int w) {
          if (w > v) ++d;
        });
      }
      if (d < 2) {
        ok = false;
        break;
      }
    }
    if (ok && leastCycleWitness(g, length, chosen, v + 1)) return true;
    chosen.pop_back();
  }
  return false;
}

// Tree embedding: tree vertices in BFS order from 0, each mapped to an
// unused host vertex adjacent to its parent's image; host candidates are
// tried ascending, so the first embedding is the least mapping sequence.
bool embedTree(const Graph& host, const Graph& tree, std::vector<int>* mapping) {
  int k = tree.vertexCount();
  if (k == 0) return true;
  if (host.vertexCount() < k) return false;
  std::vector<int> order, parent(k, -1);
  std::vector<bool> seen(k, false);
  order.push_back(0);
  seen[0] = true;
  for (std::size_t i = 0; i < order.size(); ++i) {
    tree.forEachNeighbor(order[i], [&](int w) {
      if (!seen[w]) {
        seen[w] = true;
        parent[w] = order[i];
        order.push_back(w);
      }
    });
  }
  std::vector<int> image(k, -1);
  std::vector<bool> used(host.vertexCount(), false);
  std::function<bool(std::size_t)> place = [&](std::size_t idx) {
    if (idx == order.size()) return true;
    int tv = order[idx];
    if (parent[tv] == -1) {
      for (int hv = 0; hv < host.vertexCount(); ++hv) {
        if (used[hv]) continue;
        used[hv] = true;
        image[tv] = hv;
        if (place(idx + 1)) return true;
        used[hv] = false;
        image[tv] = -1;
      }
      return false;
    }
    int base = image[parent[tv]];
    bool done = false;
    host.forEachNeighbor(base, [&](int hv) {
      if (done || used[hv]) return;
      used[hv] = true;
      image[tv] = hv;
      if (place(idx + 1)) {
        done = true;
        return;
      }
      used[hv] = false;
      image[tv] = -1;
    });
    return done;
  };
  if (!place(0)) return false;
  if (mapping) *mapping = image;
  return true;
}

}  // namespace

bool hasClique(const Graph& g, int t) {
  if (t <= 0) return true;
  if (t == 1) return g.vertexCount() >= 1;
  return cliqueExtend(g, fullSet(g.vertexCount()), t, nullptr);
}

bool hasCycle(const Graph& g, int length) {
  if (length < 3 || g.vertexCount() < length) return false;
  Words visited(static_cast<std::size_t>((g.vertexCount() + 63) / 64), 0);
  // The anchor is the least cycle vertex, so it needs length-1 vertices above it.
  for (int anchor = 0; anchor + length <= g.vertexCount(); ++anchor) {
    setBit(visited, anchor);
    if (cycleFromAnchor(g, anchor, length, visited, anchor, length - 1)) return true;
    clearBit(visited, anchor);
  }
  return false;
}

bool hasTree(const Graph& g, const Graph& tree) { return embedTree(g, tree, nullptr); }

bool hasTarget(const Graph& g, const Target& target) {
  switch (target.kind()) {
    case Target::Kind::Clique: return hasClique(g, target.order());
    case Target::Kind::Cycle: return hasCycle(g, target.order());
    case Target::Kind::Tree: return hasTree(g, target.treeGraph());
  }
  return false;
}

std::optional<TargetWitness> containsTarget(const Graph& g, const Target& target) {
  if (!hasTarget(g, target)) return std::nullopt;
  TargetWitness w;
  switch (target.kind()) {
    case Target::Kind::Clique: {
      std::vector<int> pick;
      cliqueExtend(g, fullSet(g.vertexCount()), target.order(), &pick);
      w.vertices = pick;
      break;
    }
    case Target::Kind::Cycle: {
      std::vector<int> chosen;
      leastCycleWitness(g, target.order(), chosen, 0);
      w.vertices = chosen;
      break;
    }
    case Target::Kind::Tree: {
      std::vector<int> image;
      embedTree(g, target.treeGraph(), &image);
      for (const Edge& e : target.treeGraph().edges()) w.edges.push_back(Edge{image[e.u], image[e.v]});
      std::sort(w.edges.begin(), w.edges.end());
      break;
    }
  }
  return w;
}

std::vector<std::vector<int>> allCliques(const Graph& g, int t) {
  std::vector<std::vector<int>> out;
  if (t <= 0) return out;
  std::vector<int> pick;
  cliqueCollect(g, fullSet(g.vertexCount()), t, pick, out);
  return out;
}

int commonCliqueVertex(const Graph& g, int t) {
  if (t < 3) throw PreconditionError("commonCliqueVertex: need t >= 3");
  if (g.vertexCount() >= 2 * (t - 1))
    throw PreconditionError("commonCliqueVertex: host has >= 2(t-1) vertices");
  if (!hasClique(g, t - 1)) throw PreconditionError("commonCliqueVertex: no K_{t-1} present");
  if (hasClique(g, t)) throw PreconditionError("commonCliqueVertex: host is not K_t-free");

  std::vector<bool> common(g.vertexCount(), true);
  for (const std::vector<int>& clique : allCliques(g, t - 1)) {
    std::vector<bool> inClique(g.vertexCount(), false);
    for (int v : clique) inClique[v] = true;
    for (int v = 0; v < g.vertexCount(); ++v)
      if (!inClique[v]) common[v] = false;
  }
  for (int v = 0; v < g.vertexCount(); ++v)
    if (common[v]) return v;
  throw LemmaContradictionError("commonCliqueVertex: no common vertex despite valid preconditions");
}

}  // namespace ramsey
