#include "ramsey/hypergraph.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "ramsey/arrowing.hpp"
#include "ramsey/errors.hpp"

namespace ramsey {

double GammaParams::edgeProbability() const {
  return A * std::pow(static_cast<double>(n), -(h - 1) + 1.0 / (cycleLen - 1));
}

int deriveUniformity(int q2, int t, int cap) {
  auto r = ramseyNumberClique(q2, t, cap);
  if (!r) throw BudgetExceededError("deriveUniformity: r_q(K_t) not decidable within the vertex cap");
  return *r;
}

HyperGraph sampleHypergraph(const GammaParams& params) {
  if (params.n < 1 || params.h < 2 || params.h > params.n)
    throw PreconditionError("sample: need 2 <= h <= n");
  if (params.cycleLen < 2) throw PreconditionError("sample: need l >= 2");
  double p = params.edgeProbability();
  if (p > 1.0) throw PreconditionError("sample: p_h exceeds 1");
  if (p < 0.0) throw PreconditionError("sample: p_h is negative");

  HyperGraph hg;
  hg.n = params.n;
  hg.h = params.h;
  std::mt19937_64 rng(params.seed);
  bool all = p >= 1.0;
  bool none = p <= 0.0;
  // Threshold comparison on raw 64-bit draws keeps the sample reproducible
  // across platforms (no distribution adapters involved).
  std::uint64_t threshold = all || none ? 0 : static_cast<std::uint64_t>(p * 18446744073709551616.0);

  std::vector<int> idx(params.h);
  for (int i = 0; i < params.h; ++i) idx[i] = i;
  for (;;) {
    if (all) {
      hg.edges.push_back(idx);
    } else if (!none) {
      if (rng() < threshold) hg.edges.push_back(idx);
    } else {
      break;
    }
    // Next h-combination in lexicographic order.
    int i = params.h - 1;
    while (i >= 0 && idx[i] == params.n - params.h + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < params.h; ++j) idx[j] = idx[j - 1] + 1;
  }
  return hg;
}

namespace {

std::vector<std::vector<int>> incidenceLists(const HyperGraph& hg) {
  std::vector<std::vector<int>> inc(static_cast<std::size_t>(hg.n));
  for (int e = 0; e < hg.edgeCount(); ++e)
    for (int v : hg.edges[static_cast<std::size_t>(e)]) inc[static_cast<std::size_t>(v)].push_back(e);
  return inc;
}

int sharedCount(const std::vector<int>& a, const std::vector<int>& b) {
  int count = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] == b[j]) {
      ++count;
      ++i;
      ++j;
    } else if (a[i] < b[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return count;
}

}  // namespace

std::vector<BergeCycle> findShortBergeCycles(const HyperGraph& hg, int maxLen) {
  if (maxLen < 2) throw PreconditionError("bergeCycles: need maxLen >= 2");
  std::vector<BergeCycle> out;
  int m = hg.edgeCount();

  // Length two: pairs of edges sharing at least two vertices.
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (sharedCount(hg.edges[static_cast<std::size_t>(a)], hg.edges[static_cast<std::size_t>(b)]) >= 2) {
        BergeCycle c;
        c.edgeIds = {a, b};
        // The two least common vertices act as the representative links.
        std::vector<int> common;
        for (int v : hg.edges[static_cast<std::size_t>(a)])
          if (std::binary_search(hg.edges[static_cast<std::size_t>(b)].begin(),
                                 hg.edges[static_cast<std::size_t>(b)].end(), v))
            common.push_back(v);
        c.linkVertices = {common[0], common[1]};
        out.push_back(std::move(c));
      }

  if (maxLen <= 3) return out;
  std::vector<std::vector<int>> inc = incidenceLists(hg);
  std::vector<bool> edgeUsed(static_cast<std::size_t>(m), false);
  std::vector<bool> vertexUsed(static_cast<std::size_t>(hg.n), false);
  std::vector<int> edgePath, linkPath;

  // Anchored DFS for cycles of length 3..maxLen-1: e_1 is the least edge id
  // on the cycle, and the reflection is broken by e_2 < e_s.
  std::function<void(int)> extend = [&](int anchor) {
    int len = static_cast<int>(edgePath.size());
    int cur = edgePath.back();
    // Close the cycle: a fresh vertex in e_cur and e_anchor.
    if (len >= 3 && edgePath[1] < cur) {
      for (int v : hg.edges[static_cast<std::size_t>(cur)]) {
        if (vertexUsed[static_cast<std::size_t>(v)]) continue;
        if (std::binary_search(hg.edges[static_cast<std::size_t>(anchor)].begin(),
                               hg.edges[static_cast<std::size_t>(anchor)].end(), v)) {
          BergeCycle c;
          c.edgeIds = edgePath;
          c.linkVertices = linkPath;
          c.linkVertices.push_back(v);
          out.push_back(std::move(c));
        }
      }
    }
    if (len == maxLen - 1) return;
    for (int v : hg.edges[static_cast<std::size_t>(cur)]) {
      if (vertexUsed[static_cast<std::size_t>(v)]) continue;
      vertexUsed[static_cast<std::size_t>(v)] = true;
      for (int next : inc[static_cast<std::size_t>(v)]) {
        if (next <= anchor || edgeUsed[static_cast<std::size_t>(next)]) continue;
        edgeUsed[static_cast<std::size_t>(next)] = true;
        edgePath.push_back(next);
        linkPath.push_back(v);
        extend(anchor);
        linkPath.pop_back();
        edgePath.pop_back();
        edgeUsed[static_cast<std::size_t>(next)] = false;
      }
      vertexUsed[static_cast<std::size_t>(v)] = false;
    }
  };

  for (int anchor = 0; anchor < m; ++anchor) {
    edgeUsed[static_cast<std::size_t>(anchor)] = true;
    edgePath = {anchor};
    linkPath.clear();
    extend(anchor);
    edgeUsed[static_cast<std::size_t>(anchor)] = false;
  }
  return out;
}

HyperGraph removeShortCycles(const HyperGraph& hg, int cycleLen, int* removedEdges) {
  HyperGraph cur = hg;
  int removed = 0;
  for (;;) {
    std::vector<BergeCycle> cycles = findShortBergeCycles(cur, cycleLen);
    if (cycles.empty()) break;
    std::set<int> doomed;
    for (const BergeCycle& c : cycles)
      doomed.insert(*std::min_element(c.edgeIds.begin(), c.edgeIds.end()));
    HyperGraph next;
    next.n = cur.n;
    next.h = cur.h;
    for (int e = 0; e < cur.edgeCount(); ++e)
      if (!doomed.count(e)) next.edges.push_back(cur.edges[static_cast<std::size_t>(e)]);
    removed += static_cast<int>(doomed.size());
    cur = std::move(next);
  }
  if (!findShortBergeCycles(cur, cycleLen).empty())
    throw LemmaContradictionError("removeShortCycles: output still has short cycles");
  if (removedEdges) *removedEdges = removed;
  return cur;
}

Graph blowUp(const HyperGraph& hg) {
  if (hg.n > 20000) throw PreconditionError("blowUp: vertex count exceeds the graph substrate cap");
  Graph g(hg.n);
  for (const std::vector<int>& e : hg.edges)
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j) g.addEdge(e[i], e[j]);
  return g;
}

void forEachClique(const Graph& g, int s, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> pick;
  std::function<void(const std::vector<int>&)> extend = [&](const std::vector<int>& cand) {
    if (static_cast<int>(pick.size()) == s) {
      fn(pick);
      return;
    }
    if (static_cast<int>(pick.size()) + static_cast<int>(cand.size()) < s) return;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cand.size(); ++j)
        if (g.hasEdge(cand[i], cand[j])) next.push_back(cand[j]);
      pick.push_back(cand[i]);
      extend(next);
      pick.pop_back();
    }
  };
  std::vector<int> all(static_cast<std::size_t>(g.vertexCount()));
  for (int v = 0; v < g.vertexCount(); ++v) all[static_cast<std::size_t>(v)] = v;
  extend(all);
}

void forEachCycle(const Graph& g, int s, const std::function<void(const std::vector<int>&)>& fn) {
  if (s < 3) return;
  int n = g.vertexCount();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::vector<int> path;
  // path[0] is the least cycle vertex; reflection broken by path[1] <
  // path.back() at closing time.
  std::function<void()> extend = [&]() {
    int cur = path.back();
    if (static_cast<int>(path.size()) == s) {
      if (path[1] < path.back() && g.hasEdge(cur, path[0])) fn(path);
      return;
    }
    g.forEachNeighbor(cur, [&](int w) {
      if (w <= path[0] || used[static_cast<std::size_t>(w)]) return;
      used[static_cast<std::size_t>(w)] = true;
      path.push_back(w);
      extend();
      path.pop_back();
      used[static_cast<std::size_t>(w)] = false;
    });
  };
  for (int v = 0; v + s <= n; ++v) {
    used[static_cast<std::size_t>(v)] = true;
    path = {v};
    extend();
    used[static_cast<std::size_t>(v)] = false;
  }
}

namespace {

bool insideSomeHyperedge(const HyperGraph& hg, const std::vector<std::vector<int>>& inc,
                         const std::vector<int>& vertices) {
  const std::vector<int>& first = inc[static_cast<std::size_t>(vertices.front())];
  for (int e : first) {
    bool all = true;
    for (int v : vertices) {
      if (!std::binary_search(hg.edges[static_cast<std::size_t>(e)].begin(),
                              hg.edges[static_cast<std::size_t>(e)].end(), v)) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

}  // namespace

CopyClassification classifyCopies(const Graph& blowup, const HyperGraph& hg, const Target& target) {
  if (target.kind() == Target::Kind::Tree)
    throw PreconditionError("classifyCopies: target must be a clique or a cycle");
  CopyClassification out;
  std::vector<std::vector<int>> inc = incidenceLists(hg);
  auto visit = [&](const std::vector<int>& vertices) {
    if (insideSomeHyperedge(hg, inc, vertices))
      ++out.hyperedgeCopies;
    else
      out.nonHyperedgeCopies.push_back(vertices);
  };
  if (target.kind() == Target::Kind::Clique)
    forEachClique(blowup, target.order(), visit);
  else
    forEachCycle(blowup, target.order(), visit);
  return out;
}

bool checkTransversal(const Graph& sub, const HyperGraph& hg) {
  for (const std::vector<int>& e : hg.edges) {
    int count = 0;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i + 1; j < e.size(); ++j)
        if (sub.hasEdge(e[i], e[j])) ++count;
    if (count != 1) return false;
  }
  return true;
}

bool structureCheck(const Graph& sub, const HyperGraph& hg) {
  std::vector<std::vector<int>> inc = incidenceLists(hg);
  for (const Edge& edge : sub.edges()) {
    bool covered = false;
    for (int e : inc[static_cast<std::size_t>(edge.u)]) {
      const std::vector<int>& he = hg.edges[static_cast<std::size_t>(e)];
      if (!std::binary_search(he.begin(), he.end(), edge.v)) continue;
      bool whole = true;
      for (std::size_t i = 0; i < he.size() && whole; ++i)
        for (std::size_t j = i + 1; j < he.size(); ++j)
          if (!sub.hasEdge(he[i], he[j])) {
            whole = false;
            break;
          }
      if (whole) {
        covered = true;
        break;
      }
    }
    if (!covered) return false;
  }
  return true;
}

}  // namespace ramsey
