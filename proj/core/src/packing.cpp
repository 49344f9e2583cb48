#include "ramsey/packing.hpp"

#include <algorithm>
#include <functional>

#include "ramsey/errors.hpp"
#include "ramsey/generate.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

namespace {

void validatePattern(const ColorPattern& p) {
  for (const Graph& g : p.graphs)
    if (g.vertexCount() != p.n) throw PreconditionError("pattern: graphs must share the vertex set [n]");
  for (std::size_t i = 0; i < p.graphs.size(); ++i)
    for (std::size_t j = i + 1; j < p.graphs.size(); ++j)
      for (const Edge& e : p.graphs[i].edges())
        if (p.graphs[j].hasEdge(e.u, e.v))
          throw PreconditionError("pattern: graphs must be pairwise edge-disjoint");
  if (p.q1 < 0) throw PreconditionError("pattern: q1 must be nonnegative");
}

// Does graph contain a K_t using u and only vertices from `allowed`?
bool cliqueThrough(const Graph& g, const std::vector<bool>& allowed, int u, int t) {
  if (t == 1) return true;
  std::vector<int> cand;
  g.forEachNeighbor(u, [&](int w) {
    if (allowed[static_cast<std::size_t>(w)]) cand.push_back(w);
  });
  std::function<bool(std::vector<int>&, int)> extend = [&](std::vector<int>& cur, int need) -> bool {
    if (need == 0) return true;
    if (static_cast<int>(cur.size()) < need) return false;
    for (std::size_t i = 0; i < cur.size(); ++i) {
      std::vector<int> next;
      for (std::size_t j = i + 1; j < cur.size(); ++j)
        if (g.hasEdge(cur[i], cur[j])) next.push_back(cur[j]);
      if (extend(next, need - 1)) return true;
    }
    return false;
  };
  return extend(cand, t - 1);
}

// Searches for a vertex coloring violating (P2): cycle classes all of size
// <= 1 and no clique class containing a K_t of its graph. `cycleSet` is the
// set of vertices receiving (distinct) cycle colors.
bool findViolatingLambda(const ColorPattern& p, int t, std::vector<int>& cycleSet,
                         std::vector<int>& cliqueColor) {
  int n = p.n;
  int q2 = p.q2();
  std::vector<bool> inCycle(static_cast<std::size_t>(n), false);
  for (int v : cycleSet) inCycle[static_cast<std::size_t>(v)] = true;
  std::vector<std::vector<bool>> classes(static_cast<std::size_t>(q2),
                                         std::vector<bool>(static_cast<std::size_t>(n), false));
  std::function<bool(int)> place = [&](int v) -> bool {
    while (v < n && inCycle[static_cast<std::size_t>(v)]) ++v;
    if (v == n) return true;
    for (int j = 0; j < q2; ++j) {
      // Adding v to class j must not complete a K_t in graph j.
      if (cliqueThrough(p.graphs[static_cast<std::size_t>(j)], classes[static_cast<std::size_t>(j)], v, t))
        continue;
      classes[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = true;
      cliqueColor[static_cast<std::size_t>(v)] = j;
      if (place(v + 1)) return true;
      classes[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] = false;
      cliqueColor[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  };
  return place(0);
}

}  // namespace

PatternCheck verifyPattern(const ColorPattern& pattern, int t) {
  if (t < 2) throw PreconditionError("verifyPattern: need t >= 2");
  validatePattern(pattern);
  PatternCheck check;

  for (int j = 0; j < pattern.q2(); ++j) {
    if (hasClique(pattern.graphs[static_cast<std::size_t>(j)], t + 1)) {
      check.valid = false;
      check.reason = "pattern graph " + std::to_string(pattern.q1 + j + 1) + " contains K_" +
                     std::to_string(t + 1);
      return check;
    }
  }

  // (P2): try every set of vertices receiving distinct cycle colors.
  int n = pattern.n;
  int maxCycle = std::min(pattern.q1, n);
  std::vector<int> cycleSet;
  std::vector<int> cliqueColor(static_cast<std::size_t>(n), -1);
  std::function<bool(int, int)> choose = [&](int from, int left) -> bool {
    std::fill(cliqueColor.begin(), cliqueColor.end(), -1);
    if (findViolatingLambda(pattern, t, cycleSet, cliqueColor)) return true;
    if (left == 0) return false;
    for (int v = from; v < n; ++v) {
      cycleSet.push_back(v);
      if (choose(v + 1, left - 1)) return true;
      cycleSet.pop_back();
    }
    return false;
  };
  if (choose(0, maxCycle)) {
    VertexColoring lambda;
    lambda.colors.assign(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < cycleSet.size(); ++i)
      lambda.colors[static_cast<std::size_t>(cycleSet[i])] = static_cast<int>(i + 1);
    for (int v = 0; v < n; ++v)
      if (lambda.colors[static_cast<std::size_t>(v)] == 0)
        lambda.colors[static_cast<std::size_t>(v)] = pattern.q1 + cliqueColor[static_cast<std::size_t>(v)] + 1;
    check.valid = false;
    check.counterexample = lambda;
    check.reason = "a vertex coloring avoids both (P2)(a) and (P2)(b)";
    return check;
  }
  check.valid = true;
  return check;
}

namespace {

struct PatternSearch {
  int n, q1, q2, t;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool truncated = false;
  std::vector<std::pair<int, int>> cells;  // canonical cell order
  std::vector<int> value;                  // per cell, 0 = unused
  std::optional<ColorPattern> found;

  PatternSearch(int n_, int q1_, int q2_, int t_, std::uint64_t budget_)
      : n(n_), q1(q1_), q2(q2_), t(t_), budget(budget_) {
    for (int v = 1; v < n; ++v)
      for (int u = 0; u < v; ++u) cells.push_back({u, v});
    value.assign(cells.size(), 0);
  }

  ColorPattern materialize() const {
    ColorPattern p;
    p.n = n;
    p.q1 = q1;
    p.graphs.assign(static_cast<std::size_t>(q2), Graph(n));
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (value[i] > 0)
        p.graphs[static_cast<std::size_t>(value[i] - 1)].addEdge(cells[i].first, cells[i].second);
    return p;
  }

  // Would assigning (u,v) to graph j complete a K_{t+1} there?
  bool completesForbiddenClique(const ColorPattern& partial, int j, int u, int v) const {
    const Graph& g = partial.graphs[static_cast<std::size_t>(j)];
    std::vector<int> common;
    for (int w = 0; w < n; ++w)
      if (w != u && w != v && g.hasEdge(u, w) && g.hasEdge(v, w)) common.push_back(w);
    // Need K_{t-1} among the common neighbors.
    std::function<bool(std::vector<int>&, int)> extend = [&](std::vector<int>& cur, int need) -> bool {
      if (need == 0) return true;
      if (static_cast<int>(cur.size()) < need) return false;
      for (std::size_t i = 0; i < cur.size(); ++i) {
        std::vector<int> next;
        for (std::size_t k = i + 1; k < cur.size(); ++k)
          if (g.hasEdge(cur[i], cur[k])) next.push_back(cur[k]);
        if (extend(next, need - 1)) return true;
      }
      return false;
    };
    return extend(common, t - 1);
  }

  bool dfs(std::size_t idx, ColorPattern& partial) {
    if (truncated) return false;
    if (idx == cells.size()) {
      // Isomorph rejection: only canonical representatives are tested.
      std::vector<int> canon = canonicalCellSequence(n, [&](int a, int b) {
        int lo = std::min(a, b), hi = std::max(a, b);
        return value[static_cast<std::size_t>(hi * (hi - 1) / 2 + lo)];
      });
      if (canon != value) return false;
      PatternCheck check = verifyPattern(partial, t);
      if (check.valid) {
        found = partial;
        return true;
      }
      return false;
    }
    auto [u, v] = cells[idx];
    for (int j = 0; j <= q2; ++j) {
      if (++nodes > budget) {
        truncated = true;
        return false;
      }
      if (j > 0) {
        if (completesForbiddenClique(partial, j - 1, u, v)) continue;
        partial.graphs[static_cast<std::size_t>(j - 1)].addEdge(u, v);
      }
      value[idx] = j;
      if (dfs(idx + 1, partial)) return true;
      value[idx] = 0;
      if (j > 0) partial.graphs[static_cast<std::size_t>(j - 1)].removeEdge(u, v);
      if (truncated) return false;
    }
    return false;
  }
};

}  // namespace

PackingResult computeP(int q1, int q2, int t, int nMax, std::uint64_t nodeBudget) {
  if (t < 2 || q1 < 0 || q2 < 0 || q1 + q2 < 1)
    throw PreconditionError("computeP: need t >= 2, q1,q2 >= 0, q1+q2 >= 1");
  PackingResult result;

  if (q2 == 0) {
    // Pigeonhole closed form: n = q1 + 1 vertices force a repeated cycle color.
    if (q1 + 1 > nMax) {
      result.outcome = PackingResult::Outcome::NoneWithinCap;
      return result;
    }
    ColorPattern witness;
    witness.n = q1 + 1;
    witness.q1 = q1;
    PatternCheck check = verifyPattern(witness, t);
    if (!check.valid) throw LemmaContradictionError("computeP: pigeonhole witness failed verification");
    result.outcome = PackingResult::Outcome::Found;
    result.certificate = PackingCertificate{q1 + 1, witness, result.attestation};
    return result;
  }

  for (int n = 1; n <= nMax; ++n) {
    PatternSearch search(n, q1, q2, t, nodeBudget);
    ColorPattern partial;
    partial.n = n;
    partial.q1 = q1;
    partial.graphs.assign(static_cast<std::size_t>(q2), Graph(n));
    bool found = search.dfs(0, partial);
    result.attestation.nodesPerOrder.push_back(search.nodes);
    if (search.truncated) {
      result.attestation.exhaustive = false;
      result.outcome = PackingResult::Outcome::BudgetExceeded;
      return result;
    }
    if (found) {
      result.outcome = PackingResult::Outcome::Found;
      result.certificate = PackingCertificate{n, *search.found, result.attestation};
      return result;
    }
  }
  result.outcome = PackingResult::Outcome::NoneWithinCap;
  return result;
}

ColorPattern dropToSubpattern(const ColorPattern& pattern, int q1, int t) {
  if (pattern.q1 != 0) throw PreconditionError("dropToSubpattern: input must be a (0,q) pattern");
  if (q1 < 0 || q1 > pattern.q2()) throw PreconditionError("dropToSubpattern: bad q1");
  PatternCheck input = verifyPattern(pattern, t);
  if (!input.valid) throw PreconditionError("dropToSubpattern: input pattern is invalid");
  if (q1 == 0) return pattern;

  ColorPattern out;
  out.n = pattern.n;
  out.q1 = q1;
  out.graphs.assign(pattern.graphs.begin(), pattern.graphs.end() - q1);
  PatternCheck check = verifyPattern(out, t);
  if (!check.valid)
    throw LemmaContradictionError("dropToSubpattern: sub-pattern failed verification");
  return out;
}

bool verifySubsetCliqueProperty(const ColorPattern& pattern, int t, int q) {
  if (q < 1) throw PreconditionError("verifySubsetCliqueProperty: need q >= 1");
  if (pattern.graphs.empty()) return true;
  int n = pattern.n;
  int k = (n + q - 1) / q;
  std::vector<int> subset;
  std::function<bool(int, int)> scan = [&](int from, int left) -> bool {
    if (left == 0) {
      for (const Graph& g : pattern.graphs)
        if (!hasClique(g.inducedSubgraph(subset), t)) return false;
      return true;
    }
    for (int v = from; v <= n - left; ++v) {
      subset.push_back(v);
      bool ok = scan(v + 1, left - 1);
      subset.pop_back();
      if (!ok) return false;
    }
    return true;
  };
  return scan(0, k);
}

}  // namespace ramsey
