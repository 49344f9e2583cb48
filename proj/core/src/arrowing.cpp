#include "ramsey/arrowing.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <thread>

#include "ramsey/errors.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

namespace {

constexpr int kSubstrateCap = 64;
constexpr int kMaxColors = 30;
constexpr int kBranchTarget = 64;    // desired top-level branch count
constexpr int kBranchDepthCap = 12;  // max edges fixed by a branch prefix

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

enum class Step { Found, Exhausted, Aborted };

struct TargetInfo {
  Target::Kind kind;
  int order = 0;      // t or l
  int edgeCount = 0;  // edges of the pattern
  // Tree embedding order (BFS from tree vertex 0) and parents.
  std::vector<int> treeOrder;
  std::vector<int> treeParent;
  const Graph* tree = nullptr;
};

struct RuleRef {
  int rule;
  bool firstSide;  // true when the edge is rule.a
};

// One backtracking searcher; shared read-only setup lives in Engine.
class Engine {
 public:
  Engine(const Graph& g, const TargetTuple& targets, const ColoringConstraints& constraints,
         const SearchOptions& opts)
      : g_(g), targets_(targets), opts_(opts) {
    n_ = g.vertexCount();
    q_ = targets.colorCount();
    if (n_ > kSubstrateCap) throw PreconditionError("search: host exceeds the 64-vertex substrate cap");
    if (q_ < 1 || q_ > kMaxColors) throw PreconditionError("search: color count out of range");
    edges_ = g.edges();
    m_ = static_cast<int>(edges_.size());

    domain_.assign(m_, (q_ >= 31 ? ~std::uint32_t{1} : (std::uint32_t{1} << (q_ + 1)) - 2));
    for (const auto& [e, mask] : constraints.allowed) {
      int idx = edgeIndex(e);
      if (idx < 0) throw PreconditionError("search: constrained edge not in host");
      domain_[idx] &= mask;
    }
    rules_ = constraints.pairs;
    rulesAt_.assign(m_, {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      int ia = edgeIndex(rules_[r].a);
      int ib = edgeIndex(rules_[r].b);
      if (ia < 0 || ib < 0) throw PreconditionError("search: pair-rule edge not in host");
      if (static_cast<int>(rules_[r].allowedSecond.size()) < q_ + 1)
        throw PreconditionError("search: pair rule has too few colors");
      rulesAt_[ia].push_back(RuleRef{static_cast<int>(r), true});
      rulesAt_[ib].push_back(RuleRef{static_cast<int>(r), false});
    }

    bool complete = m_ == n_ * (n_ - 1) / 2 && n_ >= 3;
    bool unconstrained = constraints.emptyConstraints();
    switch (opts.symmetry) {
      case SearchOptions::Symmetry::Off: symBreak_ = false; break;
      case SearchOptions::Symmetry::Auto: symBreak_ = complete && unconstrained; break;
      case SearchOptions::Symmetry::On:
        if (!complete || !unconstrained)
          throw PreconditionError("search: symmetry reduction requires an unconstrained complete host");
        symBreak_ = true;
        break;
    }
    starLen_ = symBreak_ ? n_ - 1 : 0;

    info_.resize(q_ + 1);
    for (int c = 1; c <= q_; ++c) {
      const Target& t = targets.target(c);
      TargetInfo& ti = info_[c];
      ti.kind = t.kind();
      ti.order = t.order();
      ti.edgeCount = t.size();
      if (t.kind() == Target::Kind::Tree) {
        ti.tree = &t.treeGraph();
        int k = ti.tree->vertexCount();
        ti.treeParent.assign(k, -1);
        std::vector<bool> seen(k, false);
        ti.treeOrder.push_back(0);
        seen[0] = true;
        for (std::size_t i = 0; i < ti.treeOrder.size(); ++i) {
          ti.tree->forEachNeighbor(ti.treeOrder[i], [&](int w) {
            if (!seen[w]) {
              seen[w] = true;
              ti.treeParent[w] = ti.treeOrder[i];
              ti.treeOrder.push_back(w);
            }
          });
        }
      }
    }
  }

  int edgeIndex(Edge e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges_.begin());
  }

  struct State {
    std::vector<std::int8_t> color;     // per edge, 0 = unassigned
    std::vector<std::uint64_t> adj;     // (q+1) rows of n words each
    std::vector<int> classEdges;        // per color
    std::uint64_t nodes = 0;
    // Abort plumbing for parallel branches.
    const std::atomic<int>* minSolved = nullptr;
    int branchIndex = 0;
    std::uint64_t cap = 0;
  };

  State freshState() const {
    State s;
    s.color.assign(m_, 0);
    s.adj.assign(static_cast<std::size_t>(q_ + 1) * n_, 0);
    s.classEdges.assign(q_ + 1, 0);
    return s;
  }

  const std::uint64_t* classAdj(const State& s, int c) const { return s.adj.data() + static_cast<std::size_t>(c) * n_; }

  bool createsTarget(const State& s, int c, int u, int v) const {
    const TargetInfo& ti = info_[c];
    const std::uint64_t* adj = classAdj(s, c);
    switch (ti.kind) {
      case Target::Kind::Clique: {
        if (ti.order == 2) return true;
        std::uint64_t cand = adj[u] & adj[v];
        return cliqueIn(adj, cand, ti.order - 2);
      }
      case Target::Kind::Cycle:
        return pathOfLength(adj, u, v, ti.order - 1);
      case Target::Kind::Tree:
        if (s.classEdges[c] + 1 < ti.edgeCount) return false;
        return treeEmbeds(s, c, ti, u, v);
    }
    return false;
  }

  bool cliqueIn(const std::uint64_t* adj, std::uint64_t cand, int need) const {
    if (need == 0) return true;
    if (__builtin_popcountll(cand) < need) return false;
    std::uint64_t rest = cand;
    while (rest) {
      int v = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (cliqueIn(adj, rest & adj[v], need - 1)) return true;
    }
    return false;
  }

  // Path of exactly `len` edges from u to v in the class graph (which does
  // not yet contain the edge uv).
  bool pathOfLength(const std::uint64_t* adj, int u, int v, int len) const {
    // BFS lower bounds from v.
    std::int8_t dist[kSubstrateCap];
    std::fill(dist, dist + n_, std::int8_t{-1});
    std::uint64_t frontier = bit(v);
    std::uint64_t reached = frontier;
    dist[v] = 0;
    int d = 0;
    while (frontier && d < len) {
      std::uint64_t next = 0;
      std::uint64_t f = frontier;
      while (f) {
        int w = __builtin_ctzll(f);
        f &= f - 1;
        next |= adj[w];
      }
      next &= ~reached;
      ++d;
      std::uint64_t nf = next;
      while (nf) {
        int w = __builtin_ctzll(nf);
        nf &= nf - 1;
        dist[w] = static_cast<std::int8_t>(d);
      }
      reached |= next;
      frontier = next;
    }
    if (dist[u] < 0 || dist[u] > len) return false;
    return pathDfs(adj, dist, bit(u), u, v, len);
  }

  bool pathDfs(const std::uint64_t* adj, const std::int8_t* dist, std::uint64_t visited, int cur, int v,
               int rem) const {
    if (rem == 1) return (adj[cur] & bit(v)) != 0;
    std::uint64_t nbrs = adj[cur] & ~visited & ~bit(v);
    while (nbrs) {
      int w = __builtin_ctzll(nbrs);
      nbrs &= nbrs - 1;
      if (dist[w] < 0 || dist[w] > rem - 1) continue;
      if (pathDfs(adj, dist, visited | bit(w), w, v, rem - 1)) return true;
    }
    return false;
  }

  bool treeEmbeds(const State& s, int c, const TargetInfo& ti, int newU, int newV) const {
    // Embed over the class adjacency plus the pending edge (newU,newV).
    const std::uint64_t* adj = classAdj(s, c);
    int k = ti.tree->vertexCount();
    std::vector<int> image(k, -1);
    std::uint64_t used = 0;
    auto rowOf = [&](int hv) -> std::uint64_t {
      std::uint64_t r = adj[hv];
      if (hv == newU) r |= bit(newV);
      if (hv == newV) r |= bit(newU);
      return r;
    };
    // Vertices incident to at least one class edge (or the pending edge).
    std::uint64_t active = 0;
    for (int hv = 0; hv < n_; ++hv)
      if (rowOf(hv)) active |= bit(hv);

    std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
      if (idx == ti.treeOrder.size()) return true;
      int tv = ti.treeOrder[idx];
      std::uint64_t cands = ti.treeParent[tv] < 0 ? active : rowOf(image[ti.treeParent[tv]]);
      cands &= ~used;
      while (cands) {
        int hv = __builtin_ctzll(cands);
        cands &= cands - 1;
        used |= bit(hv);
        image[tv] = hv;
        if (place(idx + 1)) return true;
        used &= ~bit(hv);
        image[tv] = -1;
      }
      return false;
    };
    return place(0);
  }

  bool pairRulesOk(const State& s, int idx, int c) const {
    for (const RuleRef& ref : rulesAt_[idx]) {
      const PairRule& rule = rules_[ref.rule];
      int other = edgeIndex(ref.firstSide ? rule.b : rule.a);
      int oc = s.color[other];
      if (oc == 0) continue;
      bool ok = ref.firstSide ? (rule.allowedSecond[c] & (std::uint32_t{1} << oc))
                              : (rule.allowedSecond[oc] & (std::uint32_t{1} << c));
      if (!ok) return false;
    }
    return true;
  }

  // Attempts to give edge `idx` color c; counts a node per attempt.
  bool tryAssign(State& s, int idx, int c) const {
    ++s.nodes;
    if (!(domain_[idx] & (std::uint32_t{1} << c))) return false;
    if (symBreak_ && idx >= 1 && idx < starLen_ && c < s.color[idx - 1]) return false;
    if (!pairRulesOk(s, idx, c)) return false;
    int u = edges_[idx].u, v = edges_[idx].v;
    if (createsTarget(s, c, u, v)) return false;
    s.color[idx] = static_cast<std::int8_t>(c);
    s.adj[static_cast<std::size_t>(c) * n_ + u] |= bit(v);
    s.adj[static_cast<std::size_t>(c) * n_ + v] |= bit(u);
    ++s.classEdges[c];
    return true;
  }

  void unassign(State& s, int idx) const {
    int c = s.color[idx];
    int u = edges_[idx].u, v = edges_[idx].v;
    s.color[idx] = 0;
    s.adj[static_cast<std::size_t>(c) * n_ + u] &= ~bit(v);
    s.adj[static_cast<std::size_t>(c) * n_ + v] &= ~bit(u);
    --s.classEdges[c];
  }

  Step dfs(State& s, int idx) const {
    if (idx == m_) return Step::Found;
    if (s.nodes >= s.cap) return Step::Aborted;
    if (s.minSolved && (s.nodes & 1023) == 0 && s.minSolved->load(std::memory_order_relaxed) < s.branchIndex)
      return Step::Aborted;
    for (int c = 1; c <= q_; ++c) {
      if (!tryAssign(s, idx, c)) continue;
      Step r = dfs(s, idx + 1);
      if (r == Step::Found) return r;
      unassign(s, idx);
      if (r == Step::Aborted) return r;
    }
    return Step::Exhausted;
  }

  // Enumerates feasible assignments of the first `depth` edges; honors the
  // state's node cap and can stop at the first leaf (used when the prefix
  // depth already covers the whole instance).
  enum class PrefixOutcome { Done, Stopped, Truncated };
  PrefixOutcome enumeratePrefixes(State& s, int idx, int depth, bool stopAtFirst,
                                  std::vector<std::vector<std::int8_t>>& out) const {
    if (idx == depth) {
      out.emplace_back(s.color.begin(), s.color.begin() + depth);
      return stopAtFirst ? PrefixOutcome::Stopped : PrefixOutcome::Done;
    }
    if (s.nodes >= s.cap) return PrefixOutcome::Truncated;
    for (int c = 1; c <= q_; ++c) {
      if (!tryAssign(s, idx, c)) continue;
      PrefixOutcome r = enumeratePrefixes(s, idx + 1, depth, stopAtFirst, out);
      unassign(s, idx);
      if (r != PrefixOutcome::Done) return r;
    }
    return PrefixOutcome::Done;
  }

  EdgeColoring extract(const State& s) const {
    EdgeColoring out;
    out.edges = edges_;
    out.colors.assign(s.color.begin(), s.color.end());
    return out;
  }

  const Graph& g_;
  const TargetTuple& targets_;
  SearchOptions opts_;
  int n_ = 0, q_ = 0, m_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> domain_;
  std::vector<PairRule> rules_;
  std::vector<std::vector<RuleRef>> rulesAt_;
  std::vector<TargetInfo> info_;
  bool symBreak_ = false;
  int starLen_ = 0;
};

int pickBranchDepth(const std::vector<std::uint32_t>& domain, int m) {
  int depth = 0;
  long long product = 1;
  while (depth < m && depth < kBranchDepthCap && product < kBranchTarget) {
    product *= std::max(1, __builtin_popcount(domain[depth]));
    ++depth;
  }
  return depth;
}

}  // namespace

SearchResult findFreeColoring(const Graph& g, const TargetTuple& targets,
                              const ColoringConstraints& constraints, const SearchOptions& opts) {
  auto start = std::chrono::steady_clock::now();
  Engine engine(g, targets, constraints, opts);
  SearchResult result;

  auto finish = [&](SearchResult r) {
    r.stats.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
  };

  // Empty domains decide immediately.
  for (std::uint32_t d : engine.domain_) {
    if (d == 0) {
      result.status = SearchStatus::Exhausted;
      result.stats.note = "an edge has an empty allowed-color set";
      return finish(result);
    }
  }
  // A forced partial assignment that already carries a monochromatic target
  // cannot be extended; report the violating target.
  if (auto violation = findMonochromeTarget(g, targets, constraints.forcedPart())) {
    result.status = SearchStatus::Exhausted;
    result.stats.note =
        "forced assignment already contains a monochromatic " + targets.target(violation->color).toString() +
        " in color " + std::to_string(violation->color);
    return finish(result);
  }

  if (engine.m_ == 0) {
    result.status = SearchStatus::Found;
    result.coloring = EdgeColoring{};
    return finish(result);
  }

  // Branch decomposition; the branch set depends only on the instance, so
  // results are identical for every thread count.
  int depth = pickBranchDepth(engine.domain_, engine.m_);
  bool coversAll = depth == engine.m_;
  Engine::State prefState = engine.freshState();
  prefState.cap = opts.nodeBudget;
  std::vector<std::vector<std::int8_t>> prefixes;
  Engine::PrefixOutcome prefOutcome = engine.enumeratePrefixes(prefState, 0, depth, coversAll, prefixes);
  std::uint64_t prefixNodes = prefState.nodes;
  int branchCount = static_cast<int>(prefixes.size());
  result.stats.branches = branchCount;

  if (prefOutcome == Engine::PrefixOutcome::Truncated) {
    result.status = SearchStatus::BudgetExceeded;
    result.stats.nodes = prefixNodes;
    result.stats.note = "node budget exceeded";
    return finish(result);
  }
  if (branchCount == 0) {
    result.status = SearchStatus::Exhausted;
    result.stats.nodes = prefixNodes;
    return finish(result);
  }
  if (coversAll) {
    // Prefix enumeration alone decides; the first leaf is the least solution.
    result.status = SearchStatus::Found;
    Engine::State s = engine.freshState();
    s.cap = ~std::uint64_t{0};
    for (int i = 0; i < depth; ++i)
      if (!engine.tryAssign(s, i, prefixes.front()[i]))
        throw LemmaContradictionError("search: prefix replay failed");
    result.coloring = engine.extract(s);
    result.stats.nodes = prefixNodes;
    return finish(result);
  }

  struct BranchResult {
    bool solved = false;
    bool truncated = false;
    bool ran = false;
    std::uint64_t nodes = 0;
    std::optional<EdgeColoring> coloring;
  };
  std::vector<BranchResult> branch(branchCount);
  std::atomic<int> nextBranch{0};
  std::atomic<int> minSolved{branchCount};

  auto worker = [&]() {
    for (;;) {
      int b = nextBranch.fetch_add(1);
      if (b >= branchCount) return;
      if (minSolved.load() < b) continue;  // cannot influence the outcome
      Engine::State s = engine.freshState();
      s.cap = opts.nodeBudget;
      s.minSolved = &minSolved;
      s.branchIndex = b;
      bool replayOk = true;
      for (int i = 0; i < depth && replayOk; ++i) replayOk = engine.tryAssign(s, i, prefixes[b][i]);
      if (!replayOk) throw LemmaContradictionError("search: prefix replay failed");
      Step r = engine.dfs(s, depth);
      BranchResult& out = branch[b];
      out.ran = true;
      out.nodes = s.nodes;
      if (r == Step::Found) {
        out.solved = true;
        out.coloring = engine.extract(s);
        int cur = minSolved.load();
        while (b < cur && !minSolved.compare_exchange_weak(cur, b)) {
        }
      } else if (r == Step::Aborted) {
        out.truncated = s.nodes >= s.cap;
      }
    }
  };

  int threads = std::max(1, opts.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  int solvedAt = -1;
  for (int b = 0; b < branchCount; ++b) {
    if (branch[b].solved) {
      solvedAt = b;
      break;
    }
  }
  if (solvedAt >= 0) {
    result.status = SearchStatus::Found;
    result.coloring = branch[solvedAt].coloring;
    result.stats.nodes = prefixNodes;
    for (int b = 0; b <= solvedAt; ++b) result.stats.nodes += branch[b].nodes;
    for (int b = 0; b < solvedAt; ++b) {
      if (branch[b].truncated) {
        result.stats.witnessCanonical = false;
        result.stats.note = "an earlier branch hit the node budget; witness may not be canonical";
      }
    }
    return finish(result);
  }
  bool anyTruncated = false;
  result.stats.nodes = prefixNodes;
  for (const BranchResult& b : branch) {
    result.stats.nodes += b.nodes;
    anyTruncated = anyTruncated || b.truncated;
  }
  result.status = anyTruncated ? SearchStatus::BudgetExceeded : SearchStatus::Exhausted;
  if (anyTruncated) result.stats.note = "node budget exceeded";
  return finish(result);
}

ArrowReport arrows(const Graph& g, const TargetTuple& targets, const ColoringConstraints& constraints,
                   const SearchOptions& opts) {
  SearchResult r = findFreeColoring(g, targets, constraints, opts);
  ArrowReport report;
  report.status = r.status;
  report.arrows = r.status == SearchStatus::Exhausted;
  report.witness = r.coloring;
  report.stats = r.stats;
  return report;
}

MinimalReport isRamseyMinimal(const Graph& g, const TargetTuple& targets, const SearchOptions& opts) {
  MinimalReport report;
  Graph host = g;
  for (int v = 0; v < g.vertexCount(); ++v)
    if (g.degree(v) == 0) report.strippedVertices.push_back(v);

  ArrowReport whole = arrows(host, targets, {}, opts);
  report.stats = whole.stats;
  if (!whole.decided()) {
    report.status = MinimalReport::Status::BudgetExceeded;
    return report;
  }
  if (!whole.arrows) {
    report.status = MinimalReport::Status::NotRamsey;
    return report;
  }
  for (const Edge& e : host.edges()) {
    ArrowReport sub = arrows(host.withoutEdge(e), targets, {}, opts);
    report.stats.nodes += sub.stats.nodes;
    report.stats.seconds += sub.stats.seconds;
    if (!sub.decided()) {
      report.status = MinimalReport::Status::BudgetExceeded;
      return report;
    }
    if (sub.arrows) {
      report.status = MinimalReport::Status::RemovableEdge;
      report.failingEdge = e;
      return report;
    }
    report.edgeWitnesses[e] = *sub.witness;
  }
  report.status = MinimalReport::Status::Minimal;
  report.minimal = true;
  return report;
}

EdgeColoring extendLowDegreeColoring(const Graph& g, int v, const EdgeColoring& base, int t, int cycleLen) {
  if (t < 3) throw PreconditionError("extend: need t >= 3");
  if (cycleLen < 4) throw PreconditionError("extend: need cycle length >= 4");
  if (v < 0 || v >= g.vertexCount()) throw PreconditionError("extend: vertex out of range");
  if (g.degree(v) > 2 * (t - 1) - 1) throw PreconditionError("extend: deg(v) exceeds 2(t-1)-1");

  TargetTuple tuple;
  tuple.targets = {Target::clique(t), Target::cycle(cycleLen)};

  Graph rest = g.withoutEdgesAt(v);
  std::vector<Edge> restEdges = rest.edges();
  if (base.edges != restEdges) throw PreconditionError("extend: base coloring must cover exactly g - v");
  if (!isFreeColoring(rest, tuple, base)) throw PreconditionError("extend: base coloring is not free");

  std::vector<int> nbrs;
  g.forEachNeighbor(v, [&](int w) { nbrs.push_back(w); });

  // Red graph induced on N(v); nbrs is ascending so local index i maps to nbrs[i].
  Graph red(static_cast<int>(nbrs.size()));
  for (std::size_t i = 0; i < nbrs.size(); ++i)
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      auto c = base.tryColorOf(Edge{nbrs[i], nbrs[j]});
      if (c && *c == 1) red.addEdge(static_cast<int>(i), static_cast<int>(j));
    }

  int blueNeighbor = -1;
  if (hasClique(red, t - 1)) {
    int local = commonCliqueVertex(red, t);
    blueNeighbor = nbrs[static_cast<std::size_t>(local)];
  }

  EdgeColoring full;
  full.edges = g.edges();
  full.colors.assign(full.edges.size(), 0);
  for (std::size_t i = 0; i < full.edges.size(); ++i) {
    const Edge& e = full.edges[i];
    if (e.u == v || e.v == v) {
      int other = e.u == v ? e.v : e.u;
      full.colors[i] = other == blueNeighbor ? 2 : 1;
    } else {
      full.colors[i] = base.colorOf(e);
    }
  }
  if (!isFreeColoring(g, tuple, full))
    throw LemmaContradictionError("extend: guaranteed extension is not free");
  return full;
}

PaletteSplitResult paletteSplitRecolor(const Graph& g, int v, int q1, int q2, int t, int cycleLen,
                                       int degreeBudget, const SearchOptions& opts) {
  if (cycleLen < 4 || t < 3 || q1 < 1 || q2 < 1)
    throw PreconditionError("paletteSplit: need l >= 4, t >= 3, q1,q2 >= 1");
  if (v < 0 || v >= g.vertexCount()) throw PreconditionError("paletteSplit: vertex out of range");
  if (degreeBudget < 1) throw PreconditionError("paletteSplit: degree budget must be positive");

  PaletteSplitResult result;
  TargetTuple tuple = cyclesAndCliques(q1, q2, cycleLen, t);

  Graph rest = g.withoutEdgesAt(v);
  SearchResult base = findFreeColoring(rest, tuple, {}, opts);
  if (base.status == SearchStatus::BudgetExceeded) {
    result.outcome = PaletteSplitResult::Outcome::BudgetExceeded;
    result.note = "budget exceeded while coloring g - v";
    return result;
  }
  if (!base.found()) {
    result.outcome = PaletteSplitResult::Outcome::BaseRamsey;
    result.note = "g - v admits no free coloring";
    return result;
  }

  // Clique-colored part of the base coloring plus a budgeted slice of the
  // star at v, then the complement.
  Graph cliquePart(g.vertexCount());
  for (std::size_t i = 0; i < base.coloring->edges.size(); ++i)
    if (base.coloring->colors[i] > q1)
      cliquePart.addEdge(base.coloring->edges[i].u, base.coloring->edges[i].v);
  int starQuota = std::min(degreeBudget - 1, g.degree(v));
  std::vector<Edge> star;
  g.forEachNeighbor(v, [&](int w) { star.push_back(Edge{v, w}); });
  std::sort(star.begin(), star.end());
  for (int i = 0; i < starQuota; ++i) cliquePart.addEdge(star[i].u, star[i].v);

  Graph cyclePart(g.vertexCount());
  for (const Edge& e : g.edges())
    if (!cliquePart.hasEdge(e.u, e.v)) cyclePart.addEdge(e.u, e.v);

  TargetTuple cliqueTuple = cyclesAndCliques(0, q2, cycleLen, t);
  ArrowReport cliqueArrow = arrows(cliquePart, cliqueTuple, {}, opts);
  if (!cliqueArrow.decided()) {
    result.outcome = PaletteSplitResult::Outcome::BudgetExceeded;
    result.note = "budget exceeded on the clique part";
    return result;
  }
  if (cliqueArrow.arrows) {
    result.outcome = PaletteSplitResult::Outcome::CliquePartRamsey;
    result.note = "clique-colored part is q2-Ramsey for K_t";
    return result;
  }
  TargetTuple cycleTuple = cyclesAndCliques(q1, 0, cycleLen, t);
  ArrowReport cycleArrow = arrows(cyclePart, cycleTuple, {}, opts);
  if (!cycleArrow.decided()) {
    result.outcome = PaletteSplitResult::Outcome::BudgetExceeded;
    result.note = "budget exceeded on the cycle part";
    return result;
  }
  if (cycleArrow.arrows) {
    result.outcome = PaletteSplitResult::Outcome::CyclePartRamsey;
    result.note = "remaining part is q1-Ramsey for C_l";
    return result;
  }

  // Combine: clique-part witness uses colors q1+1..q, cycle-part colors 1..q1.
  EdgeColoring combined;
  combined.edges = g.edges();
  combined.colors.assign(combined.edges.size(), 0);
  for (std::size_t i = 0; i < combined.edges.size(); ++i) {
    const Edge& e = combined.edges[i];
    if (cliquePart.hasEdge(e.u, e.v))
      combined.colors[i] = cliqueArrow.witness->colorOf(e) + q1;
    else
      combined.colors[i] = cycleArrow.witness->colorOf(e);
  }
  if (!isFreeColoring(g, tuple, combined))
    throw LemmaContradictionError("paletteSplit: combined coloring is not free");
  result.outcome = PaletteSplitResult::Outcome::Produced;
  result.coloring = combined;
  return result;
}

std::optional<int> ramseyNumberClique(int q, int t, int cap, const SearchOptions& opts) {
  if (q < 1 || t < 2) throw PreconditionError("ramseyNumberClique: need q >= 1, t >= 2");
  TargetTuple tuple = cyclesAndCliques(0, q, 4, t);
  for (int n = 1; n <= cap; ++n) {
    ArrowReport r = arrows(completeGraph(n), tuple, {}, opts);
    if (!r.decided()) throw std::runtime_error("ramseyNumberClique: node budget exceeded");
    if (r.arrows) return n;
  }
  return std::nullopt;
}

}  // namespace ramsey
