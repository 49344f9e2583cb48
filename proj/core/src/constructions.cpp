#include "ramsey/constructions.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"

namespace ramsey {

namespace {

// Attach point for constructions: oracle determiners become exact forced
// colors (their color set must be a singleton), real ones splice in a copy.
void placeDeterminer(Graph& g, PartialColoring& forced, Edge e, const GadgetSpec& det) {
  if (det.oracle) {
    if (__builtin_popcount(det.colorSet) != 1)
      throw PreconditionError("construction: oracle determiners need a singleton color set");
    forced.set(e, __builtin_ctz(det.colorSet));
    return;
  }
  ColoringConstraints cons;
  attachDeterminer(g, cons, e, det);
  if (!cons.emptyConstraints())
    throw PreconditionError("construction: real gadget copies must not carry constraints");
}

// Adds a u-w path of the given length (length-1 fresh internal vertices);
// returns its edges in order.
std::vector<Edge> addPath(Graph& g, int u, int w, int length) {
  std::vector<Edge> edges;
  int prev = u;
  for (int i = 0; i < length - 1; ++i) {
    int mid = g.addVertices(1);
    g.addEdge(prev, mid);
    edges.push_back(Edge{prev, mid});
    prev = mid;
  }
  g.addEdge(prev, w);
  edges.push_back(Edge{prev, w});
  return edges;
}

void expectDeterminer(const GadgetSpec& spec, std::uint32_t colorSet, const char* what) {
  if (spec.role != GadgetRole::Determiner || spec.colorSet != colorSet)
    throw PreconditionError(std::string("construction: ") + what + " has the wrong role or color set");
}

}  // namespace

HostGraph buildTreeCliqueHost(int t, int treeOrder) {
  if (t < 3 || treeOrder < 2) throw PreconditionError("treeCliqueHost: need t >= 3, tree order >= 2");
  int m = (t - 1) * (treeOrder - 1);
  HostGraph host;
  host.graph = completeGraph(t);
  host.apex = 0;
  for (int u = 1; u < t; ++u) {
    int first = host.graph.addVertices(m - 1);
    std::vector<int> copy = {u};
    for (int i = 0; i < m - 1; ++i) copy.push_back(first + i);
    for (std::size_t i = 0; i < copy.size(); ++i)
      for (std::size_t j = i + 1; j < copy.size(); ++j) host.graph.addEdge(copy[i], copy[j]);
  }
  host.targets.targets = {Target::clique(t), Target::tree(pathGraph(treeOrder))};
  host.provenance =
      "tree-clique host t=" + std::to_string(t) + " l=" + std::to_string(treeOrder);
  return host;
}

HostGraph buildCycleCycleHost(int k, int l, const GadgetSpec& redDet, const GadgetSpec& blueDet) {
  if (k < 4 || k >= l) throw PreconditionError("cycleCycleHost: need 4 <= k < l");
  expectDeterminer(redDet, std::uint32_t{1} << 1, "red determiner");
  expectDeterminer(blueDet, std::uint32_t{1} << 2, "blue determiner");

  HostGraph host;
  host.graph = Graph(3);  // branch vertices x, y, z
  const std::pair<int, int> pairs[3] = {{0, 1}, {0, 2}, {1, 2}};
  std::vector<Edge> shortEdges, longEdges;
  for (auto [a, b] : pairs) {
    auto edges = addPath(host.graph, a, b, k - 2);
    shortEdges.insert(shortEdges.end(), edges.begin(), edges.end());
  }
  for (auto [a, b] : pairs) {
    auto edges = addPath(host.graph, a, b, l - 2);
    longEdges.insert(longEdges.end(), edges.begin(), edges.end());
  }
  host.apex = host.graph.addVertices(1);
  for (int v = 0; v < 3; ++v) host.graph.addEdge(host.apex, v);
  host.graph.labels.assign(static_cast<std::size_t>(host.graph.vertexCount()), "");
  host.graph.labels[0] = "x";
  host.graph.labels[1] = "y";
  host.graph.labels[2] = "z";
  host.graph.labels[static_cast<std::size_t>(host.apex)] = "apex";
  for (int v = 3; v < host.apex; ++v)
    host.graph.labels[static_cast<std::size_t>(v)] = "p" + std::to_string(v);

  for (const Edge& e : shortEdges) placeDeterminer(host.graph, host.forced, e, redDet);
  for (const Edge& e : longEdges) placeDeterminer(host.graph, host.forced, e, blueDet);

  host.targets.targets = {Target::cycle(k), Target::cycle(l)};
  host.provenance = "cycle-cycle host k=" + std::to_string(k) + " l=" + std::to_string(l);
  return host;
}

HostGraph buildCliqueCycleHost(int t, int l, const GadgetSpec& redDet, const GadgetSpec& blueDet) {
  if (t < 3 || l < 4) throw PreconditionError("cliqueCycleHost: need t >= 3, l >= 4");
  expectDeterminer(redDet, std::uint32_t{1} << 1, "red determiner");
  expectDeterminer(blueDet, std::uint32_t{1} << 2, "blue determiner");

  HostGraph host;
  std::vector<int> parts(static_cast<std::size_t>(t - 1), 2);
  host.graph = completeMultipartite(parts);  // parts are {2i, 2i+1}
  int coreSize = 2 * (t - 1);
  std::vector<Edge> coreEdges = host.graph.edges();
  std::vector<Edge> pathEdges;
  for (int part = 0; part < t - 1; ++part) {
    auto edges = addPath(host.graph, 2 * part, 2 * part + 1, l - 2);
    pathEdges.insert(pathEdges.end(), edges.begin(), edges.end());
  }
  host.apex = host.graph.addVertices(1);
  for (int v = 0; v < coreSize; ++v) host.graph.addEdge(host.apex, v);

  for (const Edge& e : coreEdges) placeDeterminer(host.graph, host.forced, e, redDet);
  for (const Edge& e : pathEdges) placeDeterminer(host.graph, host.forced, e, blueDet);

  host.targets.targets = {Target::clique(t), Target::cycle(l)};
  host.provenance = "clique-cycle host t=" + std::to_string(t) + " l=" + std::to_string(l);
  return host;
}

namespace {

HostGraph packingHostSkeleton(const ColorPattern& pattern, int t, int l,
                              std::vector<std::vector<Edge>>& pathEdgesPerCycleColor,
                              std::vector<std::vector<Edge>>& patternEdgesPerCliqueColor) {
  if (t < 3 || l < 4) throw PreconditionError("packingHost: need t >= 3, l >= 4");
  PatternCheck check = verifyPattern(pattern, t - 1);
  if (!check.valid) throw PreconditionError("packingHost: pattern is not valid: " + check.reason);

  HostGraph host;
  host.graph = Graph(pattern.n);
  patternEdgesPerCliqueColor.assign(static_cast<std::size_t>(pattern.q2()), {});
  for (int j = 0; j < pattern.q2(); ++j) {
    for (const Edge& e : pattern.graphs[static_cast<std::size_t>(j)].edges()) {
      host.graph.addEdge(e.u, e.v);
      patternEdgesPerCliqueColor[static_cast<std::size_t>(j)].push_back(e);
    }
  }
  pathEdgesPerCycleColor.assign(static_cast<std::size_t>(pattern.q1), {});
  for (int i = 0; i < pattern.q1; ++i)
    for (int u = 0; u < pattern.n; ++u)
      for (int w = u + 1; w < pattern.n; ++w) {
        auto edges = addPath(host.graph, u, w, l - 2);
        auto& bucket = pathEdgesPerCycleColor[static_cast<std::size_t>(i)];
        bucket.insert(bucket.end(), edges.begin(), edges.end());
      }
  host.apex = host.graph.addVertices(1);
  for (int u = 0; u < pattern.n; ++u) host.graph.addEdge(host.apex, u);
  host.targets = cyclesAndCliques(pattern.q1, pattern.q2(), l, t);
  host.provenance = "packing host n=" + std::to_string(pattern.n) + " q1=" + std::to_string(pattern.q1) +
                    " q2=" + std::to_string(pattern.q2()) + " t=" + std::to_string(t) +
                    " l=" + std::to_string(l);
  return host;
}

}  // namespace

HostGraph buildPackingHost(const ColorPattern& pattern, int t, int l) {
  std::vector<std::vector<Edge>> pathEdges, patternEdges;
  HostGraph host = packingHostSkeleton(pattern, t, l, pathEdges, patternEdges);
  for (int i = 0; i < pattern.q1; ++i)
    for (const Edge& e : pathEdges[static_cast<std::size_t>(i)]) host.forced.set(e, i + 1);
  for (int j = 0; j < pattern.q2(); ++j)
    for (const Edge& e : patternEdges[static_cast<std::size_t>(j)]) host.forced.set(e, pattern.q1 + j + 1);
  return host;
}

HostGraph buildPackingHost(const ColorPattern& pattern, int t, int l, const GadgetLibrary& lib) {
  std::vector<std::vector<Edge>> pathEdges, patternEdges;
  HostGraph host = packingHostSkeleton(pattern, t, l, pathEdges, patternEdges);
  int q1 = pattern.q1, q2 = pattern.q2();
  ColoringConstraints cons;  // only populated by oracle library members

  // Matching edges e_1..e_q, created only for palettes that need senders.
  std::vector<Edge> matching(static_cast<std::size_t>(q1 + q2), Edge{-1, -1});
  auto matchingEdge = [&](int color) {
    if (matching[static_cast<std::size_t>(color - 1)].u == -1) {
      int a = host.graph.addVertices(2);
      host.graph.addEdge(a, a + 1);
      matching[static_cast<std::size_t>(color - 1)] = Edge{a, a + 1};
    }
    return matching[static_cast<std::size_t>(color - 1)];
  };

  if (q1 > 1) {
    if (!lib.cycleNegativeSender || !lib.cyclePositiveSender)
      throw PreconditionError("packingHost: q1 > 1 needs cycle senders");
    for (int i = 1; i <= q1; ++i)
      for (int j = i + 1; j <= q1; ++j)
        joinBySender(host.graph, cons, matchingEdge(i), matchingEdge(j), *lib.cycleNegativeSender);
    for (int i = 1; i <= q1; ++i)
      for (const Edge& f : pathEdges[static_cast<std::size_t>(i - 1)])
        joinBySender(host.graph, cons, matchingEdge(i), f, *lib.cyclePositiveSender);
  } else if (q1 == 1) {
    if (!lib.cycleDeterminer) throw PreconditionError("packingHost: q1 = 1 needs a cycle determiner");
    for (const Edge& f : pathEdges[0]) attachDeterminer(host.graph, cons, f, *lib.cycleDeterminer);
  }
  if (q2 > 1) {
    if (!lib.cliqueNegativeSender || !lib.cliquePositiveSender)
      throw PreconditionError("packingHost: q2 > 1 needs clique senders");
    for (int i = 1; i <= q2; ++i)
      for (int j = i + 1; j <= q2; ++j)
        joinBySender(host.graph, cons, matchingEdge(q1 + i), matchingEdge(q1 + j),
                     *lib.cliqueNegativeSender);
    for (int i = 1; i <= q2; ++i)
      for (const Edge& f : patternEdges[static_cast<std::size_t>(i - 1)])
        joinBySender(host.graph, cons, matchingEdge(q1 + i), f, *lib.cliquePositiveSender);
  } else if (q2 == 1) {
    if (!lib.cliqueDeterminer) throw PreconditionError("packingHost: q2 = 1 needs a clique determiner");
    for (const Edge& f : patternEdges[0]) attachDeterminer(host.graph, cons, f, *lib.cliqueDeterminer);
  }

  // Oracle library members surface as forced colors; pair rules have no
  // place in a HostGraph and are rejected.
  if (!cons.pairs.empty())
    throw PreconditionError("packingHost: oracle senders are not representable in a host skeleton");
  for (const auto& [e, mask] : cons.allowed) {
    if (__builtin_popcount(mask) != 1)
      throw PreconditionError("packingHost: oracle constraints must be singletons");
    host.forced.set(e, __builtin_ctz(mask));
  }
  return host;
}

DichotomyReport checkSkeletonDichotomy(const HostGraph& host, const SearchOptions& opts) {
  DichotomyReport report;
  ColoringConstraints cons = ColoringConstraints::fromPartial(host.forced);
  report.host = arrows(host.graph, host.targets, cons, opts);
  Graph apexless = host.graph.withoutEdgesAt(host.apex);
  report.apexless = findFreeColoring(apexless, host.targets, cons, opts);
  report.holds = report.host.decided() && report.host.arrows && report.apexless.found();
  return report;
}

}  // namespace ramsey
