#include "ramsey/gadgets.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/subgraph.hpp"

namespace ramsey {

namespace {

void validateSpec(const GadgetSpec& spec, int expectedSignals) {
  int q = spec.targets.colorCount();
  if (static_cast<int>(spec.signals.size()) != expectedSignals)
    throw PreconditionError("gadget: wrong signal edge count for role");
  for (const Edge& s : spec.signals)
    if (!spec.graph.hasEdge(s.u, s.v)) throw PreconditionError("gadget: signal edge not in graph");
  std::uint32_t palette = ((std::uint32_t{1} << (q + 1)) - 2);
  if (spec.colorSet == 0 || (spec.colorSet & ~palette))
    throw PreconditionError("gadget: color set must be a nonempty subset of the palette");
  if (spec.role == GadgetRole::NegativeSender && __builtin_popcount(spec.colorSet) < 2)
    throw PreconditionError("gadget: negative sender needs |X| >= 2");
}

// Remaps `gadget`'s graph into `host`: signal endpoints onto anchor
// endpoints (in order), the rest onto fresh vertices. Also remaps the
// gadget's own constraints. Returns the fresh-vertex offset.
int spliceCopy(Graph& host, ColoringConstraints& cons, const std::vector<Edge>& anchors,
               const GadgetSpec& gadget) {
  std::vector<int> map(gadget.graph.vertexCount(), -1);
  for (std::size_t s = 0; s < anchors.size(); ++s) {
    map[gadget.signals[s].u] = anchors[s].u;
    map[gadget.signals[s].v] = anchors[s].v;
  }
  int offset = host.vertexCount();
  int fresh = 0;
  for (int v = 0; v < gadget.graph.vertexCount(); ++v)
    if (map[v] == -1) map[v] = offset + fresh++;
  host.addVertices(fresh);
  for (const Edge& e : gadget.graph.edges()) host.addEdge(map[e.u], map[e.v]);
  for (const auto& [e, mask] : gadget.constraints.allowed) cons.restrict(Edge{map[e.u], map[e.v]}, mask);
  for (const PairRule& rule : gadget.constraints.pairs) {
    PairRule mapped = rule;
    mapped.a = Edge{map[rule.a.u], map[rule.a.v]};
    mapped.b = Edge{map[rule.b.u], map[rule.b.v]};
    cons.pairs.push_back(std::move(mapped));
  }
  return offset;
}

AxiomResult undecided(const std::string& what) {
  AxiomResult r;
  r.pass = false;
  r.decided = false;
  r.detail = what;
  return r;
}

}  // namespace

GadgetSpec oracleDeterminer(std::uint32_t colorSet, TargetTuple targets) {
  GadgetSpec spec;
  spec.graph = Graph(2);
  spec.graph.addEdge(0, 1);
  spec.signals = {Edge{0, 1}};
  spec.colorSet = colorSet;
  spec.role = GadgetRole::Determiner;
  spec.targets = std::move(targets);
  spec.oracle = true;
  validateSpec(spec, 1);
  return spec;
}

GadgetSpec oracleSender(bool negative, std::uint32_t colorSet, TargetTuple targets) {
  GadgetSpec spec;
  spec.graph = Graph(4);
  spec.graph.addEdge(0, 1);
  spec.graph.addEdge(2, 3);
  spec.signals = {Edge{0, 1}, Edge{2, 3}};
  spec.colorSet = colorSet;
  spec.role = negative ? GadgetRole::NegativeSender : GadgetRole::PositiveSender;
  spec.targets = std::move(targets);
  spec.oracle = true;
  validateSpec(spec, 2);
  return spec;
}

GadgetReport verifyDeterminer(const GadgetSpec& spec, const SearchOptions& opts) {
  if (spec.role != GadgetRole::Determiner) throw PreconditionError("verifyDeterminer: role must be Determiner");
  validateSpec(spec, 1);
  int q = spec.targets.colorCount();
  Edge d = spec.signal();
  GadgetReport report;

  ArrowReport a = arrows(spec.graph, spec.targets, spec.constraints, opts);
  if (!a.decided()) {
    report.notRamsey = undecided("budget exceeded while deciding (D1)");
    report.exhaustive = false;
  } else {
    report.notRamsey.pass = !a.arrows;
    if (a.arrows)
      report.notRamsey.detail = "gadget arrows the tuple (search exhausted " +
                                std::to_string(a.stats.nodes) + " nodes)";
  }

  report.colorRestrict.pass = true;
  for (int c = 1; c <= q; ++c) {
    if (spec.colorSet & (std::uint32_t{1} << c)) continue;
    ColoringConstraints cons = spec.constraints;
    cons.forceColor(d, c);
    SearchResult r = findFreeColoring(spec.graph, spec.targets, cons, opts);
    if (r.status == SearchStatus::BudgetExceeded) {
      report.colorRestrict = undecided("budget exceeded on (D2), color " + std::to_string(c));
      report.exhaustive = false;
      break;
    }
    if (r.found()) {
      report.colorRestrict.pass = false;
      report.colorRestrict.violation = r.coloring;
      report.colorRestrict.detail = "free coloring gives the signal color " + std::to_string(c);
      report.colorRestrict.missing.push_back({c, 0});
      break;
    }
  }

  report.colorCover.pass = true;
  for (int c = 1; c <= q; ++c) {
    if (!(spec.colorSet & (std::uint32_t{1} << c))) continue;
    ColoringConstraints cons = spec.constraints;
    cons.forceColor(d, c);
    SearchResult r = findFreeColoring(spec.graph, spec.targets, cons, opts);
    if (r.status == SearchStatus::BudgetExceeded) {
      report.colorCover = undecided("budget exceeded on (D3), color " + std::to_string(c));
      report.exhaustive = false;
      break;
    }
    if (!r.found()) {
      report.colorCover.pass = false;
      report.colorCover.missing.push_back({c, 0});
    } else {
      report.colorCover.witnesses.push_back(*r.coloring);
    }
  }
  return report;
}

GadgetReport verifySender(const GadgetSpec& spec, const SearchOptions& opts) {
  if (spec.role == GadgetRole::Determiner) throw PreconditionError("verifySender: role must be a sender");
  validateSpec(spec, 2);
  int q = spec.targets.colorCount();
  bool negative = spec.role == GadgetRole::NegativeSender;
  Edge e = spec.signals[0], f = spec.signals[1];
  GadgetReport report;

  ArrowReport a = arrows(spec.graph, spec.targets, spec.constraints, opts);
  if (!a.decided()) {
    report.notRamsey = undecided("budget exceeded while deciding (S1)");
    report.exhaustive = false;
  } else {
    report.notRamsey.pass = !a.arrows;
    if (a.arrows)
      report.notRamsey.detail = "gadget arrows the tuple (search exhausted " +
                                std::to_string(a.stats.nodes) + " nodes)";
  }

  auto allowedPair = [&](int c1, int c2) {
    bool inSet = (spec.colorSet & (std::uint32_t{1} << c1)) && (spec.colorSet & (std::uint32_t{1} << c2));
    return inSet && (negative ? c1 != c2 : c1 == c2);
  };

  report.colorRestrict.pass = true;
  for (int c1 = 1; c1 <= q && report.colorRestrict.pass && report.colorRestrict.decided; ++c1) {
    for (int c2 = 1; c2 <= q; ++c2) {
      if (allowedPair(c1, c2)) continue;
      ColoringConstraints cons = spec.constraints;
      cons.forceColor(e, c1);
      cons.forceColor(f, c2);
      SearchResult r = findFreeColoring(spec.graph, spec.targets, cons, opts);
      if (r.status == SearchStatus::BudgetExceeded) {
        report.colorRestrict = undecided("budget exceeded on (S2)");
        report.exhaustive = false;
        break;
      }
      if (r.found()) {
        report.colorRestrict.pass = false;
        report.colorRestrict.violation = r.coloring;
        report.colorRestrict.missing.push_back({c1, c2});
        report.colorRestrict.detail = "free coloring realizes the disallowed signal pair (" +
                                      std::to_string(c1) + "," + std::to_string(c2) + ")";
        break;
      }
    }
  }

  report.colorCover.pass = true;
  for (int c1 = 1; c1 <= q && report.colorCover.decided; ++c1) {
    for (int c2 = 1; c2 <= q; ++c2) {
      if (!allowedPair(c1, c2)) continue;
      ColoringConstraints cons = spec.constraints;
      cons.forceColor(e, c1);
      cons.forceColor(f, c2);
      SearchResult r = findFreeColoring(spec.graph, spec.targets, cons, opts);
      if (r.status == SearchStatus::BudgetExceeded) {
        report.colorCover = undecided("budget exceeded on (S3)");
        report.exhaustive = false;
        break;
      }
      if (!r.found()) {
        report.colorCover.pass = false;
        report.colorCover.missing.push_back({c1, c2});
      } else {
        report.colorCover.witnesses.push_back(*r.coloring);
      }
    }
  }
  return report;
}

int attachDeterminer(Graph& host, ColoringConstraints& cons, Edge hostEdge, const GadgetSpec& gadget) {
  if (!host.hasEdge(hostEdge.u, hostEdge.v)) throw PreconditionError("attach: host edge missing");
  if (gadget.signals.size() != 1) throw PreconditionError("attach: determiner needs one signal edge");
  if (gadget.oracle) {
    cons.restrict(hostEdge, gadget.colorSet);
    return -1;
  }
  return spliceCopy(host, cons, {hostEdge}, gadget);
}

int joinBySender(Graph& host, ColoringConstraints& cons, Edge e1, Edge e2, const GadgetSpec& sender) {
  if (!host.hasEdge(e1.u, e1.v) || !host.hasEdge(e2.u, e2.v))
    throw PreconditionError("join: host edge missing");
  if (sender.signals.size() != 2) throw PreconditionError("join: sender needs two signal edges");
  if (sender.oracle) {
    cons.addSenderRule(e1, e2, sender.colorSet, sender.role == GadgetRole::NegativeSender,
                       sender.targets.colorCount());
    return -1;
  }
  return spliceCopy(host, cons, {e1, e2}, sender);
}

GadgetSpec composeComplementDeterminer(const GadgetSpec& redDeterminer, int k) {
  const TargetTuple& t = redDeterminer.targets;
  if (t.colorCount() != 2 || t.target(1).kind() != Target::Kind::Cycle ||
      t.target(2).kind() != Target::Kind::Cycle)
    throw PreconditionError("composeComplement: targets must be a cycle pair");
  if (t.target(1).order() != k) throw PreconditionError("composeComplement: k must match the first cycle");
  if (k >= t.target(2).order()) throw PreconditionError("composeComplement: need k < l");
  if (redDeterminer.role != GadgetRole::Determiner || redDeterminer.colorSet != (std::uint32_t{1} << 1))
    throw PreconditionError("composeComplement: need a {red}-determiner");

  GadgetSpec out;
  out.graph = cycleGraph(k);
  out.targets = t;
  out.role = GadgetRole::Determiner;
  out.colorSet = std::uint32_t{1} << 2;
  Edge e{0, 1};
  out.signals = {e};
  for (const Edge& edge : cycleGraph(k).edges())
    if (!(edge == e)) attachDeterminer(out.graph, out.constraints, edge, redDeterminer);
  return out;
}

GadgetSpec determinerFromMinimal(const Graph& g, const std::vector<int>& cliqueVertices, Edge e,
                                 const TargetTuple& targets) {
  std::vector<int> vs = cliqueVertices;
  std::sort(vs.begin(), vs.end());
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      if (!g.hasEdge(vs[i], vs[j])) throw PreconditionError("determinerFromMinimal: copy is not a clique");
  bool eu = std::binary_search(vs.begin(), vs.end(), e.u);
  bool ev = std::binary_search(vs.begin(), vs.end(), e.v);
  if (!eu || !ev) throw PreconditionError("determinerFromMinimal: e must lie inside the clique copy");

  GadgetSpec out;
  out.graph = g;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      Edge inside{vs[i], vs[j]};
      if (!(inside == e)) out.graph.removeEdge(inside.u, inside.v);
    }
  out.signals = {e};
  out.targets = targets;
  out.role = GadgetRole::Determiner;
  out.colorSet = colorSetMask(targets.cliqueColors());
  return out;
}

GadgetSpec buildCycleDeterminer(const GadgetSpec& cliqueDeterminer, int h) {
  if (h < 2) throw PreconditionError("buildCycleDeterminer: need h >= 2");
  if (cliqueDeterminer.role != GadgetRole::Determiner)
    throw PreconditionError("buildCycleDeterminer: need a determiner input");
  GadgetSpec out;
  out.graph = completeGraph(h);
  out.targets = cliqueDeterminer.targets;
  out.role = GadgetRole::Determiner;
  out.colorSet = colorSetMask(out.targets.cycleColors());
  Edge f{0, 1};
  out.signals = {f};
  for (const Edge& edge : completeGraph(h).edges())
    if (!(edge == f)) attachDeterminer(out.graph, out.constraints, edge, cliqueDeterminer);
  return out;
}

GadgetSpec buildSetSender(const Graph& s, Edge e, Edge f, const GadgetSpec& determiner, bool negative,
                          std::uint32_t colorSet, bool oracleSkeleton) {
  if (!s.hasEdge(e.u, e.v) || !s.hasEdge(f.u, f.v))
    throw PreconditionError("buildSetSender: signal edges must lie in the skeleton");
  GadgetSpec out;
  out.graph = s;
  out.signals = {e, f};
  out.colorSet = colorSet;
  out.role = negative ? GadgetRole::NegativeSender : GadgetRole::PositiveSender;
  out.targets = determiner.targets;
  if (oracleSkeleton)
    out.constraints.addSenderRule(e, f, colorSet, negative, out.targets.colorCount());
  for (const Edge& edge : s.edges()) attachDeterminer(out.graph, out.constraints, edge, determiner);
  validateSpec(out, 2);
  return out;
}

bool checkStructuralSafety(const GadgetSpec& spec, int cycleLen) {
  auto g = spec.graph.girth();
  if (g && *g < cycleLen) return false;
  if (spec.signals.size() == 2) {
    auto d = spec.graph.edgeDistance(spec.signals[0], spec.signals[1]);
    if (d && *d < cycleLen + 1) return false;
  }
  return true;
}

SafetyProbeResult boundedSafetyProbe(const GadgetSpec& spec, const EdgeColoring& base, int maxProbeVertices,
                                     std::uint64_t workBudget) {
  if (maxProbeVertices > 6) throw PreconditionError("safetyProbe: probe cap is 6 vertices");
  if (base.edges != spec.graph.edges())
    throw PreconditionError("safetyProbe: base coloring must cover the gadget exactly");
  if (!isFreeColoring(spec.graph, spec.targets, base))
    throw PreconditionError("safetyProbe: base coloring is not free");

  SafetyProbeResult result;

  // Probes are attachment-shaped: they contain the signal edge(s), exactly
  // as every composition identifies them, plus arbitrary further edges on
  // the signal vertices and fresh ones. Pools too small to host the
  // signals admit no probe, so the check passes vacuously (m = 0 included).
  int q = spec.targets.colorCount();
  std::vector<int> shared;
  for (const Edge& s : spec.signals) {
    shared.push_back(s.u);
    shared.push_back(s.v);
  }
  std::sort(shared.begin(), shared.end());
  shared.erase(std::unique(shared.begin(), shared.end()), shared.end());
  int s = static_cast<int>(shared.size());
  if (maxProbeVertices < s) return result;

  std::uint64_t work = 0;
  auto spend = [&](std::uint64_t units) {
    work += units;
    if (work > workBudget) throw BudgetExceededError("safetyProbe: work budget exceeded");
  };

  int n = spec.graph.vertexCount();
  {
    for (int freshCount = 0; s + freshCount <= maxProbeVertices; ++freshCount) {
      std::vector<int> pool = shared;
      for (int i = 0; i < freshCount; ++i) pool.push_back(n + i);
      int pv = static_cast<int>(pool.size());
      if (pv < 2) continue;
      int cells = pv * (pv - 1) / 2;
      // Cells carrying a signal edge are mandatory.
      std::uint32_t signalCells = 0;
      {
        int cell = 0;
        for (int i = 0; i < pv; ++i)
          for (int j = i + 1; j < pv; ++j, ++cell)
            for (const Edge& sig : spec.signals)
              if (sig == Edge{pool[i], pool[j]}) signalCells |= std::uint32_t{1} << cell;
      }
      for (std::uint32_t edgeMask = 0; edgeMask < (std::uint32_t{1} << cells); ++edgeMask) {
        spend(1);
        if ((edgeMask & signalCells) != signalCells) continue;
        // Decode the probe edge set over the pool.
        std::vector<Edge> probeEdges;
        int cell = 0;
        for (int i = 0; i < pv; ++i)
          for (int j = i + 1; j < pv; ++j, ++cell)
            if (edgeMask & (std::uint32_t{1} << cell)) probeEdges.push_back(Edge{pool[i], pool[j]});
        // Fresh vertices must all be used; an unused one is covered by a
        // smaller pool.
        bool freshUnused = false;
        for (int i = s; i < pv && !freshUnused; ++i) {
          bool touched = false;
          for (const Edge& e : probeEdges)
            if (e.u == pool[i] || e.v == pool[i]) touched = true;
          freshUnused = !touched;
        }
        if (freshUnused) continue;

        // Union host: the gadget plus fresh probe vertices.
        Graph unionGraph = spec.graph;
        unionGraph.addVertices(freshCount);
        std::vector<Edge> newEdges;  // probe edges not already in the gadget
        for (const Edge& e : probeEdges) {
          if (e.u < n && e.v < n && spec.graph.hasEdge(e.u, e.v)) continue;
          unionGraph.addEdge(e.u, e.v);
          newEdges.push_back(e);
        }

        // Enumerate free colorings of the probe agreeing with `base` on
        // shared edges; the shared part is fixed, only new edges vary.
        Graph probeGraph(unionGraph.vertexCount());
        for (const Edge& e : probeEdges) probeGraph.addEdge(e.u, e.v);
        std::vector<int> assign(newEdges.size(), 0);
        std::function<bool(std::size_t)> enumerate = [&](std::size_t idx) -> bool {
          spend(1);
          if (idx == newEdges.size()) {
            // Probe-free by construction; check the union stays free.
            EdgeColoring unionColoring;
            unionColoring.edges = unionGraph.edges();
            unionColoring.colors.assign(unionColoring.edges.size(), 0);
            for (std::size_t i = 0; i < unionColoring.edges.size(); ++i) {
              const Edge& e = unionColoring.edges[i];
              auto fromBase = base.tryColorOf(e);
              if (fromBase) {
                unionColoring.colors[i] = *fromBase;
              } else {
                for (std::size_t k = 0; k < newEdges.size(); ++k)
                  if (newEdges[k] == e) unionColoring.colors[i] = assign[k];
              }
            }
            if (!isFreeColoring(unionGraph, spec.targets, unionColoring)) {
              result.pass = false;
              result.counterexample = SafetyCounterexample{unionGraph, unionColoring, probeEdges};
              return true;
            }
            return false;
          }
          for (int c = 1; c <= q; ++c) {
            assign[idx] = c;
            // The probe part (shared edges colored per base, new edges per
            // assign so far) must stay target-free to qualify as a free
            // probe coloring.
            EdgeColoring partial;
            for (const Edge& e : probeGraph.edges()) {
              auto fromBase = base.tryColorOf(e);
              int color = 0;
              if (fromBase) {
                color = *fromBase;
              } else {
                for (std::size_t k = 0; k <= idx; ++k)
                  if (newEdges[k] == e) color = assign[k];
              }
              if (color != 0) {
                partial.edges.push_back(e);
                partial.colors.push_back(color);
              }
            }
            bool probeFree = true;
            for (int col = 1; col <= q; ++col) {
              Graph cls = partial.colorClass(col, unionGraph.vertexCount());
              if (hasTarget(cls, spec.targets.target(col))) {
                probeFree = false;
                break;
              }
            }
            if (probeFree && enumerate(idx + 1)) return true;
          }
          assign[idx] = 0;
          return false;
        };
        ++result.probesTried;
        if (enumerate(0)) return result;
      }
    }
  }
  return result;
}

std::optional<GadgetSpec> searchGadget(GadgetRole role, std::uint32_t colorSet, const TargetTuple& targets,
                                       int vertexBudget, const std::function<std::optional<Graph>()>& stream,
                                       const SearchOptions& opts) {
  for (std::optional<Graph> g = stream(); g.has_value(); g = stream()) {
    if (g->vertexCount() > vertexBudget) continue;
    std::vector<Edge> edges = g->edges();
    if (role == GadgetRole::Determiner) {
      for (const Edge& d : edges) {
        GadgetSpec spec;
        spec.graph = *g;
        spec.signals = {d};
        spec.colorSet = colorSet;
        spec.role = role;
        spec.targets = targets;
        GadgetReport report = verifyDeterminer(spec, opts);
        if (!report.exhaustive) throw BudgetExceededError("searchGadget: verification budget exceeded");
        if (report.allPass()) return spec;
      }
    } else {
      for (std::size_t i = 0; i < edges.size(); ++i) {
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
          GadgetSpec spec;
          spec.graph = *g;
          spec.signals = {edges[i], edges[j]};
          spec.colorSet = colorSet;
          spec.role = role;
          spec.targets = targets;
          GadgetReport report = verifySender(spec, opts);
          if (!report.exhaustive) throw BudgetExceededError("searchGadget: verification budget exceeded");
          if (report.allPass()) return spec;
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace ramsey
