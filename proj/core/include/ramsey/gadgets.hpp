#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/arrowing.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

enum class GadgetRole { Determiner, PositiveSender, NegativeSender };

/// A gadget graph with distinguished signal edge(s), a color set X, and the
/// tuple it is meant for. Oracle gadgets are single-edge placeholders whose
/// semantics are realized as forced-color constraints when attached; a
/// composed skeleton carries those constraints in `constraints`.
struct GadgetSpec {
  Graph graph;
  std::vector<Edge> signals;  // one edge (determiner) or two (sender)
  std::uint32_t colorSet = 0;
  GadgetRole role = GadgetRole::Determiner;
  TargetTuple targets;
  ColoringConstraints constraints;
  bool oracle = false;

  Edge signal() const { return signals.at(0); }
};

/// Single-edge oracle determiner: attaching it constrains the host edge's
/// color to lie in X.
GadgetSpec oracleDeterminer(std::uint32_t colorSet, TargetTuple targets);

/// Two-disjoint-edge oracle sender skeleton: joining realizes the pairwise
/// color rule (distinct within X if negative, equal if positive).
GadgetSpec oracleSender(bool negative, std::uint32_t colorSet, TargetTuple targets);

struct AxiomResult {
  bool pass = false;
  bool decided = true;  // false when the node budget truncated a subcall
  std::string detail;
  /// D2/S2 failures: a free coloring violating the color restriction.
  std::optional<EdgeColoring> violation;
  /// D3/S3 failures: the colors (or ordered color pairs) with no coloring.
  std::vector<std::pair<int, int>> missing;
  /// D3/S3 passes: one witness coloring per required color / pair.
  std::vector<EdgeColoring> witnesses;
};

struct GadgetReport {
  AxiomResult notRamsey;      // (D1) / (S1)
  AxiomResult colorRestrict;  // (D2) / (S2)
  AxiomResult colorCover;     // (D3) / (S3)
  bool exhaustive = true;

  bool allPass() const { return notRamsey.pass && colorRestrict.pass && colorCover.pass; }
};

/// Checks the three set-determiner axioms via constrained searches.
GadgetReport verifyDeterminer(const GadgetSpec& spec, const SearchOptions& opts = {});

/// Checks the three set-sender axioms over all ordered signal color pairs.
GadgetReport verifySender(const GadgetSpec& spec, const SearchOptions& opts = {});

/// Attaches a copy of a determiner to an edge of `host` (fresh vertices,
/// signal endpoints identified in the given order); oracle copies turn into
/// constraints on that edge. Returns the vertex offset of the fresh copy
/// (-1 for oracle attachments).
int attachDeterminer(Graph& host, ColoringConstraints& cons, Edge hostEdge, const GadgetSpec& gadget);

/// Joins two host edges by a sender copy; oracle copies become pair rules.
int joinBySender(Graph& host, ColoringConstraints& cons, Edge e1, Edge e2, const GadgetSpec& sender);

/// The complement-color determiner for a cycle pair (C_k, C_l), k < l:
/// a fresh k-cycle with the red determiner attached to every edge except
/// the distinguished one, which becomes a blue signal.
GadgetSpec composeComplementDeterminer(const GadgetSpec& redDeterminer, int k);

/// D = G - (H - e) for a clique copy H on `cliqueVertices` containing e:
/// the clique-colors determiner extracted from a minimal Ramsey graph.
GadgetSpec determinerFromMinimal(const Graph& g, const std::vector<int>& cliqueVertices, Edge e,
                                 const TargetTuple& targets);

/// K_h with one distinguished edge f and a clique-colors determiner copy on
/// every other edge; a cycle-colors determiner with signal f.
GadgetSpec buildCycleDeterminer(const GadgetSpec& cliqueDeterminer, int h);

/// Attaches a determiner copy to every edge of the sender skeleton S
/// (signal edges e, f), yielding a set-sender for the composed tuple.
GadgetSpec buildSetSender(const Graph& s, Edge e, Edge f, const GadgetSpec& determiner, bool negative,
                          std::uint32_t colorSet, bool oracleSkeleton);

/// Sufficient structural safety for cycle targets: girth >= l and (for
/// senders) signal-edge distance >= l+1. Missing girth/distance (forests,
/// separated components) counts as infinite.
bool checkStructuralSafety(const GadgetSpec& spec, int cycleLen);

struct SafetyCounterexample {
  Graph unionGraph;
  EdgeColoring unionColoring;
  std::vector<Edge> probeEdges;  // edges contributed by the probe
};

struct SafetyProbeResult {
  bool pass = true;
  std::optional<SafetyCounterexample> counterexample;
  std::uint64_t probesTried = 0;
};

/// Adversarial safety probe: every graph F on <= maxProbeVertices vertices
/// meeting the gadget only in signal vertices, every free coloring of F
/// agreeing with `base` on shared edges; passes iff the union stays free.
SafetyProbeResult boundedSafetyProbe(const GadgetSpec& spec, const EdgeColoring& base, int maxProbeVertices,
                                     std::uint64_t workBudget = 50'000'000);

/// First graph from the stream that verifies fully for the requested role;
/// nullopt when the stream is exhausted. Budget truncation inside a
/// verification throws BudgetExceededError.
std::optional<GadgetSpec> searchGadget(GadgetRole role, std::uint32_t colorSet, const TargetTuple& targets,
                                       int vertexBudget, const std::function<std::optional<Graph>()>& stream,
                                       const SearchOptions& opts = {});

}  // namespace ramsey
