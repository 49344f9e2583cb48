#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/subgraph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

/// Total q-coloring of a host graph's edges; colors are 1-based, edges are
/// listed in canonical order.
struct EdgeColoring {
  std::vector<Edge> edges;
  std::vector<int> colors;  // parallel to edges

  int colorOf(Edge e) const;
  std::optional<int> tryColorOf(Edge e) const;
  /// Subgraph carried by one color class.
  Graph colorClass(int color, int vertexCount) const;
};

/// Partial assignment edge -> color in [q].
struct PartialColoring {
  std::map<Edge, int> assign;

  bool contains(Edge e) const { return assign.count(e) != 0; }
  void set(Edge e, int color) { assign[e] = color; }
};

/// Per-edge color-set restrictions plus pairwise rules between two edges.
/// Masks use bit c for color c (1-based); mask 0 means unconstrained.
struct PairRule {
  Edge a, b;
  /// allowedSecond[c] = mask of colors permitted on b when a has color c.
  std::vector<std::uint32_t> allowedSecond;
};

struct ColoringConstraints {
  std::map<Edge, std::uint32_t> allowed;
  std::vector<PairRule> pairs;

  bool emptyConstraints() const { return allowed.empty() && pairs.empty(); }
  void forceColor(Edge e, int color);
  void restrict(Edge e, std::uint32_t mask);
  /// Adds a rule that e and f take distinct (negative) or equal (positive)
  /// colors within the set given by mask.
  void addSenderRule(Edge e, Edge f, std::uint32_t mask, bool negative, int q);

  static ColoringConstraints fromPartial(const PartialColoring& forced);
  PartialColoring forcedPart() const;  // the singleton-mask edges
};

std::uint32_t colorSetMask(const std::vector<int>& colors);
std::vector<int> maskColors(std::uint32_t mask);

/// A target copy sitting inside one color class.
struct MonochromeViolation {
  int color = 0;
  TargetWitness witness;
};

/// Independent freeness re-check: builds each color class and runs the
/// subgraph detectors from graph-core (a different code path than the
/// incremental checks inside the search engine).
std::optional<MonochromeViolation> findMonochromeTarget(const Graph& g, const TargetTuple& targets,
                                                        const EdgeColoring& coloring);
bool isFreeColoring(const Graph& g, const TargetTuple& targets, const EdgeColoring& coloring);

/// Same check on a partial assignment (only assigned edges enter classes).
std::optional<MonochromeViolation> findMonochromeTarget(const Graph& g, const TargetTuple& targets,
                                                        const PartialColoring& partial);

/// True when `coloring` extends `forced` exactly and respects `constraints`.
bool agreesWith(const EdgeColoring& coloring, const PartialColoring& forced);
bool satisfiesConstraints(const EdgeColoring& coloring, const ColoringConstraints& constraints);

}  // namespace ramsey
