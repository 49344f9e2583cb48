#pragma once

#include <optional>
#include <string>

#include "ramsey/arrowing.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/gadgets.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/packing.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

/// An upper-bound host: the graph, its distinguished low-degree apex, the
/// skeleton forcing (nonempty only when oracle gadgets were used), and the
/// tuple it is built for.
struct HostGraph {
  Graph graph;
  int apex = -1;
  PartialColoring forced;
  TargetTuple targets;
  std::string provenance;

  int apexDegree() const { return graph.degree(apex); }
};

/// K_t at the apex with a fresh K_{(t-1)(l-1)} identified into every other
/// clique vertex; the tree side of the tuple defaults to the path on
/// `treeOrder` vertices (any explicit tree of that order may be substituted
/// into `targets` before verification).
HostGraph buildTreeCliqueHost(int t, int treeOrder);

/// Three branch vertices joined by internally disjoint paths of lengths
/// k-2 (red-determined) and l-2 (blue-determined), plus an apex of degree 3.
HostGraph buildCycleCycleHost(int k, int l, const GadgetSpec& redDet, const GadgetSpec& blueDet);

/// Complete (t-1)-partite 2,...,2 core (red-determined) with an (l-2)-path
/// per part (blue-determined) and an apex adjacent to the whole core.
HostGraph buildCliqueCycleHost(int t, int l, const GadgetSpec& redDet, const GadgetSpec& blueDet);

/// Real-gadget inputs for the packing host; absent members fall back per
/// the palette sizes (determiners for singleton palettes, senders else).
struct GadgetLibrary {
  std::optional<GadgetSpec> cycleDeterminer;
  std::optional<GadgetSpec> cliqueDeterminer;
  std::optional<GadgetSpec> cyclePositiveSender;
  std::optional<GadgetSpec> cycleNegativeSender;
  std::optional<GadgetSpec> cliquePositiveSender;
  std::optional<GadgetSpec> cliqueNegativeSender;
};

/// The packing-equivalence host over a valid pattern for parameter t-1:
/// pattern edges in their clique colors, an (l-2)-path per cycle color and
/// vertex pair, and an apex adjacent to the whole base. Oracle mode forces
/// the skeleton colors directly.
HostGraph buildPackingHost(const ColorPattern& pattern, int t, int l);
HostGraph buildPackingHost(const ColorPattern& pattern, int t, int l, const GadgetLibrary& lib);

struct DichotomyReport {
  ArrowReport host;        // must arrow under the skeleton forcing
  SearchResult apexless;   // must admit a free coloring
  bool holds = false;
};

/// The executable core of each upper-bound argument: the host arrows while
/// the apex-deleted host does not.
DichotomyReport checkSkeletonDichotomy(const HostGraph& host, const SearchOptions& opts = {});

}  // namespace ramsey
