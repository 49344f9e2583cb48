#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

/// h-uniform hypergraph on [n]; edges are sorted h-sets without duplicates,
/// kept in lexicographic order.
struct HyperGraph {
  int n = 0;
  int h = 0;
  std::vector<std::vector<int>> edges;

  int edgeCount() const { return static_cast<int>(edges.size()); }
};

struct GammaParams {
  int n = 0;
  int cycleLen = 4;  // l
  int t = 3;
  int q1 = 1;
  int q2 = 1;
  int h = 0;  // r_{q2}(K_t); derived by deriveUniformity or caller-supplied
  double A = 1.0;
  std::uint64_t seed = 0;

  /// p_h = A * n^{-(h-1) + 1/(l-1)}.
  double edgeProbability() const;
};

/// h = r_{q2}(K_t) from the arrowing engine when desk-computable (the
/// search is capped at `cap` vertices); throws BudgetExceededError past it.
int deriveUniformity(int q2, int t, int cap = 6);

/// Binomial sample: every h-subset of [n] enumerated directly and kept with
/// probability p_h; bit-reproducible for a given seed (mt19937_64).
/// Throws PreconditionError when p_h > 1 or the parameters are malformed.
HyperGraph sampleHypergraph(const GammaParams& params);

/// A Berge cycle e_1,v_1,...,e_s,v_s (distinct edges, distinct vertices).
struct BergeCycle {
  std::vector<int> edgeIds;
  std::vector<int> linkVertices;

  int length() const { return static_cast<int>(edgeIds.size()); }
};

/// All Berge cycles of length < maxLen, one representative per
/// rotation/reflection class (anchored at the least edge id).
std::vector<BergeCycle> findShortBergeCycles(const HyperGraph& hg, int maxLen);

/// Removes the lexicographically least hyperedge of each discovered short
/// cycle, rescanning until none remain; the result is re-verified clean.
HyperGraph removeShortCycles(const HyperGraph& hg, int cycleLen, int* removedEdges = nullptr);

/// The 2-shadow with a clique on every hyperedge (two vertices adjacent iff
/// they share a hyperedge). The hyperedge list itself is the
/// hyperedge-to-clique map used by the classifiers below.
Graph blowUp(const HyperGraph& hg);

struct CopyClassification {
  std::uint64_t hyperedgeCopies = 0;
  std::vector<std::vector<int>> nonHyperedgeCopies;  // vertex sets
};

/// Classifies every copy of the target (a clique K_s, s <= h, or a cycle
/// C_s, s < l) in the blow-up as hyperedge or non-hyperedge.
CopyClassification classifyCopies(const Graph& blowup, const HyperGraph& hg, const Target& target);

/// True iff the subgraph holds exactly one edge inside each hyperedge clique.
bool checkTransversal(const Graph& sub, const HyperGraph& hg);

/// True iff every edge of the subgraph lies in a hyperedge whose whole
/// clique is present in the subgraph.
bool structureCheck(const Graph& sub, const HyperGraph& hg);

/// Enumeration helpers (one callback per copy, canonical representatives).
void forEachClique(const Graph& g, int s, const std::function<void(const std::vector<int>&)>& fn);
void forEachCycle(const Graph& g, int s, const std::function<void(const std::vector<int>&)>& fn);

}  // namespace ramsey
