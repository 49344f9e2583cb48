#pragma once

#include <optional>
#include <vector>

#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

/// Witness for a target copy: the vertex set for cliques and cycles, the
/// embedded edge set for trees.
struct TargetWitness {
  std::vector<int> vertices;
  std::vector<Edge> edges;
};

/// Existence-only checks (fast paths used by verification loops).
bool hasClique(const Graph& g, int t);
bool hasCycle(const Graph& g, int length);
bool hasTree(const Graph& g, const Graph& tree);
bool hasTarget(const Graph& g, const Target& target);

/// Not-necessarily-induced subgraph test returning the canonically least
/// witness: the lexicographically least vertex set for cliques and cycles,
/// the least embedding (in vertex-mapping order) for trees.
std::optional<TargetWitness> containsTarget(const Graph& g, const Target& target);

/// All (t)-cliques of g as sorted vertex sets, in lexicographic order.
std::vector<std::vector<int>> allCliques(const Graph& g, int t);

/// A vertex contained in every K_{t-1} of g. Preconditions: v(g) < 2(t-1),
/// g contains K_{t-1}, g is K_t-free; violations throw PreconditionError.
/// Under valid preconditions a common vertex always exists; if none is
/// found, LemmaContradictionError is thrown. Ties resolve to the least
/// vertex index.
int commonCliqueVertex(const Graph& g, int t);

}  // namespace ramsey
