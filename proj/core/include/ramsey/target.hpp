#pragma once

#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// One forbidden monochromatic pattern: a clique K_t, a cycle C_l, or an
/// explicit tree (verified connected and acyclic).
class Target {
 public:
  enum class Kind { Clique, Cycle, Tree };

  static Target clique(int t);
  static Target cycle(int length);
  static Target tree(Graph explicitTree);

  Kind kind() const { return kind_; }
  /// Vertex count of the pattern (t for cliques, l for cycles/trees).
  int order() const;
  /// Edge count of the pattern.
  int size() const;
  const Graph& treeGraph() const { return tree_; }

  std::string toString() const;
  bool operator==(const Target& other) const;

 private:
  Kind kind_ = Kind::Clique;
  int param_ = 2;
  Graph tree_;
};

/// Ordered tuple (H_1,...,H_q); color i (1-based) must avoid H_i.
struct TargetTuple {
  std::vector<Target> targets;

  int colorCount() const { return static_cast<int>(targets.size()); }
  const Target& target(int color) const { return targets.at(color - 1); }

  /// 1-based colors whose target is a cycle / a clique.
  std::vector<int> cycleColors() const;
  std::vector<int> cliqueColors() const;

  std::string toString() const;
  bool operator==(const TargetTuple& other) const = default;
};

/// The tuple of q1 copies of C_l followed by q2 copies of K_t.
TargetTuple cyclesAndCliques(int q1, int q2, int cycleLen, int cliqueSize);

/// Parses target specs like "K3,K3", "C4x2,K3", "T:<graph6>".
/// Throws std::invalid_argument on malformed input.
TargetTuple parseTargetSpec(const std::string& spec);

}  // namespace ramsey
