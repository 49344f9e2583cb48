#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "ramsey/coloring.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

enum class SearchStatus { Found, Exhausted, BudgetExceeded };

struct SearchStats {
  std::uint64_t nodes = 0;
  int branches = 0;
  bool witnessCanonical = true;  // false only if an earlier branch was budget-truncated
  double seconds = 0.0;
  std::string note;
};

struct SearchOptions {
  std::uint64_t nodeBudget = 100'000'000;
  int threads = 1;
  enum class Symmetry { Auto, Off, On } symmetry = Symmetry::Auto;
};

/// Outcome of a free-coloring search. `coloring` is set iff status == Found
/// and is then the lexicographically least free coloring in canonical edge
/// order (under the vertex-star symmetry reduction when that is active).
struct SearchResult {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<EdgeColoring> coloring;
  SearchStats stats;

  bool found() const { return status == SearchStatus::Found; }
  bool exhausted() const { return status == SearchStatus::Exhausted; }
};

/// Finds a total coloring extending the constraints in which color class i
/// is H_i-free for every i, or proves none exists. Colors are assigned to
/// edges in canonical order, colors ascending, so the first solution is the
/// lexicographically least. Requires v(g) <= 64 (the search substrate cap).
SearchResult findFreeColoring(const Graph& g, const TargetTuple& targets,
                              const ColoringConstraints& constraints = {},
                              const SearchOptions& opts = {});

struct ArrowReport {
  SearchStatus status = SearchStatus::Exhausted;
  bool arrows = false;  // meaningful iff status != BudgetExceeded
  std::optional<EdgeColoring> witness;
  SearchStats stats;

  bool decided() const { return status != SearchStatus::BudgetExceeded; }
};

/// Does every coloring respecting `constraints` contain a monochromatic
/// target? (With empty constraints: the plain arrowing relation.)
ArrowReport arrows(const Graph& g, const TargetTuple& targets, const ColoringConstraints& constraints = {},
                   const SearchOptions& opts = {});

struct MinimalReport {
  enum class Status { Minimal, NotRamsey, RemovableEdge, BudgetExceeded };
  Status status = Status::NotRamsey;
  bool minimal = false;
  std::optional<Edge> failingEdge;
  std::vector<int> strippedVertices;  // isolated vertices removed before judging
  /// Free coloring of g - e for every edge e (the minimality evidence).
  std::map<Edge, EdgeColoring> edgeWitnesses;
  SearchStats stats;
};

/// Ramsey-minimality: g arrows the tuple, no edge-deleted subgraph does.
/// Isolated vertices are stripped before judging and reported.
MinimalReport isRamseyMinimal(const Graph& g, const TargetTuple& targets, const SearchOptions& opts = {});

/// Replays the degree-2(t-1) extension argument: given a (K_t,C_l)-free
/// coloring of g - v and deg(v) <= 2(t-1)-1, extends it to all of g.
/// Color 1 is the clique color (red), color 2 the cycle color (blue).
/// Throws PreconditionError on contract violations and
/// LemmaContradictionError if the guaranteed extension fails verification.
EdgeColoring extendLowDegreeColoring(const Graph& g, int v, const EdgeColoring& base, int t, int cycleLen);

struct PaletteSplitResult {
  enum class Outcome { Produced, BaseRamsey, CliquePartRamsey, CyclePartRamsey, BudgetExceeded };
  Outcome outcome = Outcome::Produced;
  std::optional<EdgeColoring> coloring;
  std::string note;
};

/// Replays the palette-splitting lower-bound argument: splits g at vertex v
/// into a clique-colored part (including min{degreeBudget-1, deg(v)} edges
/// at v) and the rest, recolors both halves independently, and combines.
PaletteSplitResult paletteSplitRecolor(const Graph& g, int v, int q1, int q2, int t, int cycleLen,
                                       int degreeBudget, const SearchOptions& opts = {});

/// Smallest n <= cap with K_n arrowing the q-tuple (K_t,...,K_t).
/// Returns nullopt when no such n <= cap; throws on budget exhaustion.
std::optional<int> ramseyNumberClique(int q, int t, int cap, const SearchOptions& opts = {});

}  // namespace ramsey
