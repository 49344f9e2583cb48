#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Edge-disjoint graphs G_{q1+1},...,G_{q1+q2} on vertex set [n]; the
/// clique-color patterns of the packing parameter. q1 counts the cycle
/// colors, which carry no graphs.
struct ColorPattern {
  int n = 0;
  int q1 = 0;
  std::vector<Graph> graphs;

  int q2() const { return static_cast<int>(graphs.size()); }
  int q() const { return q1 + q2(); }
};

/// Total vertex coloring [n] -> [q], 1-based colors.
struct VertexColoring {
  std::vector<int> colors;
};

struct PatternCheck {
  bool valid = false;
  std::optional<VertexColoring> counterexample;  // a lambda defeating (P2)
  std::string reason;
};

/// (P1): every pattern graph is K_{t+1}-free. (P2): every vertex coloring
/// repeats a cycle-color or puts a K_t of some clique-color graph inside
/// that color class. Lambda enumeration prunes to colorings whose cycle
/// classes all have size <= 1 (the only candidates for violating (P2)).
/// Throws PreconditionError on edge-disjointness violations.
PatternCheck verifyPattern(const ColorPattern& pattern, int t);

struct PackingAttestation {
  std::vector<std::uint64_t> nodesPerOrder;  // search nodes per tried n
  bool exhaustive = true;
};

struct PackingCertificate {
  int value = 0;
  ColorPattern witness;
  PackingAttestation attestation;
};

struct PackingResult {
  enum class Outcome { Found, NoneWithinCap, BudgetExceeded };
  Outcome outcome = Outcome::NoneWithinCap;
  std::optional<PackingCertificate> certificate;
  PackingAttestation attestation;  // populated also when nothing was found
};

/// Smallest n <= nMax carrying a valid pattern, with the canonically first
/// witness. Patterns are enumerated as a single edge-labeled structure
/// (each edge in at most one graph) with isomorph rejection; q2 = 0 is the
/// pigeonhole closed form q1 + 1.
PackingResult computeP(int q1, int q2, int t, int nMax, std::uint64_t nodeBudget = 50'000'000);

/// Keeps the first q - q1 graphs of a valid (0,q) pattern, turning the rest
/// into cycle colors; re-verified before returning (a failure would
/// contradict the monotonicity statement and throws LemmaContradictionError).
ColorPattern dropToSubpattern(const ColorPattern& pattern, int q1, int t);

/// True iff every ceil(n/q)-subset of [n] contains a K_t inside every
/// pattern graph (exhaustive subset enumeration; a verifier for externally
/// supplied patterns).
bool verifySubsetCliqueProperty(const ColorPattern& pattern, int t, int q);

}  // namespace ramsey
