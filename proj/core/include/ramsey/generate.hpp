#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "ramsey/graph.hpp"

namespace ramsey {

/// Minimal relabeling of an integer-valued cell matrix: returns the
/// lexicographically least sequence of cell values val(p(u), p(v)) over all
/// vertex permutations p, cells ordered column-major ((0,1),(0,2),(1,2),...).
/// Branch-and-bound over partial placements; intended for n <= 8.
std::vector<int> canonicalCellSequence(int n, const std::function<int(int, int)>& val);

/// Upper-triangle bit code of a graph in canonical cell order (n <= 11).
std::uint64_t codeOf(const Graph& g);
Graph fromCode(int n, std::uint64_t code);

/// Code of the canonical relabeling; equal codes <=> isomorphic graphs.
std::uint64_t canonicalCode(const Graph& g);

/// All unlabeled graphs on n vertices (canonical representatives, sorted by
/// code), generated by vertex augmentation with isomorph rejection.
std::vector<Graph> nonIsomorphicGraphs(int n);

/// All unlabeled graphs on 1..n vertices, smaller orders first.
std::vector<Graph> nonIsomorphicGraphsUpTo(int n);

}  // namespace ramsey
