#include "ramsey/coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace ramsey {

int EdgeColoring::colorOf(Edge e) const {
  auto c = tryColorOf(e);
  if (!c) throw std::out_of_range("coloring: edge not present");
  return *c;
}

std::optional<int> EdgeColoring::tryColorOf(Edge e) const {
  auto it = std::lower_bound(edges.begin(), edges.end(), e);
  if (it == edges.end() || !(*it == e)) return std::nullopt;
  return colors[static_cast<std::size_t>(it - edges.begin())];
}

Graph EdgeColoring::colorClass(int color, int vertexCount) const {
  Graph g(vertexCount);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (colors[i] == color) g.addEdge(edges[i].u, edges[i].v);
  return g;
}

void ColoringConstraints::forceColor(Edge e, int color) {
  restrict(e, std::uint32_t{1} << color);
}

void ColoringConstraints::restrict(Edge e, std::uint32_t mask) {
  auto it = allowed.find(e);
  if (it == allowed.end())
    allowed[e] = mask;
  else
    it->second &= mask;
}

void ColoringConstraints::addSenderRule(Edge e, Edge f, std::uint32_t mask, bool negative, int q) {
  PairRule rule;
  rule.a = e;
  rule.b = f;
  rule.allowedSecond.assign(static_cast<std::size_t>(q) + 1, 0);
  for (int c1 = 1; c1 <= q; ++c1) {
    if (!(mask & (std::uint32_t{1} << c1))) continue;
    for (int c2 = 1; c2 <= q; ++c2) {
      if (!(mask & (std::uint32_t{1} << c2))) continue;
      if (negative ? (c1 != c2) : (c1 == c2)) rule.allowedSecond[c1] |= std::uint32_t{1} << c2;
    }
  }
  restrict(e, mask);
  restrict(f, mask);
  pairs.push_back(std::move(rule));
}

ColoringConstraints ColoringConstraints::fromPartial(const PartialColoring& forced) {
  ColoringConstraints c;
  for (const auto& [e, color] : forced.assign) c.forceColor(e, color);
  return c;
}

PartialColoring ColoringConstraints::forcedPart() const {
  PartialColoring p;
  for (const auto& [e, mask] : allowed)
    if (__builtin_popcount(mask) == 1) p.set(e, __builtin_ctz(mask));
  return p;
}

std::uint32_t colorSetMask(const std::vector<int>& colors) {
  std::uint32_t m = 0;
  for (int c : colors) m |= std::uint32_t{1} << c;
  return m;
}

std::vector<int> maskColors(std::uint32_t mask) {
  std::vector<int> out;
  for (int c = 0; c < 32; ++c)
    if (mask & (std::uint32_t{1} << c)) out.push_back(c);
  return out;
}

namespace {

std::optional<MonochromeViolation> scanClasses(const Graph& g, const TargetTuple& targets,
                                               const std::vector<Edge>& edges, const std::vector<int>& colors) {
  for (int c = 1; c <= targets.colorCount(); ++c) {
    Graph cls(g.vertexCount());
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (colors[i] == c) cls.addEdge(edges[i].u, edges[i].v);
    if (auto w = containsTarget(cls, targets.target(c))) return MonochromeViolation{c, *w};
  }
  return std::nullopt;
}

}  // namespace

std::optional<MonochromeViolation> findMonochromeTarget(const Graph& g, const TargetTuple& targets,
                                                        const EdgeColoring& coloring) {
  return scanClasses(g, targets, coloring.edges, coloring.colors);
}

bool isFreeColoring(const Graph& g, const TargetTuple& targets, const EdgeColoring& coloring) {
  return !findMonochromeTarget(g, targets, coloring).has_value();
}

std::optional<MonochromeViolation> findMonochromeTarget(const Graph& g, const TargetTuple& targets,
                                                        const PartialColoring& partial) {
  std::vector<Edge> edges;
  std::vector<int> colors;
  for (const auto& [e, c] : partial.assign) {
    edges.push_back(e);
    colors.push_back(c);
  }
  return scanClasses(g, targets, edges, colors);
}

bool agreesWith(const EdgeColoring& coloring, const PartialColoring& forced) {
  for (const auto& [e, c] : forced.assign) {
    auto got = coloring.tryColorOf(e);
    if (!got || *got != c) return false;
  }
  return true;
}

bool satisfiesConstraints(const EdgeColoring& coloring, const ColoringConstraints& constraints) {
  for (const auto& [e, mask] : constraints.allowed) {
    auto got = coloring.tryColorOf(e);
    if (!got || !(mask & (std::uint32_t{1} << *got))) return false;
  }
  for (const PairRule& rule : constraints.pairs) {
    auto ca = coloring.tryColorOf(rule.a);
    auto cb = coloring.tryColorOf(rule.b);
    if (!ca || !cb) return false;
    if (!(rule.allowedSecond[static_cast<std::size_t>(*ca)] & (std::uint32_t{1} << *cb))) return false;
  }
  return true;
}

}  // namespace ramsey
