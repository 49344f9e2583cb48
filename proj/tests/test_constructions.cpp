#include "doctest.h"
#include "ramsey/constructions.hpp"
#include "ramsey/errors.hpp"

using namespace ramsey;

namespace {

GadgetSpec redOracle(TargetTuple t) { return oracleDeterminer(colorSetMask({1}), std::move(t)); }
GadgetSpec blueOracle(TargetTuple t) { return oracleDeterminer(colorSetMask({2}), std::move(t)); }

TargetTuple cyclePair(int k, int l) {
  TargetTuple t;
  t.targets = {Target::cycle(k), Target::cycle(l)};
  return t;
}

}  // namespace

TEST_CASE("tree-clique host shape") {
  HostGraph h32 = buildTreeCliqueHost(3, 2);
  CHECK(h32.graph.vertexCount() == 5);  // 3 + 2*(2-1)
  CHECK(h32.apexDegree() == 2);         // t-1

  HostGraph h33 = buildTreeCliqueHost(3, 3);
  CHECK(h33.graph.vertexCount() == 9);  // 3 + 2*(4-1)
  CHECK(h33.apexDegree() == 2);

  HostGraph h43 = buildTreeCliqueHost(4, 3);
  CHECK(h43.apexDegree() == 3);

  // Determinism: identical parameters, identical labeled graphs.
  CHECK(buildTreeCliqueHost(3, 3).graph == buildTreeCliqueHost(3, 3).graph);
}

TEST_CASE("tree-clique host dichotomy at (t-1)(l-1) <= 4") {
  for (auto [t, l] : {std::pair{3, 2}, std::pair{3, 3}}) {
    HostGraph host = buildTreeCliqueHost(t, l);
    DichotomyReport report = checkSkeletonDichotomy(host);
    CHECK(report.holds);
    CHECK(isFreeColoring(host.graph.withoutEdgesAt(host.apex), host.targets, *report.apexless.coloring));
  }
}

TEST_CASE("cycle-cycle host (4,5)") {
  TargetTuple t = cyclePair(4, 5);
  HostGraph host = buildCycleCycleHost(4, 5, redOracle(t), blueOracle(t));
  CHECK(host.graph.vertexCount() == 13);  // 3 + 3*1 + 3*2 + 1
  CHECK(host.apexDegree() == 3);
  // Forced skeleton: 6 red short-path edges, 9 blue long-path edges.
  int red = 0, blue = 0;
  for (const auto& [e, c] : host.forced.assign) (c == 1 ? red : blue)++;
  CHECK(red == 6);
  CHECK(blue == 9);

  DichotomyReport report = checkSkeletonDichotomy(host);
  CHECK(report.host.arrows);
  CHECK(report.apexless.found());
  CHECK(report.holds);

  CHECK_THROWS_AS(buildCycleCycleHost(5, 5, redOracle(cyclePair(5, 5)), blueOracle(cyclePair(5, 5))),
                  PreconditionError);
}

TEST_CASE("cycle-cycle host with real determiner copies: vertex arithmetic") {
  TargetTuple t = cyclePair(4, 5);
  GadgetSpec mock;  // a non-oracle 4-vertex stand-in
  mock.graph = pathGraph(4);
  mock.signals = {Edge{1, 2}};
  mock.colorSet = colorSetMask({1});
  mock.role = GadgetRole::Determiner;
  mock.targets = t;
  GadgetSpec mockBlue = mock;
  mockBlue.colorSet = colorSetMask({2});
  HostGraph host = buildCycleCycleHost(4, 5, mock, mockBlue);
  CHECK(host.graph.vertexCount() == 13 + 15 * (4 - 2));  // one copy per skeleton path edge
  CHECK(host.forced.assign.empty());
}

TEST_CASE("clique-cycle host (3,4)") {
  TargetTuple t;
  t.targets = {Target::clique(3), Target::cycle(4)};
  HostGraph host = buildCliqueCycleHost(3, 4, redOracle(t), blueOracle(t));
  // Core C_4 plus one internal vertex per part path plus apex.
  CHECK(host.graph.vertexCount() == 7);
  CHECK(host.apexDegree() == 4);  // 2(t-1)

  DichotomyReport report = checkSkeletonDichotomy(host);
  CHECK(report.host.arrows);
  CHECK(report.apexless.found());
  CHECK(report.holds);

  // The apexless free coloring realizes the intended pattern: red core,
  // blue paths.
  const EdgeColoring& free = *report.apexless.coloring;
  CHECK(isFreeColoring(host.graph.withoutEdgesAt(host.apex), host.targets, free));
  for (const auto& [e, c] : host.forced.assign) CHECK(free.colorOf(e) == c);
}

TEST_CASE("packing host at the (1,1,t=3,l=4) witness") {
  PackingResult pr = computeP(1, 1, 2, 6);
  REQUIRE(pr.outcome == PackingResult::Outcome::Found);
  REQUIRE(pr.certificate->value == 4);
  const ColorPattern& pattern = pr.certificate->witness;

  HostGraph host = buildPackingHost(pattern, 3, 4);
  CHECK(host.graph.vertexCount() == 4 + 6 * 1 + 1);  // base + C(4,2) midpoints + apex
  CHECK(host.apexDegree() == 4);                     // n = P_{1,1}(2)

  DichotomyReport report = checkSkeletonDichotomy(host);
  CHECK(report.host.arrows);
  CHECK(report.apexless.found());
  CHECK(report.holds);

  // q1 = 0 degenerates to pattern plus apex.
  PackingResult flat = computeP(0, 2, 2, 6);
  REQUIRE(flat.outcome == PackingResult::Outcome::Found);
  HostGraph small = buildPackingHost(flat.certificate->witness, 3, 4);
  CHECK(small.graph.vertexCount() == flat.certificate->witness.n + 1);

  // Invalid patterns are rejected.
  ColorPattern bad;
  bad.n = 3;
  bad.q1 = 0;
  bad.graphs = {emptyGraph(3)};
  CHECK_THROWS_AS(buildPackingHost(bad, 3, 4), PreconditionError);
}

TEST_CASE("packing host, real-gadget mode structure") {
  PackingResult pr = computeP(1, 1, 2, 6);
  const ColorPattern& pattern = pr.certificate->witness;
  TargetTuple t = cyclesAndCliques(1, 1, 4, 3);

  GadgetLibrary lib;
  lib.cycleDeterminer = oracleDeterminer(colorSetMask({1}), t);
  lib.cliqueDeterminer = oracleDeterminer(colorSetMask({2}), t);
  HostGraph host = buildPackingHost(pattern, 3, 4, lib);
  // Oracle library members collapse to the same forced skeleton.
  HostGraph oracle = buildPackingHost(pattern, 3, 4);
  CHECK(host.graph == oracle.graph);
  CHECK(host.forced.assign == oracle.forced.assign);

  // Real 4-vertex determiner mocks add one copy per decorated edge.
  GadgetSpec mockCycle;
  mockCycle.graph = pathGraph(4);
  mockCycle.signals = {Edge{1, 2}};
  mockCycle.colorSet = colorSetMask({1});
  mockCycle.role = GadgetRole::Determiner;
  mockCycle.targets = t;
  GadgetSpec mockClique = mockCycle;
  mockClique.colorSet = colorSetMask({2});
  GadgetLibrary real;
  real.cycleDeterminer = mockCycle;
  real.cliqueDeterminer = mockClique;
  HostGraph big = buildPackingHost(pattern, 3, 4, real);
  int decorated = 6 * 2 + pattern.graphs[0].edgeCount();  // path edges + pattern edges
  CHECK(big.graph.vertexCount() == oracle.graph.vertexCount() + decorated * (4 - 2));
}
