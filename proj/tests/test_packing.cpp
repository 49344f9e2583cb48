#include <random>

#include "doctest.h"
#include "ramsey/errors.hpp"
#include "ramsey/packing.hpp"
#include "ramsey/subgraph.hpp"

using namespace ramsey;

namespace {

ColorPattern c4Pattern() {
  // q1 = 1, one clique-color graph: the 4-cycle on [4].
  ColorPattern p;
  p.n = 4;
  p.q1 = 1;
  p.graphs = {cycleGraph(4)};
  return p;
}

// Independent lambda re-check, straight from the definition.
bool oracleLambdaViolates(const ColorPattern& p, int t, const VertexColoring& lambda) {
  // (a): two distinct vertices share a cycle color.
  for (int u = 0; u < p.n; ++u)
    for (int v = u + 1; v < p.n; ++v)
      if (lambda.colors[u] == lambda.colors[v] && lambda.colors[u] <= p.q1) return false;
  // (b): some clique class contains a K_t of its graph.
  for (int j = 0; j < p.q2(); ++j) {
    std::vector<int> cls;
    for (int v = 0; v < p.n; ++v)
      if (lambda.colors[v] == p.q1 + j + 1) cls.push_back(v);
    if (hasClique(p.graphs[j].inducedSubgraph(cls), t)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("verifyPattern: the 4-cycle pattern for (1,1,t=2)") {
  PatternCheck check = verifyPattern(c4Pattern(), 2);
  CHECK(check.valid);

  // Exhaustive oracle over all 2^4 clique/cycle splits plus cycle budgets:
  // no lambda with distinct cycle colors defeats it.
  ColorPattern p = c4Pattern();
  for (int mask = 0; mask < 16; ++mask) {
    VertexColoring lambda;
    int used = 0;
    lambda.colors.assign(4, 0);
    bool ok = true;
    for (int v = 0; v < 4; ++v) {
      if (mask & (1 << v)) {
        if (++used > p.q1) ok = false;  // only q1 distinct cycle colors exist
        lambda.colors[v] = used;
      } else {
        lambda.colors[v] = 2;  // the single clique color
      }
    }
    if (!ok) continue;
    CHECK(!oracleLambdaViolates(p, 2, lambda));
  }
}

TEST_CASE("verifyPattern: (P1) violations") {
  ColorPattern p;
  p.n = 4;
  p.q1 = 0;
  p.graphs = {completeGraph(4)};  // contains K_3 = K_{t+1} for t = 2
  PatternCheck check = verifyPattern(p, 2);
  CHECK(!check.valid);
  CHECK(!check.counterexample.has_value());
  CHECK(check.reason.find("K_3") != std::string::npos);
}

TEST_CASE("verifyPattern: (P2) counterexample with independent re-check") {
  // q1 = 2, q2 = 0, n = 2: distinct cycle colors defeat the empty pattern.
  ColorPattern p;
  p.n = 2;
  p.q1 = 2;
  PatternCheck check = verifyPattern(p, 2);
  CHECK(!check.valid);
  REQUIRE(check.counterexample.has_value());
  CHECK(oracleLambdaViolates(p, 2, *check.counterexample));
}

TEST_CASE("verifyPattern: edge-disjointness enforced") {
  ColorPattern p;
  p.n = 3;
  p.q1 = 0;
  p.graphs = {pathGraph(3), pathGraph(3)};
  CHECK_THROWS_AS(verifyPattern(p, 2), PreconditionError);
}

TEST_CASE("computeP pigeonhole closed form") {
  for (int q1 = 1; q1 <= 3; ++q1) {
    PackingResult r = computeP(q1, 0, 2, 6);
    REQUIRE(r.outcome == PackingResult::Outcome::Found);
    CHECK(r.certificate->value == q1 + 1);
    CHECK(verifyPattern(r.certificate->witness, 2).valid);
  }
  CHECK(computeP(3, 0, 2, 3).outcome == PackingResult::Outcome::NoneWithinCap);
}

TEST_CASE("computeP(0,2,2,6) = 4") {
  PackingResult r = computeP(0, 2, 2, 6);
  REQUIRE(r.outcome == PackingResult::Outcome::Found);
  CHECK(r.certificate->value == 4);
  CHECK(verifyPattern(r.certificate->witness, 2).valid);
  CHECK(r.certificate->attestation.nodesPerOrder.size() == 4);  // n = 1..4 tried

  // n = 3 exhaustively impossible.
  CHECK(computeP(0, 2, 2, 3).outcome == PackingResult::Outcome::NoneWithinCap);
}

TEST_CASE("computeP(1,1,2,6) = 4") {
  PackingResult r = computeP(1, 1, 2, 6);
  REQUIRE(r.outcome == PackingResult::Outcome::Found);
  CHECK(r.certificate->value == 4);
  CHECK(verifyPattern(r.certificate->witness, 2).valid);
}

TEST_CASE("computeP budget truncation is a distinct outcome") {
  PackingResult r = computeP(0, 2, 2, 6, 10);
  CHECK(r.outcome == PackingResult::Outcome::BudgetExceeded);
  CHECK(!r.attestation.exhaustive);
}

TEST_CASE("isolated-vertex extension keeps witnesses valid") {
  for (auto [q1, q2] : {std::pair{0, 2}, std::pair{1, 1}}) {
    PackingResult r = computeP(q1, q2, 2, 6);
    REQUIRE(r.outcome == PackingResult::Outcome::Found);
    ColorPattern extended = r.certificate->witness;
    extended.n += 1;
    for (Graph& g : extended.graphs) g.addVertices(1);
    CHECK(verifyPattern(extended, 2).valid);
  }
}

TEST_CASE("dropToSubpattern") {
  PackingResult r = computeP(0, 2, 2, 6);
  REQUIRE(r.outcome == PackingResult::Outcome::Found);
  const ColorPattern& whole = r.certificate->witness;

  // All splits q1 + q2 = 2 succeed (monotonicity replay).
  ColorPattern zero = dropToSubpattern(whole, 0, 2);
  CHECK(zero.q1 == 0);
  CHECK(zero.q2() == 2);
  ColorPattern one = dropToSubpattern(whole, 1, 2);
  CHECK(one.q1 == 1);
  CHECK(one.q2() == 1);
  CHECK(verifyPattern(one, 2).valid);
  ColorPattern two = dropToSubpattern(whole, 2, 2);
  CHECK(two.q2() == 0);
  CHECK(verifyPattern(two, 2).valid);

  // Invalid input pattern rejected up front.
  ColorPattern bad;
  bad.n = 3;
  bad.q1 = 0;
  bad.graphs = {emptyGraph(3)};
  CHECK_THROWS_AS(dropToSubpattern(bad, 1, 2), PreconditionError);
}

TEST_CASE("sandwich consistency") {
  // computeP(q1,q2,t) >= computeP(0,q2,t) + q1 on desk-scale instances.
  int p01 = computeP(0, 1, 2, 6).certificate->value;
  CHECK(p01 == 2);
  int p11 = computeP(1, 1, 2, 6).certificate->value;
  CHECK(p11 >= p01 + 1);
  int p21 = computeP(2, 1, 2, 7).certificate->value;
  CHECK(p21 == 5);
  CHECK(p21 >= p01 + 2);
  int p11again = computeP(1, 1, 2, 6).certificate->value;
  int p02 = computeP(0, 2, 2, 6).certificate->value;
  CHECK(p02 >= p11again);  // dropping a cycle color cannot raise the value
}

TEST_CASE("verifyPattern agrees with full lambda enumeration") {
  // Independent oracle: every lambda in [q]^n checked directly against the
  // two defining clauses; validity must match the pruned search.
  std::mt19937 rng(313);
  int instances = 0;
  while (instances < 150) {
    int n = 2 + static_cast<int>(rng() % 4);
    int q1 = static_cast<int>(rng() % 3);
    int q2 = 1 + static_cast<int>(rng() % 2);
    int t = 2 + static_cast<int>(rng() % 2);
    ColorPattern p;
    p.n = n;
    p.q1 = q1;
    p.graphs.assign(q2, Graph(n));
    bool clash = false;
    for (int u = 0; u < n && !clash; ++u)
      for (int v = u + 1; v < n; ++v) {
        int owner = static_cast<int>(rng() % (q2 + 2));  // often unused
        if (owner < q2) p.graphs[owner].addEdge(u, v);
      }
    PatternCheck got;
    try {
      got = verifyPattern(p, t);
    } catch (const PreconditionError&) {
      continue;  // edge-disjointness is enforced separately
    }

    // Oracle over all (q1+q2)^n vertex colorings.
    int q = q1 + q2;
    bool p1ok = true;
    for (const Graph& g : p.graphs) p1ok = p1ok && !hasClique(g, t + 1);
    bool p2ok = true;
    std::vector<int> lambda(n, 1);
    for (;;) {
      bool repeatCycle = false;
      for (int u = 0; u < n && !repeatCycle; ++u)
        for (int v = u + 1; v < n; ++v)
          if (lambda[u] == lambda[v] && lambda[u] <= q1) repeatCycle = true;
      bool cliqueHit = false;
      for (int j = 0; j < q2 && !cliqueHit; ++j) {
        std::vector<int> cls;
        for (int v = 0; v < n; ++v)
          if (lambda[v] == q1 + j + 1) cls.push_back(v);
        cliqueHit = hasClique(p.graphs[j].inducedSubgraph(cls), t);
      }
      if (!repeatCycle && !cliqueHit) {
        p2ok = false;
        break;
      }
      int i = n - 1;
      while (i >= 0 && lambda[i] == q) lambda[i--] = 1;
      if (i < 0) break;
      ++lambda[i];
    }
    CHECK(got.valid == (p1ok && p2ok));
    ++instances;
  }
}

TEST_CASE("verifySubsetCliqueProperty") {
  // The n=4 witness for (0,2,t=2) with q=2: every 2-subset would need an
  // edge in both graphs, impossible.
  PackingResult r = computeP(0, 2, 2, 6);
  REQUIRE(r.outcome == PackingResult::Outcome::Found);
  CHECK(!verifySubsetCliqueProperty(r.certificate->witness, 2, 2));

  // Single complete graph, t=3, q=n: 1-subsets cannot host cliques.
  ColorPattern p;
  p.n = 4;
  p.q1 = 0;
  p.graphs = {completeGraph(4)};
  CHECK(!verifySubsetCliqueProperty(p, 3, 4));

  // Empty pattern: vacuously true.
  ColorPattern empty;
  empty.n = 4;
  empty.q1 = 1;
  CHECK(verifySubsetCliqueProperty(empty, 2, 2));

  // A positive instance: one graph = K_4 on n=4 with t=2, q=2; every
  // 2-subset spans an edge.
  ColorPattern pos;
  pos.n = 4;
  pos.q1 = 0;
  pos.graphs = {completeGraph(4)};
  CHECK(verifySubsetCliqueProperty(pos, 2, 2));
}
