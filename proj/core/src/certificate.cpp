#include "ramsey/certificate.hpp"

#include <algorithm>

#include "ramsey/errors.hpp"
#include "ramsey/graph6.hpp"

namespace ramsey {

Json certificateToJson(const Certificate& c) {
  return Json{{"kind", c.kind},
              {"payload", c.payload},
              {"inputsHash", c.inputsHash},
              {"toolVersion", c.toolVersion}};
}

Certificate certificateFromJson(const Json& j) {
  Certificate c;
  c.kind = j.at("kind").get<std::string>();
  c.payload = j.at("payload");
  c.inputsHash = j.at("inputsHash").get<std::string>();
  c.toolVersion = j.at("toolVersion").get<std::string>();
  return c;
}

std::string hashInputs(const std::string& canonicalInputs) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonicalInputs) {
    hash ^= ch;
    hash *= 0x100000001b3ULL;
  }
  char buf[24];
  std::snprintf(buf, sizeof(buf), "fnv1a:%016llx", static_cast<unsigned long long>(hash));
  return buf;
}

namespace {

std::string arrowInputs(const std::string& graph6, const std::string& targetSpec, const Json& forced) {
  return "arrow|" + graph6 + "|" + targetSpec + "|" + forced.dump();
}

std::string minimalInputs(const std::string& graph6, const std::string& targetSpec) {
  return "minimal|" + graph6 + "|" + targetSpec;
}

}  // namespace

Certificate makeArrowCertificate(const std::string& graph6, const std::string& targetSpec,
                                 const PartialColoring& forced, const ArrowReport& report,
                                 bool withTimings) {
  Certificate c;
  c.kind = "arrow";
  Json forcedJson = partialToJson(forced);
  c.payload = Json{{"graph6", graph6},
                   {"targets", targetSpec},
                   {"forced", forcedJson},
                   {"report", arrowReportToJson(report, withTimings)}};
  c.inputsHash = hashInputs(arrowInputs(graph6, targetSpec, forcedJson));
  return c;
}

Certificate makeMinimalCertificate(const std::string& graph6, const std::string& targetSpec,
                                   const MinimalReport& report, bool withTimings) {
  Certificate c;
  c.kind = "minimal";
  c.payload = Json{{"graph6", graph6},
                   {"targets", targetSpec},
                   {"report", minimalReportToJson(report, withTimings)}};
  c.inputsHash = hashInputs(minimalInputs(graph6, targetSpec));
  return c;
}

Certificate makeGadgetCertificate(const GadgetSpec& spec, const GadgetReport& report) {
  Certificate c;
  c.kind = "gadget";
  Json specJson = gadgetSpecToJson(spec);
  c.payload = Json{{"spec", specJson}, {"report", gadgetReportToJson(report)}};
  c.inputsHash = hashInputs("gadget|" + specJson.dump());
  return c;
}

Certificate makePackingCertificate(int q1, int q2, int t, int nMax, const PackingResult& result) {
  Certificate c;
  c.kind = "packing";
  c.payload = Json{{"q1", q1}, {"q2", q2}, {"t", t}, {"nMax", nMax},
                   {"result", packingResultToJson(result)}};
  c.inputsHash = hashInputs("packing|" + std::to_string(q1) + "|" + std::to_string(q2) + "|" +
                            std::to_string(t) + "|" + std::to_string(nMax));
  return c;
}

Certificate makeConstructionCertificate(const HostGraph& host, const DichotomyReport* dichotomy,
                                        bool withTimings) {
  Certificate c;
  c.kind = "construction";
  c.payload = Json{{"host", hostToJson(host)}};
  c.payload["dichotomy"] = dichotomy ? dichotomyToJson(*dichotomy, withTimings) : Json(nullptr);
  c.inputsHash = hashInputs("construction|" + host.provenance + "|" + host.targets.toString());
  return c;
}

Certificate makeGammaCertificate(const GammaParams& params, const HyperGraph& sample,
                                 const HyperGraph* cleaned, int removedEdges) {
  Certificate c;
  c.kind = "gamma";
  Json paramsJson{{"n", params.n},       {"l", params.cycleLen}, {"t", params.t}, {"q1", params.q1},
                  {"q2", params.q2},     {"h", params.h},        {"A", params.A},
                  {"seed", params.seed}};
  c.payload = Json{{"params", paramsJson},
                   {"sample", hypergraphToJson(sample)},
                   {"removedEdges", removedEdges}};
  c.payload["cleaned"] = cleaned ? hypergraphToJson(*cleaned) : Json(nullptr);
  c.inputsHash = hashInputs("gamma|" + paramsJson.dump());
  return c;
}

namespace {

VerifyOutcome fail(const std::string& reason) { return VerifyOutcome{false, reason}; }

VerifyOutcome verifyArrow(const Json& payload) {
  Graph g = readGraph6(payload.at("graph6").get<std::string>());
  TargetTuple targets = parseTargetSpec(payload.at("targets").get<std::string>());
  PartialColoring forced = partialFromJson(payload.at("forced"));
  const Json& report = payload.at("report");
  std::string status = report.at("status").get<std::string>();
  if (status == "found") {
    if (report.at("witness").is_null()) return fail("found status without witness");
    EdgeColoring witness = coloringFromJson(report.at("witness"));
    if (witness.edges != g.edges()) return fail("witness does not cover the host edge set");
    if (!agreesWith(witness, forced)) return fail("witness disagrees with the forced coloring");
    if (!isFreeColoring(g, targets, witness)) return fail("witness coloring is not free");
  } else if (status == "exhausted") {
    if (!report.at("witness").is_null()) return fail("exhausted status carries a witness");
  } else if (status != "budget-exceeded") {
    return fail("unknown status: " + status);
  }
  return VerifyOutcome{true, ""};
}

VerifyOutcome verifyMinimal(const Json& payload) {
  Graph g = readGraph6(payload.at("graph6").get<std::string>());
  TargetTuple targets = parseTargetSpec(payload.at("targets").get<std::string>());
  const Json& report = payload.at("report");
  std::size_t count = 0;
  for (const Json& item : report.at("edgeWitnesses")) {
    Edge e = edgeFromJson(item.at("edge"));
    if (!g.hasEdge(e.u, e.v)) return fail("edge witness for a non-edge");
    Graph sub = g.withoutEdge(e);
    EdgeColoring witness = coloringFromJson(item.at("coloring"));
    if (witness.edges != sub.edges()) return fail("edge witness does not cover g - e");
    if (!isFreeColoring(sub, targets, witness)) return fail("edge witness is not free");
    ++count;
  }
  if (report.at("status").get<std::string>() == "minimal" &&
      count != static_cast<std::size_t>(g.edgeCount()))
    return fail("minimal status lacks a witness per edge");
  return VerifyOutcome{true, ""};
}

VerifyOutcome verifyGadget(const Json& payload) {
  GadgetSpec spec = gadgetSpecFromJson(payload.at("spec"));
  const Json& report = payload.at("report");
  bool sender = spec.role != GadgetRole::Determiner;

  auto checkFree = [&](const EdgeColoring& w) -> std::string {
    if (w.edges != spec.graph.edges()) return "coloring does not cover the gadget";
    if (!isFreeColoring(spec.graph, spec.targets, w)) return "coloring is not free";
    if (!satisfiesConstraints(w, spec.constraints)) return "coloring breaks the skeleton constraints";
    return "";
  };

  const Json& a2 = report.at("axiom2");
  if (a2.contains("violation")) {
    EdgeColoring w = coloringFromJson(a2.at("violation"));
    std::string err = checkFree(w);
    if (!err.empty()) return fail("axiom2 violation: " + err);
    if (!sender) {
      int c = w.colorOf(spec.signal());
      if (spec.colorSet & (std::uint32_t{1} << c)) return fail("axiom2 violation has its signal inside X");
    } else {
      int c1 = w.colorOf(spec.signals[0]);
      int c2 = w.colorOf(spec.signals[1]);
      bool inSet = (spec.colorSet & (std::uint32_t{1} << c1)) && (spec.colorSet & (std::uint32_t{1} << c2));
      bool allowed = inSet && (spec.role == GadgetRole::NegativeSender ? c1 != c2 : c1 == c2);
      if (allowed) return fail("axiom2 violation realizes an allowed pair");
    }
  }
  const Json& a3 = report.at("axiom3");
  if (a3.contains("witnesses")) {
    for (const Json& item : a3.at("witnesses")) {
      EdgeColoring w = coloringFromJson(item);
      std::string err = checkFree(w);
      if (!err.empty()) return fail("axiom3 witness: " + err);
      if (!sender) {
        int c = w.colorOf(spec.signal());
        if (!(spec.colorSet & (std::uint32_t{1} << c))) return fail("axiom3 witness has its signal outside X");
      } else {
        int c1 = w.colorOf(spec.signals[0]);
        int c2 = w.colorOf(spec.signals[1]);
        bool inSet =
            (spec.colorSet & (std::uint32_t{1} << c1)) && (spec.colorSet & (std::uint32_t{1} << c2));
        bool allowed = inSet && (spec.role == GadgetRole::NegativeSender ? c1 != c2 : c1 == c2);
        if (!allowed) return fail("axiom3 witness realizes a disallowed pair");
      }
    }
  }
  return VerifyOutcome{true, ""};
}

VerifyOutcome verifyPacking(const Json& payload) {
  const Json& result = payload.at("result");
  if (result.at("outcome").get<std::string>() != "found") return VerifyOutcome{true, ""};
  if (result.at("witness").is_null()) return fail("found outcome without witness");
  ColorPattern witness = patternFromJson(result.at("witness"));
  int value = result.at("value").get<int>();
  if (witness.n != value) return fail("witness order disagrees with the value");
  if (witness.q1 != payload.at("q1").get<int>()) return fail("witness q1 mismatch");
  if (witness.q2() != payload.at("q2").get<int>()) return fail("witness q2 mismatch");
  if (value > payload.at("nMax").get<int>()) return fail("value exceeds nMax");
  PatternCheck check = verifyPattern(witness, payload.at("t").get<int>());
  if (!check.valid) return fail("witness pattern is invalid: " + check.reason);
  return VerifyOutcome{true, ""};
}

VerifyOutcome verifyConstruction(const Json& payload) {
  HostGraph host = hostFromJson(payload.at("host"));
  if (host.apex < 0 || host.apex >= host.graph.vertexCount()) return fail("apex out of range");
  if (payload.at("host").contains("apexDegree") &&
      payload.at("host").at("apexDegree").get<int>() != host.graph.degree(host.apex))
    return fail("declared apex degree is wrong");
  for (const auto& [e, c] : host.forced.assign) {
    if (!host.graph.hasEdge(e.u, e.v)) return fail("forced color on a non-edge");
    if (e.u == host.apex || e.v == host.apex) return fail("forced color on an apex edge");
    if (c < 1 || c > host.targets.colorCount()) return fail("forced color out of palette");
  }
  const Json& dichotomy = payload.at("dichotomy");
  if (!dichotomy.is_null()) {
    const Json& apexless = dichotomy.at("apexless");
    if (!apexless.at("witness").is_null()) {
      EdgeColoring w = coloringFromJson(apexless.at("witness"));
      Graph sub = host.graph.withoutEdgesAt(host.apex);
      if (w.edges != sub.edges()) return fail("apexless witness does not cover the apexless host");
      if (!agreesWith(w, host.forced)) return fail("apexless witness breaks the skeleton forcing");
      if (!isFreeColoring(sub, host.targets, w)) return fail("apexless witness is not free");
    }
  }
  return VerifyOutcome{true, ""};
}

VerifyOutcome verifyGamma(const Json& payload) {
  const Json& params = payload.at("params");
  HyperGraph sample = hypergraphFromJson(payload.at("sample"));
  if (sample.n != params.at("n").get<int>() || sample.h != params.at("h").get<int>())
    return fail("sample dimensions disagree with the parameters");
  auto checkEdges = [&](const HyperGraph& hg) -> std::string {
    for (const auto& e : hg.edges) {
      if (static_cast<int>(e.size()) != hg.h) return "an edge has the wrong arity";
      if (!std::is_sorted(e.begin(), e.end())) return "an edge is not sorted";
      if (std::adjacent_find(e.begin(), e.end()) != e.end()) return "an edge repeats a vertex";
      if (e.front() < 0 || e.back() >= hg.n) return "an edge leaves the vertex range";
    }
    if (!std::is_sorted(hg.edges.begin(), hg.edges.end())) return "edges are not in canonical order";
    if (std::adjacent_find(hg.edges.begin(), hg.edges.end()) != hg.edges.end())
      return "duplicate edges";
    return "";
  };
  std::string err = checkEdges(sample);
  if (!err.empty()) return fail("sample: " + err);
  if (!payload.at("cleaned").is_null()) {
    HyperGraph cleaned = hypergraphFromJson(payload.at("cleaned"));
    err = checkEdges(cleaned);
    if (!err.empty()) return fail("cleaned: " + err);
    if (!std::includes(sample.edges.begin(), sample.edges.end(), cleaned.edges.begin(),
                       cleaned.edges.end()))
      return fail("cleaned instance is not a subset of the sample");
    int removed = payload.at("removedEdges").get<int>();
    if (sample.edgeCount() - cleaned.edgeCount() != removed) return fail("removed-edge count mismatch");
    if (!findShortBergeCycles(cleaned, params.at("l").get<int>()).empty())
      return fail("cleaned instance still has short cycles");
  }
  return VerifyOutcome{true, ""};
}

}  // namespace

VerifyOutcome verifyCertificate(const Certificate& c) {
  try {
    std::string expectedHash;
    if (c.kind == "arrow") {
      expectedHash = hashInputs(arrowInputs(c.payload.at("graph6").get<std::string>(),
                                            c.payload.at("targets").get<std::string>(),
                                            c.payload.at("forced")));
    } else if (c.kind == "minimal") {
      expectedHash = hashInputs(minimalInputs(c.payload.at("graph6").get<std::string>(),
                                              c.payload.at("targets").get<std::string>()));
    } else if (c.kind == "gadget") {
      expectedHash = hashInputs("gadget|" + c.payload.at("spec").dump());
    } else if (c.kind == "packing") {
      expectedHash = hashInputs("packing|" + std::to_string(c.payload.at("q1").get<int>()) + "|" +
                                std::to_string(c.payload.at("q2").get<int>()) + "|" +
                                std::to_string(c.payload.at("t").get<int>()) + "|" +
                                std::to_string(c.payload.at("nMax").get<int>()));
    } else if (c.kind == "construction") {
      expectedHash = hashInputs("construction|" + c.payload.at("host").at("provenance").get<std::string>() +
                                "|" + c.payload.at("host").at("targets").get<std::string>());
    } else if (c.kind == "gamma") {
      expectedHash = hashInputs("gamma|" + c.payload.at("params").dump());
    } else {
      return fail("unknown certificate kind: " + c.kind);
    }
    if (expectedHash != c.inputsHash) return fail("inputs hash mismatch");

    if (c.kind == "arrow") return verifyArrow(c.payload);
    if (c.kind == "minimal") return verifyMinimal(c.payload);
    if (c.kind == "gadget") return verifyGadget(c.payload);
    if (c.kind == "packing") return verifyPacking(c.payload);
    if (c.kind == "construction") return verifyConstruction(c.payload);
    return verifyGamma(c.payload);
  } catch (const std::exception& e) {
    return fail(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace ramsey
