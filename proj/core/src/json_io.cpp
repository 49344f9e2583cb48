#include "ramsey/json_io.hpp"

#include <stdexcept>

#include "ramsey/graph6.hpp"

namespace ramsey {

Json graphToJson(const Graph& g) { return writeGraph6(g); }

Graph graphFromJson(const Json& j) { return readGraph6(j.get<std::string>()); }

Json graphToLabeledJson(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) {
    Json item = Json::array({e.u, e.v});
    if (!g.labels.empty()) {
      item = Json::object();
      item["u"] = g.labels[static_cast<std::size_t>(e.u)];
      item["v"] = g.labels[static_cast<std::size_t>(e.v)];
    }
    edges.push_back(item);
  }
  return Json{{"n", g.vertexCount()}, {"edges", edges}};
}

Json edgeToJson(Edge e) { return Json::array({e.u, e.v}); }

Edge edgeFromJson(const Json& j) { return Edge{j.at(0).get<int>(), j.at(1).get<int>()}; }

Json coloringToJson(const EdgeColoring& c) {
  Json out = Json::array();
  for (std::size_t i = 0; i < c.edges.size(); ++i)
    out.push_back(Json::array({c.edges[i].u, c.edges[i].v, c.colors[i]}));
  return out;
}

EdgeColoring coloringFromJson(const Json& j) {
  EdgeColoring c;
  for (const Json& item : j) {
    c.edges.push_back(Edge{item.at(0).get<int>(), item.at(1).get<int>()});
    c.colors.push_back(item.at(2).get<int>());
  }
  return c;
}

Json partialToJson(const PartialColoring& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.assign) out.push_back(Json::array({e.u, e.v, c}));
  return out;
}

PartialColoring partialFromJson(const Json& j) {
  PartialColoring p;
  for (const Json& item : j)
    p.set(Edge{item.at(0).get<int>(), item.at(1).get<int>()}, item.at(2).get<int>());
  return p;
}

Json constraintsToJson(const ColoringConstraints& c) {
  Json allowed = Json::array();
  for (const auto& [e, mask] : c.allowed)
    allowed.push_back(Json::array({e.u, e.v, maskColors(mask)}));
  Json pairs = Json::array();
  for (const PairRule& rule : c.pairs) {
    Json allowedPairs = Json::array();
    for (std::size_t c1 = 1; c1 < rule.allowedSecond.size(); ++c1)
      for (int c2 : maskColors(rule.allowedSecond[c1]))
        allowedPairs.push_back(Json::array({static_cast<int>(c1), c2}));
    pairs.push_back(Json{{"a", edgeToJson(rule.a)}, {"b", edgeToJson(rule.b)}, {"allowed", allowedPairs}});
  }
  return Json{{"allowed", allowed}, {"pairs", pairs}};
}

ColoringConstraints constraintsFromJson(const Json& j) {
  ColoringConstraints c;
  for (const Json& item : j.value("allowed", Json::array())) {
    std::uint32_t mask = 0;
    for (const Json& col : item.at(2)) mask |= std::uint32_t{1} << col.get<int>();
    c.restrict(Edge{item.at(0).get<int>(), item.at(1).get<int>()}, mask);
  }
  for (const Json& item : j.value("pairs", Json::array())) {
    PairRule rule;
    rule.a = edgeFromJson(item.at("a"));
    rule.b = edgeFromJson(item.at("b"));
    int maxColor = 0;
    for (const Json& pair : item.at("allowed")) maxColor = std::max(maxColor, pair.at(0).get<int>());
    rule.allowedSecond.assign(static_cast<std::size_t>(maxColor) + 1, 0);
    for (const Json& pair : item.at("allowed"))
      rule.allowedSecond[static_cast<std::size_t>(pair.at(0).get<int>())] |=
          std::uint32_t{1} << pair.at(1).get<int>();
    c.pairs.push_back(std::move(rule));
  }
  return c;
}

Json statsToJson(const SearchStats& s, bool withTimings) {
  Json out{{"nodes", s.nodes}, {"branches", s.branches}, {"witnessCanonical", s.witnessCanonical}};
  if (!s.note.empty()) out["note"] = s.note;
  if (withTimings) out["seconds"] = s.seconds;
  return out;
}

namespace {

const char* statusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Exhausted: return "exhausted";
    case SearchStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "";
}

}  // namespace

Json arrowReportToJson(const ArrowReport& r, bool withTimings) {
  Json out{{"status", statusName(r.status)},
           {"arrows", r.decided() ? Json(r.arrows) : Json(nullptr)},
           {"stats", statsToJson(r.stats, withTimings)}};
  out["witness"] = r.witness ? coloringToJson(*r.witness) : Json(nullptr);
  return out;
}

Json minimalReportToJson(const MinimalReport& r, bool withTimings) {
  Json out;
  switch (r.status) {
    case MinimalReport::Status::Minimal: out["status"] = "minimal"; break;
    case MinimalReport::Status::NotRamsey: out["status"] = "not-ramsey"; break;
    case MinimalReport::Status::RemovableEdge: out["status"] = "removable-edge"; break;
    case MinimalReport::Status::BudgetExceeded: out["status"] = "budget-exceeded"; break;
  }
  out["minimal"] = r.minimal;
  out["failingEdge"] = r.failingEdge ? edgeToJson(*r.failingEdge) : Json(nullptr);
  out["strippedVertices"] = r.strippedVertices;
  Json witnesses = Json::array();
  for (const auto& [e, coloring] : r.edgeWitnesses)
    witnesses.push_back(Json{{"edge", edgeToJson(e)}, {"coloring", coloringToJson(coloring)}});
  out["edgeWitnesses"] = witnesses;
  out["stats"] = statsToJson(r.stats, withTimings);
  return out;
}

const char* roleName(GadgetRole role) {
  switch (role) {
    case GadgetRole::Determiner: return "determiner";
    case GadgetRole::PositiveSender: return "positive-sender";
    case GadgetRole::NegativeSender: return "negative-sender";
  }
  return "";
}

GadgetRole roleFromName(const std::string& name) {
  if (name == "determiner") return GadgetRole::Determiner;
  if (name == "positive-sender") return GadgetRole::PositiveSender;
  if (name == "negative-sender") return GadgetRole::NegativeSender;
  throw std::invalid_argument("unknown gadget role: " + name);
}

Json gadgetSpecToJson(const GadgetSpec& s) {
  Json signals = Json::array();
  for (const Edge& e : s.signals) signals.push_back(edgeToJson(e));
  return Json{{"graph6", writeGraph6(s.graph)},
              {"signals", signals},
              {"colors", maskColors(s.colorSet)},
              {"role", roleName(s.role)},
              {"targets", s.targets.toString()},
              {"oracle", s.oracle},
              {"constraints", constraintsToJson(s.constraints)}};
}

GadgetSpec gadgetSpecFromJson(const Json& j) {
  GadgetSpec s;
  s.graph = readGraph6(j.at("graph6").get<std::string>());
  for (const Json& e : j.at("signals")) s.signals.push_back(edgeFromJson(e));
  std::uint32_t mask = 0;
  for (const Json& c : j.at("colors")) mask |= std::uint32_t{1} << c.get<int>();
  s.colorSet = mask;
  s.role = roleFromName(j.at("role").get<std::string>());
  s.targets = parseTargetSpec(j.at("targets").get<std::string>());
  s.oracle = j.value("oracle", false);
  if (j.contains("constraints")) s.constraints = constraintsFromJson(j.at("constraints"));
  return s;
}

namespace {

Json axiomToJson(const AxiomResult& a) {
  Json out{{"pass", a.pass}, {"decided", a.decided}};
  if (!a.detail.empty()) out["detail"] = a.detail;
  if (a.violation) out["violation"] = coloringToJson(*a.violation);
  if (!a.missing.empty()) {
    Json missing = Json::array();
    for (auto [c1, c2] : a.missing) missing.push_back(c2 == 0 ? Json(c1) : Json::array({c1, c2}));
    out["missing"] = missing;
  }
  if (!a.witnesses.empty()) {
    Json ws = Json::array();
    for (const EdgeColoring& w : a.witnesses) ws.push_back(coloringToJson(w));
    out["witnesses"] = ws;
  }
  return out;
}

}  // namespace

Json gadgetReportToJson(const GadgetReport& r) {
  return Json{{"axiom1", axiomToJson(r.notRamsey)},
              {"axiom2", axiomToJson(r.colorRestrict)},
              {"axiom3", axiomToJson(r.colorCover)},
              {"exhaustive", r.exhaustive},
              {"pass", r.allPass()}};
}

Json patternToJson(const ColorPattern& p) {
  Json graphs = Json::array();
  for (const Graph& g : p.graphs) graphs.push_back(writeGraph6(g));
  return Json{{"n", p.n}, {"q1", p.q1}, {"graphs", graphs}};
}

ColorPattern patternFromJson(const Json& j) {
  ColorPattern p;
  p.n = j.at("n").get<int>();
  p.q1 = j.at("q1").get<int>();
  for (const Json& g : j.at("graphs")) p.graphs.push_back(readGraph6(g.get<std::string>()));
  return p;
}

Json packingResultToJson(const PackingResult& r) {
  Json out;
  switch (r.outcome) {
    case PackingResult::Outcome::Found: out["outcome"] = "found"; break;
    case PackingResult::Outcome::NoneWithinCap: out["outcome"] = "none-within-cap"; break;
    case PackingResult::Outcome::BudgetExceeded: out["outcome"] = "budget-exceeded"; break;
  }
  const PackingAttestation& attest =
      r.certificate ? r.certificate->attestation : r.attestation;
  out["attestation"] = Json{{"nodesPerOrder", attest.nodesPerOrder}, {"exhaustive", attest.exhaustive}};
  if (r.certificate) {
    out["value"] = r.certificate->value;
    out["witness"] = patternToJson(r.certificate->witness);
  } else {
    out["value"] = nullptr;
    out["witness"] = nullptr;
  }
  return out;
}

Json hostToJson(const HostGraph& h) {
  Json out{{"graph6", writeGraph6(h.graph)},
           {"apex", h.apex},
           {"apexDegree", h.graph.degree(h.apex)},
           {"forced", partialToJson(h.forced)},
           {"targets", h.targets.toString()},
           {"provenance", h.provenance}};
  if (!h.graph.labels.empty()) out["labeled"] = graphToLabeledJson(h.graph);
  return out;
}

HostGraph hostFromJson(const Json& j) {
  HostGraph h;
  h.graph = readGraph6(j.at("graph6").get<std::string>());
  h.apex = j.at("apex").get<int>();
  h.forced = partialFromJson(j.at("forced"));
  h.targets = parseTargetSpec(j.at("targets").get<std::string>());
  h.provenance = j.value("provenance", "");
  return h;
}

Json dichotomyToJson(const DichotomyReport& r, bool withTimings) {
  Json out{{"holds", r.holds}, {"host", arrowReportToJson(r.host, withTimings)}};
  Json apexless{{"status", statusName(r.apexless.status)},
                {"stats", statsToJson(r.apexless.stats, withTimings)}};
  apexless["witness"] = r.apexless.coloring ? coloringToJson(*r.apexless.coloring) : Json(nullptr);
  out["apexless"] = apexless;
  return out;
}

Json hypergraphToJson(const HyperGraph& hg) {
  return Json{{"n", hg.n}, {"h", hg.h}, {"edges", hg.edges}};
}

HyperGraph hypergraphFromJson(const Json& j) {
  HyperGraph hg;
  hg.n = j.at("n").get<int>();
  hg.h = j.at("h").get<int>();
  for (const Json& e : j.at("edges")) hg.edges.push_back(e.get<std::vector<int>>());
  return hg;
}

}  // namespace ramsey
