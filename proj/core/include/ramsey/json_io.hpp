#pragma once

#include "json.hpp"
#include "ramsey/arrowing.hpp"
#include "ramsey/coloring.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/gadgets.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/hypergraph.hpp"
#include "ramsey/packing.hpp"
#include "ramsey/target.hpp"

namespace ramsey {

using Json = nlohmann::json;

// Graphs serialize as graph6 strings; labeled graphs additionally expose a
// labeled edge list through graphToLabeledJson.
Json graphToJson(const Graph& g);
Graph graphFromJson(const Json& j);
Json graphToLabeledJson(const Graph& g);

Json edgeToJson(Edge e);
Edge edgeFromJson(const Json& j);

// Colorings: [[u, v, color], ...] in canonical edge order.
Json coloringToJson(const EdgeColoring& c);
EdgeColoring coloringFromJson(const Json& j);
Json partialToJson(const PartialColoring& p);
PartialColoring partialFromJson(const Json& j);
Json constraintsToJson(const ColoringConstraints& c);
ColoringConstraints constraintsFromJson(const Json& j);

Json statsToJson(const SearchStats& s, bool withTimings = false);
Json arrowReportToJson(const ArrowReport& r, bool withTimings = false);
Json minimalReportToJson(const MinimalReport& r, bool withTimings = false);

Json gadgetSpecToJson(const GadgetSpec& s);
GadgetSpec gadgetSpecFromJson(const Json& j);
Json gadgetReportToJson(const GadgetReport& r);

Json patternToJson(const ColorPattern& p);
ColorPattern patternFromJson(const Json& j);
Json packingResultToJson(const PackingResult& r);

Json hostToJson(const HostGraph& h);
HostGraph hostFromJson(const Json& j);
Json dichotomyToJson(const DichotomyReport& r, bool withTimings = false);

Json hypergraphToJson(const HyperGraph& hg);
HyperGraph hypergraphFromJson(const Json& j);

const char* roleName(GadgetRole role);
GadgetRole roleFromName(const std::string& name);

}  // namespace ramsey
