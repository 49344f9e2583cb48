#pragma once

#include <string>

#include "ramsey/json_io.hpp"

namespace ramsey {

inline constexpr const char* kToolVersion = "0.1.0";

/// Self-checking result document: the payload embeds enough evidence
/// (witness colorings, patterns) to be re-validated without re-running any
/// search; the hash pins the inputs the result speaks about.
struct Certificate {
  std::string kind;  // arrow | minimal | gadget | packing | construction | gamma
  Json payload;
  std::string inputsHash;
  std::string toolVersion = kToolVersion;
};

Json certificateToJson(const Certificate& c);
Certificate certificateFromJson(const Json& j);

/// FNV-1a 64 over the canonical input string of a payload kind.
std::string hashInputs(const std::string& canonicalInputs);

Certificate makeArrowCertificate(const std::string& graph6, const std::string& targetSpec,
                                 const PartialColoring& forced, const ArrowReport& report,
                                 bool withTimings = false);
Certificate makeMinimalCertificate(const std::string& graph6, const std::string& targetSpec,
                                   const MinimalReport& report, bool withTimings = false);
Certificate makeGadgetCertificate(const GadgetSpec& spec, const GadgetReport& report);
Certificate makePackingCertificate(int q1, int q2, int t, int nMax, const PackingResult& result);
Certificate makeConstructionCertificate(const HostGraph& host, const DichotomyReport* dichotomy,
                                        bool withTimings = false);
Certificate makeGammaCertificate(const GammaParams& params, const HyperGraph& sample,
                                 const HyperGraph* cleaned, int removedEdges);

struct VerifyOutcome {
  bool valid = false;
  std::string reason;
};

/// Re-validates every embedded witness against the recorded inputs without
/// re-searching; also re-checks the inputs hash.
VerifyOutcome verifyCertificate(const Certificate& c);

}  // namespace ramsey
