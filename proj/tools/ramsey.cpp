// Command-line front end: every subcommand prints exactly one JSON document
// to stdout (progress goes to stderr) and exits 0 when decided/valid, 1 on
// input errors, 2 when a node budget ran out.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/generate.hpp"
#include "ramsey/graph6.hpp"

namespace {

using namespace ramsey;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitBudget = 2;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string firstLine(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) {
    if (!line.empty()) return line;
  }
  throw std::invalid_argument("empty input");
}

// Graph arguments accept a file path, "-" for stdin, or a literal graph6
// string.
Graph readGraphArg(const std::string& arg) {
  if (arg != "-") {
    std::ifstream probe(arg);
    if (!probe) return readGraph6(arg);
  }
  return readGraph6(firstLine(slurp(arg)));
}

void emit(const Json& doc) { std::cout << doc.dump(2) << "\n"; }

struct EngineFlags {
  std::uint64_t budget = 100'000'000;
  int threads = 1;
  std::string symmetry = "auto";
  bool timings = false;

  SearchOptions options() const {
    SearchOptions o;
    o.nodeBudget = budget;
    o.threads = threads;
    if (symmetry == "on")
      o.symmetry = SearchOptions::Symmetry::On;
    else if (symmetry == "off")
      o.symmetry = SearchOptions::Symmetry::Off;
    else
      o.symmetry = SearchOptions::Symmetry::Auto;
    return o;
  }
};

void addEngineFlags(CLI::App* cmd, EngineFlags& flags) {
  cmd->add_option("--budget", flags.budget, "search node budget");
  cmd->add_option("--threads", flags.threads, "engine thread cap (outputs are identical across counts)");
  cmd->add_option("--sym", flags.symmetry, "symmetry reduction: auto|on|off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  cmd->add_flag("--timings", flags.timings, "include wall-clock seconds in the output");
}

int runArrow(const std::string& graphArg, const std::string& targetSpec, const std::string& forcedFile,
             const EngineFlags& flags) {
  Graph g = readGraphArg(graphArg);
  TargetTuple targets = parseTargetSpec(targetSpec);
  PartialColoring forced;
  if (!forcedFile.empty()) forced = partialFromJson(Json::parse(slurp(forcedFile)));
  ArrowReport report = arrows(g, targets, ColoringConstraints::fromPartial(forced), flags.options());
  Certificate cert = makeArrowCertificate(writeGraph6(g), targets.toString(), forced, report, flags.timings);
  emit(certificateToJson(cert));
  return report.decided() ? kExitOk : kExitBudget;
}

int runMinimal(const std::string& graphArg, const std::string& targetSpec, const EngineFlags& flags) {
  Graph g = readGraphArg(graphArg);
  TargetTuple targets = parseTargetSpec(targetSpec);
  MinimalReport report = isRamseyMinimal(g, targets, flags.options());
  Certificate cert = makeMinimalCertificate(writeGraph6(g), targets.toString(), report, flags.timings);
  emit(certificateToJson(cert));
  return report.status == MinimalReport::Status::BudgetExceeded ? kExitBudget : kExitOk;
}

int runPacking(int q1, int q2, int t, int nMax, std::uint64_t budget) {
  PackingResult result = computeP(q1, q2, t, nMax, budget);
  Certificate cert = makePackingCertificate(q1, q2, t, nMax, result);
  emit(certificateToJson(cert));
  return result.outcome == PackingResult::Outcome::BudgetExceeded ? kExitBudget : kExitOk;
}

int runVerify(const std::string& certFile) {
  Certificate cert = certificateFromJson(Json::parse(slurp(certFile)));
  VerifyOutcome outcome = verifyCertificate(cert);
  emit(Json{{"valid", outcome.valid}, {"reason", outcome.reason}});
  return outcome.valid ? kExitOk : kExitInput;
}

int runGadgetVerify(const std::string& specFile, const EngineFlags& flags) {
  GadgetSpec spec = gadgetSpecFromJson(Json::parse(slurp(specFile)));
  GadgetReport report = spec.role == GadgetRole::Determiner ? verifyDeterminer(spec, flags.options())
                                                            : verifySender(spec, flags.options());
  Certificate cert = makeGadgetCertificate(spec, report);
  emit(certificateToJson(cert));
  if (!report.exhaustive) return kExitBudget;
  return kExitOk;
}

int runGadgetCompose(const std::string& kind, const std::string& specFile, int k, int h, bool verify,
                     const EngineFlags& flags) {
  GadgetSpec input = gadgetSpecFromJson(Json::parse(slurp(specFile)));
  GadgetSpec composed = kind == "complement" ? composeComplementDeterminer(input, k)
                                             : buildCycleDeterminer(input, h);
  Json out{{"spec", gadgetSpecToJson(composed)}};
  if (verify) {
    GadgetReport report = verifyDeterminer(composed, flags.options());
    out["report"] = gadgetReportToJson(report);
    emit(out);
    return report.exhaustive ? kExitOk : kExitBudget;
  }
  emit(out);
  return kExitOk;
}

int runGadgetSearch(const std::string& role, const std::string& colors, const std::string& targetSpec,
                    int maxN, const std::string& catalogFile, const EngineFlags& flags) {
  TargetTuple targets = parseTargetSpec(targetSpec);
  std::uint32_t colorSet = 0;
  {
    std::istringstream is(colors);
    std::string item;
    while (std::getline(is, item, ',')) colorSet |= std::uint32_t{1} << std::stoi(item);
  }
  std::vector<Graph> catalog;
  if (!catalogFile.empty()) {
    std::istringstream is(slurp(catalogFile));
    std::string line;
    while (std::getline(is, line))
      if (!line.empty()) catalog.push_back(readGraph6(line));
  } else {
    catalog = nonIsomorphicGraphsUpTo(maxN);
  }
  std::size_t at = 0;
  auto stream = [&]() -> std::optional<Graph> {
    if (at >= catalog.size()) return std::nullopt;
    if (at % 50 == 0) std::cerr << "searching candidate " << at << "/" << catalog.size() << "\n";
    return catalog[at++];
  };
  try {
    auto found = searchGadget(roleFromName(role), colorSet, targets, maxN, stream, flags.options());
    Json out{{"found", found.has_value()}, {"candidatesTried", at}};
    out["spec"] = found ? gadgetSpecToJson(*found) : Json(nullptr);
    emit(out);
    return kExitOk;
  } catch (const BudgetExceededError& e) {
    emit(Json{{"found", nullptr}, {"error", e.what()}});
    return kExitBudget;
  }
}

int runConstruct(const std::string& kind, int t, int k, int l, int q1, int q2, int nMax,
                 const std::string& patternFile, bool verify, const EngineFlags& flags) {
  HostGraph host;
  if (kind == "tree-clique") {
    host = buildTreeCliqueHost(t, l);
  } else if (kind == "cycle-cycle") {
    TargetTuple targets;
    targets.targets = {Target::cycle(k), Target::cycle(l)};
    host = buildCycleCycleHost(k, l, oracleDeterminer(colorSetMask({1}), targets),
                               oracleDeterminer(colorSetMask({2}), targets));
  } else if (kind == "clique-cycle") {
    TargetTuple targets;
    targets.targets = {Target::clique(t), Target::cycle(l)};
    host = buildCliqueCycleHost(t, l, oracleDeterminer(colorSetMask({1}), targets),
                                oracleDeterminer(colorSetMask({2}), targets));
  } else {  // packing
    ColorPattern pattern;
    if (!patternFile.empty()) {
      pattern = patternFromJson(Json::parse(slurp(patternFile)));
    } else {
      PackingResult pr = computeP(q1, q2, t - 1, nMax, flags.budget);
      if (pr.outcome == PackingResult::Outcome::BudgetExceeded) {
        emit(Json{{"error", "packing search budget exceeded"}});
        return kExitBudget;
      }
      if (pr.outcome != PackingResult::Outcome::Found) {
        emit(Json{{"error", "no pattern within nMax"}});
        return kExitInput;
      }
      pattern = pr.certificate->witness;
    }
    host = buildPackingHost(pattern, t, l);
  }
  if (verify) {
    DichotomyReport dichotomy = checkSkeletonDichotomy(host, flags.options());
    Certificate cert = makeConstructionCertificate(host, &dichotomy, flags.timings);
    emit(certificateToJson(cert));
    return dichotomy.host.decided() && dichotomy.apexless.status != SearchStatus::BudgetExceeded
               ? kExitOk
               : kExitBudget;
  }
  Certificate cert = makeConstructionCertificate(host, nullptr, flags.timings);
  emit(certificateToJson(cert));
  return kExitOk;
}

int runGamma(int n, int h, int ell, int t, int q1, int q2, double A, std::uint64_t seed, bool haveSeed,
             bool clean, bool classify) {
  if (!haveSeed) throw std::invalid_argument("gamma sample requires an explicit --seed");
  GammaParams params;
  params.n = n;
  params.cycleLen = ell;
  params.t = t;
  params.q1 = q1;
  params.q2 = q2;
  params.A = A;
  params.seed = seed;
  params.h = h > 0 ? h : deriveUniformity(q2, t);
  std::cerr << "sampling h=" << params.h << " p=" << params.edgeProbability() << "\n";
  HyperGraph sample = sampleHypergraph(params);
  std::cerr << "sampled " << sample.edgeCount() << " edges\n";

  HyperGraph cleaned;
  int removed = 0;
  Certificate cert = clean
                         ? (cleaned = removeShortCycles(sample, params.cycleLen, &removed),
                            makeGammaCertificate(params, sample, &cleaned, removed))
                         : makeGammaCertificate(params, sample, nullptr, 0);
  if (classify && clean) {
    Graph gamma = blowUp(cleaned);
    Json classifications = Json::object();
    CopyClassification kh = classifyCopies(gamma, cleaned, Target::clique(params.h));
    classifications["K" + std::to_string(params.h)] =
        Json{{"hyperedge", kh.hyperedgeCopies}, {"nonHyperedge", kh.nonHyperedgeCopies.size()}};
    for (int s = 3; s < params.cycleLen; ++s) {
      CopyClassification cs = classifyCopies(gamma, cleaned, Target::cycle(s));
      classifications["C" + std::to_string(s)] =
          Json{{"hyperedge", cs.hyperedgeCopies}, {"nonHyperedge", cs.nonHyperedgeCopies.size()}};
    }
    cert.payload["classification"] = classifications;
    cert.payload["blowupEdges"] = blowUp(cleaned).edgeCount();
  }
  emit(certificateToJson(cert));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Ramsey arrowing workbench"};
  app.require_subcommand(1);

  EngineFlags flags;

  // arrow
  std::string graphArg, targetSpec, forcedFile;
  CLI::App* arrow = app.add_subcommand("arrow", "decide G ->_q (H_1,...,H_q)");
  arrow->add_option("graph", graphArg, "graph6 string or file")->required();
  arrow->add_option("targets", targetSpec, "target spec, e.g. \"K3,K3\" or \"C4x2,K3\"")->required();
  arrow->add_option("--forced", forcedFile, "JSON file [[u,v,color],...] of forced edge colors");
  addEngineFlags(arrow, flags);

  // minimal
  std::string minGraphArg, minTargetSpec;
  CLI::App* minimal = app.add_subcommand("minimal", "check q-Ramsey-minimality");
  minimal->add_option("graph", minGraphArg)->required();
  minimal->add_option("targets", minTargetSpec)->required();
  addEngineFlags(minimal, flags);

  // packing
  int pq1 = 0, pq2 = 0, pt = 2, pnMax = 6;
  CLI::App* packing = app.add_subcommand("packing", "compute the packing parameter P_{q1,q2}(t)");
  packing->add_option("q1", pq1)->required();
  packing->add_option("q2", pq2)->required();
  packing->add_option("t", pt)->required();
  packing->add_option("nMax", pnMax)->required();
  packing->add_option("--budget", flags.budget);

  // verify
  std::string certFile;
  CLI::App* verify = app.add_subcommand("verify", "re-validate a certificate without re-searching");
  verify->add_option("certificate", certFile)->required();

  // gadget
  CLI::App* gadget = app.add_subcommand("gadget", "set-determiner / set-sender operations");
  gadget->require_subcommand(1);
  std::string gadgetSpecFile;
  CLI::App* gverify = gadget->add_subcommand("verify", "check the three gadget axioms");
  gverify->add_option("spec", gadgetSpecFile)->required();
  addEngineFlags(gverify, flags);

  std::string composeKind, composeSpecFile;
  int composeK = 4, composeH = 3;
  bool composeVerify = false;
  CLI::App* gcompose = gadget->add_subcommand("compose", "build a determiner from a smaller one");
  gcompose->set_help_flag("--help", "print help");  // frees -h for the clique order
  gcompose->add_option("kind", composeKind, "complement | cycle-determiner")
      ->required()
      ->check(CLI::IsMember({"complement", "cycle-determiner"}));
  gcompose->add_option("spec", composeSpecFile)->required();
  gcompose->add_option("--k", composeK, "cycle length for the complement composition");
  gcompose->add_option("--h", composeH, "clique order for the cycle-determiner composition");
  gcompose->add_flag("--verify", composeVerify, "run the axiom checks on the output");
  addEngineFlags(gcompose, flags);

  std::string searchRole = "determiner", searchColors, searchTargets, searchCatalog;
  int searchMaxN = 6;
  CLI::App* gsearch = gadget->add_subcommand("search", "scan a graph stream for a verified gadget");
  gsearch->add_option("--role", searchRole)->check(CLI::IsMember({"determiner", "positive-sender", "negative-sender"}));
  gsearch->add_option("--colors", searchColors, "comma list, e.g. 1,2")->required();
  gsearch->add_option("--targets", searchTargets)->required();
  gsearch->add_option("--max-n", searchMaxN, "vertex budget");
  gsearch->add_option("--catalog", searchCatalog, "graph6 lines file (default: generated catalog)");
  addEngineFlags(gsearch, flags);

  // construct
  std::string constructKind, patternFile;
  int ct = 3, ck = 4, cl = 4, cq1 = 1, cq2 = 1, cnMax = 6;
  bool constructVerify = false;
  CLI::App* construct = app.add_subcommand("construct", "build the explicit host graphs");
  construct->add_option("kind", constructKind)
      ->required()
      ->check(CLI::IsMember({"tree-clique", "cycle-cycle", "clique-cycle", "packing"}));
  construct->add_option("--t", ct, "clique order (tree order for tree-clique goes in --l)");
  construct->add_option("--k", ck, "short cycle length");
  construct->add_option("--l", cl, "cycle length / tree order");
  construct->add_option("--q1", cq1, "cycle colors (packing host)");
  construct->add_option("--q2", cq2, "clique colors (packing host)");
  construct->add_option("--nmax", cnMax, "packing search cap");
  construct->add_option("--pattern", patternFile, "pattern JSON file to build on");
  construct->add_flag("--verify", constructVerify, "run the skeleton dichotomy checks");
  addEngineFlags(construct, flags);

  // gamma
  int gn = 100, gh = 0, gell = 4, gt = 3, gq1 = 1, gq2 = 1;
  double gA = 1.0;
  std::uint64_t gseed = 0;
  bool gclean = false, gclassify = false;
  CLI::App* gamma = app.add_subcommand("gamma", "random hypergraph construction");
  gamma->require_subcommand(1);
  CLI::App* gsample = gamma->add_subcommand("sample", "sample, optionally clean and classify");
  gsample->set_help_flag("--help", "print help");  // frees -h for the uniformity
  gsample->add_option("--n", gn)->required();
  gsample->add_option("--h", gh, "uniformity (default: derive r_{q2}(K_t))");
  gsample->add_option("--ell", gell)->required();
  gsample->add_option("--t", gt);
  gsample->add_option("--q1", gq1);
  gsample->add_option("--q2", gq2);
  gsample->add_option("--A", gA)->required();
  CLI::Option* seedOpt = gsample->add_option("--seed", gseed, "RNG seed (required; no ambient entropy)");
  gsample->add_flag("--clean", gclean, "remove short Berge cycles");
  gsample->add_flag("--classify", gclassify, "classify clique/cycle copies of the cleaned blow-up");

  CLI11_PARSE(app, argc, argv);

  try {
    if (arrow->parsed()) return runArrow(graphArg, targetSpec, forcedFile, flags);
    if (minimal->parsed()) return runMinimal(minGraphArg, minTargetSpec, flags);
    if (packing->parsed()) return runPacking(pq1, pq2, pt, pnMax, flags.budget);
    if (verify->parsed()) return runVerify(certFile);
    if (gadget->parsed()) {
      if (gverify->parsed()) return runGadgetVerify(gadgetSpecFile, flags);
      if (gcompose->parsed())
        return runGadgetCompose(composeKind, composeSpecFile, composeK, composeH, composeVerify, flags);
      return runGadgetSearch(searchRole, searchColors, searchTargets, searchMaxN, searchCatalog, flags);
    }
    if (construct->parsed())
      return runConstruct(constructKind, ct, ck, cl, cq1, cq2, cnMax, patternFile, constructVerify, flags);
    if (gamma->parsed())
      return runGamma(gn, gh, gell, gt, gq1, gq2, gA, gseed, seedOpt->count() > 0, gclean, gclassify);
  } catch (const BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
