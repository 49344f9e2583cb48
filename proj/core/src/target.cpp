#include "ramsey/target.hpp"

#include <sstream>
#include <stdexcept>

#include "ramsey/graph6.hpp"

namespace ramsey {

Target Target::clique(int t) {
  if (t < 2) throw std::invalid_argument("target: clique needs t >= 2");
  Target tg;
  tg.kind_ = Kind::Clique;
  tg.param_ = t;
  return tg;
}

Target Target::cycle(int length) {
  if (length < 3) throw std::invalid_argument("target: cycle needs length >= 3");
  Target tg;
  tg.kind_ = Kind::Cycle;
  tg.param_ = length;
  return tg;
}

Target Target::tree(Graph explicitTree) {
  if (!explicitTree.isTree()) throw std::invalid_argument("target: explicit tree is not acyclic+connected");
  // A one-vertex tree has no edge to carry a monochromatic copy, which
  // would make edge-coloring freeness vacuous; trees start at one edge.
  if (explicitTree.vertexCount() < 2) throw std::invalid_argument("target: tree needs at least 2 vertices");
  Target tg;
  tg.kind_ = Kind::Tree;
  tg.param_ = explicitTree.vertexCount();
  tg.tree_ = std::move(explicitTree);
  return tg;
}

int Target::order() const { return param_; }

int Target::size() const {
  switch (kind_) {
    case Kind::Clique: return param_ * (param_ - 1) / 2;
    case Kind::Cycle: return param_;
    case Kind::Tree: return param_ - 1;
  }
  return 0;
}

std::string Target::toString() const {
  switch (kind_) {
    case Kind::Clique: return "K" + std::to_string(param_);
    case Kind::Cycle: return "C" + std::to_string(param_);
    case Kind::Tree: return "T:" + writeGraph6(tree_);
  }
  return {};
}

bool Target::operator==(const Target& other) const {
  if (kind_ != other.kind_ || param_ != other.param_) return false;
  if (kind_ == Kind::Tree) return tree_ == other.tree_;
  return true;
}

std::vector<int> TargetTuple::cycleColors() const {
  std::vector<int> out;
  for (int i = 0; i < colorCount(); ++i)
    if (targets[i].kind() == Target::Kind::Cycle) out.push_back(i + 1);
  return out;
}

std::vector<int> TargetTuple::cliqueColors() const {
  std::vector<int> out;
  for (int i = 0; i < colorCount(); ++i)
    if (targets[i].kind() == Target::Kind::Clique) out.push_back(i + 1);
  return out;
}

std::string TargetTuple::toString() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    if (i) os << ",";
    os << targets[i].toString();
  }
  return os.str();
}

TargetTuple cyclesAndCliques(int q1, int q2, int cycleLen, int cliqueSize) {
  if (q1 < 0 || q2 < 0 || q1 + q2 < 1) throw std::invalid_argument("cyclesAndCliques: need q1+q2 >= 1");
  TargetTuple tuple;
  for (int i = 0; i < q1; ++i) tuple.targets.push_back(Target::cycle(cycleLen));
  for (int i = 0; i < q2; ++i) tuple.targets.push_back(Target::clique(cliqueSize));
  return tuple;
}

namespace {

void parseOne(const std::string& item, TargetTuple& tuple) {
  if (item.empty()) throw std::invalid_argument("target spec: empty item");
  std::string body = item;
  int repeat = 1;
  // Repetition suffix "x<count>"; not applicable to T: items (graph6 may
  // contain 'x'), so strip it only for K/C forms.
  if (item[0] == 'K' || item[0] == 'C') {
    std::size_t xpos = body.find('x');
    if (xpos != std::string::npos) {
      repeat = std::stoi(body.substr(xpos + 1));
      if (repeat < 1) throw std::invalid_argument("target spec: bad repeat count");
      body = body.substr(0, xpos);
    }
  }
  Target tg = Target::clique(3);
  if (body[0] == 'K') {
    tg = Target::clique(std::stoi(body.substr(1)));
  } else if (body[0] == 'C') {
    tg = Target::cycle(std::stoi(body.substr(1)));
  } else if (body.rfind("T:", 0) == 0) {
    tg = Target::tree(readGraph6(body.substr(2)));
  } else {
    throw std::invalid_argument("target spec: unknown item '" + item + "'");
  }
  for (int i = 0; i < repeat; ++i) tuple.targets.push_back(tg);
}

}  // namespace

TargetTuple parseTargetSpec(const std::string& spec) {
  TargetTuple tuple;
  std::string item;
  std::istringstream is(spec);
  while (std::getline(is, item, ',')) {
    // Trim surrounding whitespace.
    std::size_t a = item.find_first_not_of(" \t");
    std::size_t b = item.find_last_not_of(" \t");
    if (a == std::string::npos) throw std::invalid_argument("target spec: empty item");
    parseOne(item.substr(a, b - a + 1), tuple);
  }
  if (tuple.targets.empty()) throw std::invalid_argument("target spec: no targets");
  return tuple;
}

}  // namespace ramsey
