#include "ramsey/graph6.hpp"

#include <stdexcept>

namespace ramsey {

namespace {
constexpr int kBias = 63;
constexpr int kBig = 126;
}  // namespace

std::string writeGraph6(const Graph& g) {
  int n = g.vertexCount();
  if (n > 258047) throw std::invalid_argument("graph6: vertex count too large");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kBig));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
  int acc = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.hasEdge(u, v) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + kBias));
  return out;
}

Graph readGraph6(const std::string& text) {
  std::string s = text;
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
  if (s.empty()) throw std::invalid_argument("graph6: empty input");

  std::size_t pos = 0;
  auto next = [&]() -> int {
    if (pos >= s.size()) throw std::invalid_argument("graph6: truncated input");
    int c = static_cast<unsigned char>(s[pos++]);
    if (c < kBias || c > kBig) throw std::invalid_argument("graph6: invalid character");
    return c - kBias;
  };

  long long n;
  int first = next();
  if (first < 63) {
    n = first;
  } else {
    int a = next(), b = next(), c = next();
    n = (static_cast<long long>(a) << 12) | (b << 6) | c;
  }
  if (n > 258047) throw std::invalid_argument("graph6: vertex count too large");

  Graph g(static_cast<int>(n));
  int acc = 0;
  int bits = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (bits == 0) {
        acc = next();
        bits = 6;
      }
      if (acc & (1 << (bits - 1))) g.addEdge(u, v);
      --bits;
    }
  }
  if (pos != s.size()) throw std::invalid_argument("graph6: trailing data");
  return g;
}

}  // namespace ramsey
