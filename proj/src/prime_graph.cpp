#include "sgq/prime_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "sgq/errors.hpp"
#include "sgq/factored.hpp"

namespace sgq {

namespace {

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a), b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

bool PrimeGraph::has_edge(std::uint64_t p, std::uint64_t q) const {
  if (p > q) std::swap(p, q);
  return edges.count({p, q}) > 0;
}

PrimeGraph build_prime_graph(const std::set<std::uint64_t>& pi_e) {
  if (pi_e.empty()) throw DomainError("prime graph of an empty spectrum");
  PrimeGraph g;
  std::set<std::uint64_t> primes;
  for (auto k : pi_e) {
    if (k == 0) throw DomainError("element order 0 in spectrum");
    for (auto p : factor_integer(k).primes()) primes.insert(p);
  }
  g.vertices.assign(primes.begin(), primes.end());

  std::map<std::uint64_t, std::size_t> index;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) index[g.vertices[i]] = i;
  UnionFind uf(g.vertices.size());
  for (auto k : pi_e) {
    const auto f = factor_integer(k);
    const auto ps = f.primes();
    if (ps.size() != 2 || f.exponent(ps[0]) != 1 || f.exponent(ps[1]) != 1) continue;
    g.edges.insert({ps[0], ps[1]});
    uf.unite(index[ps[0]], index[ps[1]]);
  }

  std::map<std::size_t, std::vector<std::uint64_t>> parts;
  for (std::size_t i = 0; i < g.vertices.size(); ++i) parts[uf.find(i)].push_back(g.vertices[i]);
  // Roots are least indices, so parts come out ordered by least prime; 2 is
  // the least prime whenever present.
  for (auto& [root, part] : parts) g.components.push_back(std::move(part));
  return g;
}

bool is_isolated(const PrimeGraph& g, std::uint64_t p) {
  if (!std::binary_search(g.vertices.begin(), g.vertices.end(), p))
    throw DomainError(std::to_string(p) + " is not a vertex of the prime graph");
  for (const auto& c : g.components)
    if (c.size() == 1 && c[0] == p) return true;
  return false;
}

std::string to_dot(const PrimeGraph& g, const std::string& name) {
  std::ostringstream os;
  os << "graph \"" << name << "\" {\n";
  for (std::size_t i = 0; i < g.components.size(); ++i) {
    os << "  subgraph cluster_" << i + 1 << " {\n    label=\"pi_" << i + 1 << "\";\n";
    for (auto p : g.components[i]) os << "    p" << p << " [label=\"" << p << "\"];\n";
    os << "  }\n";
  }
  for (const auto& [p, q] : g.edges) os << "  p" << p << " -- p" << q << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sgq
