#include "mideal/graphs.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "mideal/closure.hpp"
#include "mideal/errors.hpp"
#include "mideal/primes.hpp"

namespace mideal {

SimpleGraph::SimpleGraph(int vertex_count,
                         std::vector<std::pair<int, int>> edges)
    : n_(vertex_count) {
  if (n_ < 1) throw PreconditionError("graph: need at least one vertex");
  for (auto& [a, b] : edges) {
    if (a == b) throw PreconditionError("graph: loops are not allowed");
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
      throw PreconditionError("graph: edge endpoint out of range");
    if (a > b) std::swap(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
}

bool SimpleGraph::has_edge(int i, int j) const {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), std::pair(i, j));
}

MonomialIdeal edge_ideal(const SimpleGraph& g) {
  if (g.edges().empty())
    throw PreconditionError("edge ideal: graph has no edges");
  const Ring ring = Ring::with_vars(g.vertex_count());
  std::vector<Monomial> gens;
  gens.reserve(g.edges().size());
  for (auto [a, b] : g.edges())
    gens.push_back(Monomial::var_power(g.vertex_count(), a)
                       .times(Monomial::var_power(g.vertex_count(), b)));
  return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal cover_ideal(const SimpleGraph& g) {
  return alexander_dual(edge_ideal(g));
}

std::vector<std::vector<int>> induced_odd_cycles(const SimpleGraph& g) {
  const int n = g.vertex_count();
  if (n > 16)
    throw CapExceededError("induced odd cycles: more than 16 vertices");

  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (auto [a, b] : g.edges()) {
    adj[static_cast<std::size_t>(a)] |= 1u << b;
    adj[static_cast<std::size_t>(b)] |= 1u << a;
  }

  // An induced subgraph is a cycle iff it is connected and 2-regular;
  // 2-regularity alone allows disjoint unions of cycles.
  std::vector<std::vector<int>> cycles;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    const int size = std::popcount(mask);
    if (size < 3 || size % 2 == 0) continue;
    bool regular = true;
    for (int v = 0; v < n && regular; ++v)
      if (mask & (1u << v))
        regular = std::popcount(adj[static_cast<std::size_t>(v)] & mask) == 2;
    if (!regular) continue;

    std::uint32_t start = mask & (~mask + 1);
    std::uint32_t reached = start;
    for (;;) {
      std::uint32_t next = reached;
      for (int v = 0; v < n; ++v)
        if (reached & (1u << v)) next |= adj[static_cast<std::size_t>(v)] & mask;
      if (next == reached) break;
      reached = next;
    }
    if (reached != mask) continue;

    std::vector<int> verts;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) verts.push_back(v);
    cycles.push_back(std::move(verts));
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

MonomialIdeal fhv_square_decomposition(const SimpleGraph& g) {
  const Ring ring = Ring::with_vars(g.vertex_count());
  const int n = g.vertex_count();

  MonomialIdeal result = MonomialIdeal::unit(ring);
  bool first = true;
  for (auto [a, b] : g.edges()) {
    MonomialIdeal prime_sq =
        power(MonomialPrime(ring, {a, b}).to_ideal(), 2);
    result = first ? prime_sq : intersect(result, prime_sq);
    first = false;
  }
  if (first)
    throw PreconditionError("square decomposition: graph has no edges");

  for (const auto& cycle : induced_odd_cycles(g)) {
    std::vector<Monomial> squares;
    squares.reserve(cycle.size());
    for (int v : cycle) squares.push_back(Monomial::var_power(n, v, 2));
    result = intersect(result, MonomialIdeal(ring, std::move(squares)));
  }
  return result;
}

P1Report verify_p1(const SimpleGraph& g) {
  const MonomialIdeal j = cover_ideal(g);
  const MonomialIdeal j2 = power(j, 2);
  return P1Report{is_integrally_closed(j2),
                  colon_ideal(power(j, 3), j) == j2};
}

} // namespace mideal
