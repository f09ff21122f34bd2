#ifndef MIDEAL_GRAPHS_HPP
#define MIDEAL_GRAPHS_HPP

#include <utility>
#include <vector>

#include "mideal/ideal.hpp"

namespace mideal {

/// Finite simple graph on vertices 0..n-1. Edges are stored as ordered
/// pairs (i < j), sorted and deduplicated; loops are rejected.
class SimpleGraph {
public:
  SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edges);

  int vertex_count() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  bool has_edge(int i, int j) const;

private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
};

/// Square-free quadratic ideal in x1..xn with one generator per edge.
MonomialIdeal edge_ideal(const SimpleGraph& g);

/// Alexander dual of the edge ideal; generators are the minimal vertex
/// covers.
MonomialIdeal cover_ideal(const SimpleGraph& g);

/// Vertex sets of odd size >= 3 whose induced subgraph is a cycle, each
/// sorted ascending, the list sorted as well. Subset enumeration caps the
/// graph at 16 vertices.
std::vector<std::vector<int>> induced_odd_cycles(const SimpleGraph& g);

/// Intersection of the squared edge primes (x_i, x_j)^2 with the ideals
/// (x_v^2 : v in C) over every induced odd cycle C. Equals the square of
/// the cover ideal; verify_p1 and the CLI check that identity rather than
/// assume it.
MonomialIdeal fhv_square_decomposition(const SimpleGraph& g);

struct P1Report {
  bool closed;   // J^2 integrally closed
  bool colon_ok; // (J^3 : J) = J^2
};

/// Both claims checked for the cover ideal J of g.
P1Report verify_p1(const SimpleGraph& g);

} // namespace mideal

#endif
