#pragma once

#include "hosoya/check.hpp"
#include "hosoya/matrix.hpp"

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hosoya {

// Undirected graph on vertices 1..vertex_count. Edges are stored as
// ordered pairs (u, v) with u <= v; u == v is a loop.
struct GraphSpec {
  std::size_t vertex_count = 0;
  std::set<std::pair<std::size_t, std::size_t>> edges;

  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
};

struct Component {
  std::vector<std::size_t> vertices;  // ascending
  bool complete_with_loops = false;
};

struct ComponentSummary {
  // Ordered by smallest vertex; together they partition 1..vertex_count.
  std::vector<Component> components;
  // Vertices with no incident edge, loops included.
  std::size_t isolated_count = 0;
};

// B(n) mod 2. Entry (i,j) is zero iff 3 | i or 3 | (n-j+1).
ExactMatrix mod2_matrix(std::int64_t n);

// Undirected graph of a symmetric 0/1 matrix. Throws DomainError on an
// asymmetric or non-binary matrix.
GraphSpec graph_from_adjacency(const ExactMatrix& adjacency);

// Graph of B(n) mod 2. The matrix is symmetric only for n = 1 and
// n = 2 (mod 3); other n raise DomainError.
GraphSpec adjacency_graph(std::int64_t n);

ComponentSummary components(const GraphSpec& g);

/// For n = 3k+2, compares the graph of B(n) mod 2 with a complete graph on
/// 2(k+1) vertices, every vertex looped, plus k isolated vertices.
/// lhs is the size of the single complete-with-loops component when all
/// remaining vertices are isolated, -1 when the graph has any other shape;
/// rhs is 2(k+1). Throws DomainError unless n = 2 (mod 3).
IdentityCheck structure_check(std::int64_t n);

// DOT `graph` block with one vertex statement per vertex, then edges in
// ascending (u, v) order, LF line endings.
std::string to_dot(const GraphSpec& g, const std::string& name = "G");

}  // namespace hosoya
