#include "hosoya/graphs.hpp"

#include "hosoya/errors.hpp"
#include "hosoya/families.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hosoya {
namespace {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
  }

 private:
  std::vector<std::size_t> parent_;
};

bool is_complete_with_loops(const GraphSpec& g,
                            const std::vector<std::size_t>& vertices) {
  for (std::size_t a = 0; a < vertices.size(); ++a) {
    for (std::size_t b = a; b < vertices.size(); ++b) {
      if (!g.has_edge(vertices[a], vertices[b])) return false;
    }
  }
  return true;
}

}  // namespace

void GraphSpec::add_edge(std::size_t u, std::size_t v) {
  if (u < 1 || v < 1 || u > vertex_count || v > vertex_count) {
    throw DomainError("edge endpoint outside 1.." + std::to_string(vertex_count));
  }
  edges.emplace(std::min(u, v), std::max(u, v));
}

bool GraphSpec::has_edge(std::size_t u, std::size_t v) const {
  return edges.count({std::min(u, v), std::max(u, v)}) > 0;
}

ExactMatrix mod2_matrix(std::int64_t n) {
  if (n < 1) throw DomainError("mod2_matrix requires n >= 1");
  return reduce_mod(persymmetric(n), 2);
}

GraphSpec graph_from_adjacency(const ExactMatrix& adjacency) {
  if (!adjacency.is_square()) throw DomainError("adjacency matrix must be square");
  const std::size_t n = adjacency.rows();
  GraphSpec g{n, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const BigInt& x = adjacency(i, j);
      if (x != 0 && x != 1) throw DomainError("adjacency matrix must be 0/1");
      if (x != adjacency(j, i)) {
        throw DomainError("adjacency matrix is not symmetric at (" +
                          std::to_string(i + 1) + ", " + std::to_string(j + 1) + ")");
      }
      if (x == 1 && i <= j) g.add_edge(i + 1, j + 1);
    }
  }
  return g;
}

GraphSpec adjacency_graph(std::int64_t n) {
  const ExactMatrix m = mod2_matrix(n);
  try {
    return graph_from_adjacency(m);
  } catch (const DomainError& e) {
    throw DomainError("B(" + std::to_string(n) + ") mod 2 is not an undirected "
                      "adjacency matrix: " + e.what());
  }
}

ComponentSummary components(const GraphSpec& g) {
  DisjointSet sets(g.vertex_count + 1);
  std::vector<bool> touched(g.vertex_count + 1, false);
  for (const auto& [u, v] : g.edges) {
    sets.unite(u, v);
    touched[u] = true;
    touched[v] = true;
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t v = 1; v <= g.vertex_count; ++v) by_root[sets.find(v)].push_back(v);

  ComponentSummary summary;
  for (auto& [root, vertices] : by_root) {
    Component c;
    c.vertices = std::move(vertices);
    if (c.vertices.size() == 1 && !touched[c.vertices.front()]) {
      ++summary.isolated_count;
    } else {
      c.complete_with_loops = is_complete_with_loops(g, c.vertices);
    }
    summary.components.push_back(std::move(c));
  }
  return summary;
}

IdentityCheck structure_check(std::int64_t n) {
  if (n < 2 || n % 3 != 2) {
    throw DomainError("structure check covers n = 3k+2 only, got n = " +
                      std::to_string(n));
  }
  const std::int64_t k = (n - 2) / 3;
  const ComponentSummary summary = components(adjacency_graph(n));
  std::int64_t observed = -1;
  std::size_t nontrivial = 0;
  bool shaped = true;
  for (const auto& c : summary.components) {
    // A singleton is isolated exactly when it carries no loop.
    if (c.vertices.size() == 1 && !c.complete_with_loops) continue;
    ++nontrivial;
    if (!c.complete_with_loops) shaped = false;
    observed = static_cast<std::int64_t>(c.vertices.size());
  }
  if (!shaped || nontrivial != 1) observed = -1;
  std::string detail = "components=" + std::to_string(summary.components.size()) +
                       " isolated=" + std::to_string(summary.isolated_count);
  return make_check("structure", {{"n", n}, {"k", k}}, Rational(observed),
                    Rational(2 * (k + 1)), std::move(detail));
}

std::string to_dot(const GraphSpec& g, const std::string& name) {
  std::ostringstream out;
  out << "graph " << name << " {\n";
  for (std::size_t v = 1; v <= g.vertex_count; ++v) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace hosoya
