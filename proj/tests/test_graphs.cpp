#include "doctest.h"

#include "hosoya/errors.hpp"
#include "hosoya/families.hpp"
#include "hosoya/graphs.hpp"

#include <map>
#include <sstream>
#include <string>

using hosoya::ExactMatrix;
using hosoya::GraphSpec;

namespace {

// Rows as printed in the reference table of B(n) mod 2.
ExactMatrix from_rows(const std::vector<std::string>& rows) {
  ExactMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j] - '0';
  }
  return m;
}

struct ParsedDot {
  std::string name;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t loops = 0;
};

// Just enough DOT to read back what to_dot writes.
ParsedDot parse_dot(const std::string& text) {
  ParsedDot p;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  std::istringstream head(line);
  std::string kw;
  std::string brace;
  head >> kw >> p.name >> brace;
  REQUIRE(kw == "graph");
  REQUIRE(brace == "{");
  while (std::getline(in, line)) {
    if (line == "}") break;
    REQUIRE(line.size() > 3);
    REQUIRE(line.back() == ';');
    std::istringstream body(line.substr(0, line.size() - 1));
    std::size_t u = 0;
    std::string op;
    std::size_t v = 0;
    body >> u;
    if (body >> op) {
      REQUIRE(op == "--");
      body >> v;
      ++p.edges;
      if (u == v) ++p.loops;
    } else {
      ++p.vertices;
    }
  }
  return p;
}

}  // namespace

TEST_CASE("reference matrices mod 2") {
  CHECK(hosoya::mod2_matrix(2) == from_rows({"11", "11"}));
  CHECK(hosoya::mod2_matrix(5) == from_rows({"11011", "11011", "00000", "11011", "11011"}));
  CHECK(hosoya::mod2_matrix(8) == from_rows({"11011011", "11011011", "00000000", "11011011",
                                             "11011011", "00000000", "11011011", "11011011"}));
  CHECK(hosoya::mod2_matrix(11) ==
        from_rows({"11011011011", "11011011011", "00000000000", "11011011011", "11011011011",
                   "00000000000", "11011011011", "11011011011", "00000000000", "11011011011",
                   "11011011011"}));
}

TEST_CASE("mod 2 matrix agrees with reducing the integer matrix") {
  for (std::int64_t n = 1; n <= 40; ++n) {
    const auto m = hosoya::mod2_matrix(n);
    CHECK(m == hosoya::reduce_mod(hosoya::persymmetric(n), 2));
    for (std::int64_t i = 1; i <= n; ++i) {
      for (std::int64_t j = 1; j <= n; ++j) {
        const bool zero = i % 3 == 0 || (n - j + 1) % 3 == 0;
        CHECK(m(i - 1, j - 1) == (zero ? 0 : 1));
      }
    }
  }
  // n = 3: third row zero, first column zero.
  const auto m3 = hosoya::mod2_matrix(3);
  CHECK(m3 == from_rows({"011", "011", "000"}));
}

TEST_CASE("adjacency graph scope") {
  CHECK(hosoya::adjacency_graph(1).edges.size() == 1);
  CHECK_THROWS_AS(hosoya::adjacency_graph(3), hosoya::DomainError);
  CHECK_THROWS_AS(hosoya::adjacency_graph(4), hosoya::DomainError);
  CHECK_THROWS_AS(hosoya::graph_from_adjacency(ExactMatrix{{0, 2}, {2, 0}}), hosoya::DomainError);
  CHECK_THROWS_AS(hosoya::graph_from_adjacency(ExactMatrix(2, 3)), hosoya::DomainError);
}

TEST_CASE("components") {
  auto s = hosoya::components(hosoya::adjacency_graph(5));
  REQUIRE(s.components.size() == 2);
  CHECK(s.components[0].vertices == std::vector<std::size_t>{1, 2, 4, 5});
  CHECK(s.components[0].complete_with_loops);
  CHECK(s.isolated_count == 1);

  s = hosoya::components(hosoya::adjacency_graph(11));
  CHECK(s.components.size() == 4);
  CHECK(s.components[0].vertices.size() == 8);
  CHECK(s.isolated_count == 3);

  GraphSpec empty;
  empty.vertex_count = 3;
  s = hosoya::components(empty);
  CHECK(s.components.size() == 3);
  CHECK(s.isolated_count == 3);

  // A single looped vertex is complete with loops, not isolated.
  GraphSpec loop;
  loop.vertex_count = 1;
  loop.add_edge(1, 1);
  s = hosoya::components(loop);
  CHECK(s.components[0].complete_with_loops);
  CHECK(s.isolated_count == 0);

  // A path is connected but not complete.
  GraphSpec path;
  path.vertex_count = 3;
  path.add_edge(1, 2);
  path.add_edge(3, 2);
  CHECK(path.has_edge(2, 3));
  s = hosoya::components(path);
  REQUIRE(s.components.size() == 1);
  CHECK_FALSE(s.components[0].complete_with_loops);
}

TEST_CASE("components partition the vertex set") {
  for (std::int64_t n = 2; n <= 50; n += 3) {
    const auto g = hosoya::adjacency_graph(n);
    const auto s = hosoya::components(g);
    std::vector<int> hits(g.vertex_count + 1, 0);
    for (const auto& c : s.components) {
      for (auto v : c.vertices) ++hits[v];
    }
    for (std::size_t v = 1; v <= g.vertex_count; ++v) CHECK(hits[v] == 1);
  }
}

TEST_CASE("structure check") {
  for (std::int64_t k = 0; k <= 30; ++k) {
    const auto c = hosoya::structure_check(3 * k + 2);
    CHECK(c.equal());
    CHECK(c.rhs == 2 * (k + 1));
  }
  const auto c = hosoya::structure_check(20);
  CHECK(c.lhs == 14);
  CHECK(c.detail == "components=7 isolated=6");
  CHECK_THROWS_AS(hosoya::structure_check(7), hosoya::DomainError);
  CHECK_THROWS_AS(hosoya::structure_check(1), hosoya::DomainError);
}

TEST_CASE("dot export") {
  CHECK(hosoya::to_dot(hosoya::adjacency_graph(2), "K") ==
        "graph K {\n  1;\n  2;\n  1 -- 1;\n  1 -- 2;\n  2 -- 2;\n}\n");
  GraphSpec one;
  one.vertex_count = 1;
  CHECK(hosoya::to_dot(one) == "graph G {\n  1;\n}\n");

  for (std::int64_t n = 2; n <= 20; n += 3) {
    const auto g = hosoya::adjacency_graph(n);
    const auto parsed = parse_dot(hosoya::to_dot(g, "B"));
    const std::size_t clique = 2 * static_cast<std::size_t>((n - 2) / 3 + 1);
    CHECK(parsed.name == "B");
    CHECK(parsed.vertices == static_cast<std::size_t>(n));
    CHECK(parsed.edges == g.edges.size());
    CHECK(parsed.edges == clique * (clique + 1) / 2);
    CHECK(parsed.loops == clique);
  }
}
