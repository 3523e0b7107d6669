#include "hosoya/format.hpp"

#include <algorithm>
#include <sstream>

namespace hosoya::format {
namespace {

Json decimal_array(std::span<const BigInt> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(to_decimal(v));
  return out;
}

std::string join(std::span<const BigInt> values, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += to_decimal(values[i]);
  }
  return out;
}

std::string pad_left(const std::string& s, std::size_t width) {
  return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string triangle_text(const std::vector<std::vector<BigInt>>& rows) {
  std::size_t width = 1;
  for (const auto& r : rows) {
    for (const auto& v : r) width = std::max(width, to_decimal(v).size());
  }
  // Each cell takes `width` columns plus one separator; a row is shifted
  // half a cell per missing entry.
  const std::size_t cell = width + 1;
  std::ostringstream out;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    std::string line((rows.size() - 1 - r) * cell / 2, ' ');
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      if (k) line += ' ';
      line += pad_left(to_decimal(rows[r][k]), width);
    }
    out << line << '\n';
  }
  return out.str();
}

std::string triangle_csv(const std::vector<std::vector<BigInt>>& rows) {
  std::string out;
  for (const auto& r : rows) out += join(r, ",") + "\n";
  return out;
}

Json triangle_json(const std::vector<std::vector<BigInt>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(decimal_array(r));
  return out;
}

std::string matrix_text(const ExactMatrix& m) {
  std::size_t width = 1;
  for (const auto& v : m.entries()) width = std::max(width, to_decimal(v).size());
  std::ostringstream out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << pad_left(to_decimal(m(i, j)), width);
    }
    out << '\n';
  }
  return out.str();
}

std::string matrix_csv(const ExactMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) out += join(m.row(i), ",") + "\n";
  return out;
}

Json matrix_json(const ExactMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) entries.push_back(decimal_array(m.row(i)));
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = std::move(entries);
  return out;
}

Json surd_json(const SurdValue& value) {
  if (auto v = value.integer_value()) return to_decimal(*v);
  Json out;
  out["sign"] = value.sign();
  out["radicand"] = to_decimal(value.radicand());
  return out;
}

Json eigen_json(const std::vector<EigenPair>& pairs) {
  Json out = Json::array();
  for (const auto& p : pairs) {
    Json vectors = Json::array();
    for (const auto& w : p.eigenvectors) vectors.push_back(decimal_array(w));
    Json item;
    item["value"] = surd_json(p.value);
    item["multiplicity"] = p.algebraic_multiplicity;
    item["eigenvectors"] = std::move(vectors);
    out.push_back(std::move(item));
  }
  return out;
}

std::string eigen_text(const std::vector<EigenPair>& pairs) {
  std::ostringstream out;
  for (const auto& p : pairs) {
    out << "lambda = " << p.value.to_string() << "  (multiplicity "
        << p.algebraic_multiplicity << ")\n";
    for (const auto& w : p.eigenvectors) out << "  [" << join(w, ", ") << "]\n";
  }
  return out.str();
}

Json check_json(const IdentityCheck& check) {
  Json params = Json::object();
  for (const auto& [name, value] : check.params) params[name] = value;
  Json out;
  out["identity"] = check.identity;
  out["params"] = std::move(params);
  out["lhs"] = to_decimal(check.lhs);
  out["rhs"] = to_decimal(check.rhs);
  out["verdict"] = to_string(check.verdict);
  if (!check.detail.empty()) out["detail"] = check.detail;
  return out;
}

std::string checks_summary_text(const std::string& identity,
                                const std::vector<IdentityCheck>& checks,
                                bool detail) {
  const auto equal = static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const auto& c) { return c.equal(); }));
  std::ostringstream out;
  out << "identity  total  equal  mismatch\n";
  out << identity << "  " << checks.size() << "  " << equal << "  "
      << checks.size() - equal << '\n';
  for (const auto& c : checks) {
    if (c.equal() && !detail) continue;
    out << to_string(c.verdict);
    for (const auto& [name, value] : c.params) out << ' ' << name << '=' << value;
    out << " lhs=" << to_decimal(c.lhs) << " rhs=" << to_decimal(c.rhs);
    if (!c.detail.empty() && !c.equal()) out << " (" << c.detail << ')';
    out << '\n';
  }
  return out.str();
}

Json checks_json(const std::string& identity,
                 const std::vector<IdentityCheck>& checks, bool detail) {
  Json list = Json::array();
  std::size_t equal = 0;
  for (const auto& c : checks) {
    if (c.equal()) ++equal;
    if (detail || !c.equal()) list.push_back(check_json(c));
  }
  Json out;
  out["identity"] = identity;
  out["total"] = checks.size();
  out["equal"] = equal;
  out["mismatch"] = checks.size() - equal;
  out["checks"] = std::move(list);
  return out;
}

Json components_json(const GraphSpec& g, const ComponentSummary& summary) {
  Json comps = Json::array();
  for (const auto& c : summary.components) {
    Json item;
    item["vertices"] = c.vertices;
    item["complete_with_loops"] = c.complete_with_loops;
    comps.push_back(std::move(item));
  }
  Json out;
  out["vertex_count"] = g.vertex_count;
  out["edge_count"] = g.edges.size();
  out["components"] = std::move(comps);
  out["isolated_count"] = summary.isolated_count;
  return out;
}

std::string components_text(const GraphSpec& g, const ComponentSummary& summary) {
  std::ostringstream out;
  out << "vertices " << g.vertex_count << ", edges " << g.edges.size()
      << ", components " << summary.components.size() << ", isolated "
      << summary.isolated_count << '\n';
  for (const auto& c : summary.components) {
    if (c.vertices.size() == 1 && !c.complete_with_loops) continue;
    out << "component {";
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
      out << (i ? ", " : "") << c.vertices[i];
    }
    out << "} size " << c.vertices.size()
        << (c.complete_with_loops ? " complete with loops" : " not complete") << '\n';
  }
  return out.str();
}

Json norm_json(const NormReport& r) {
  Json out;
  out["n"] = r.n;
  out["lambda"] = to_decimal(r.lambda);
  out["sqrt_lambda"] = to_decimal(r.sqrt_lambda);
  out["two_norm"] = to_decimal(r.two_norm);
  out["inf_norm"] = to_decimal(r.inf_norm);
  out["sum_sq"] = to_decimal(r.sum_sq);
  out["sum_all"] = to_decimal(r.sum_all);
  out["fib_sum"] = to_decimal(r.fib_sum);
  out["antidiagonal_sum"] = to_decimal(r.antidiagonal_sum);
  return out;
}

}  // namespace hosoya::format
