#include "hosoya/cli.hpp"

#include "hosoya/eigen.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/families.hpp"
#include "hosoya/format.hpp"
#include "hosoya/graphs.hpp"
#include "hosoya/identities.hpp"
#include "hosoya/triangle.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <ostream>

namespace hosoya::cli {
namespace {

struct Options {
  std::string format = "text";
  std::vector<std::string> seed;
  std::string modulus;
  bool check = false;
  bool detail = false;
  std::int64_t max_n = 12;
  std::int64_t max_t = 0;
  std::int64_t count = 0;
  std::string name;
  std::vector<std::int64_t> params;
};

SeedPair parse_seed(const std::vector<std::string>& seed) {
  if (seed.empty()) return SeedPair::classic();
  auto a = parse_decimal(seed.at(0));
  auto b = parse_decimal(seed.at(1));
  if (!a || !b) throw UsageError("--seed expects two integers");
  try {
    return SeedPair(*a, *b);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

void expect_params(const Options& o, std::size_t count, const char* usage) {
  if (o.params.size() != count) {
    throw UsageError(o.name + " expects " + usage);
  }
}

void require_classic(const Options& o) {
  if (!o.seed.empty()) throw UsageError("--seed applies to the backslash family only");
}

ExactMatrix build_matrix(const Options& o) {
  const auto& p = o.params;
  if (o.name == "backslash") {
    expect_params(o, 3, "parameters m n t");
    return backslash_matrix(p[0], p[1], p[2], parse_seed(o.seed));
  }
  require_classic(o);
  if (o.name == "persymmetric") {
    expect_params(o, 1, "parameter n");
    return persymmetric(p[0]);
  }
  if (o.name == "antidiagonal") {
    expect_params(o, 1, "parameter n");
    return antidiagonal_A(p[0]);
  }
  if (o.name == "skewband") {
    expect_params(o, 2, "parameters n lo");
    return skew_band(p[0], p[1]);
  }
  throw UsageError("unknown matrix family '" + o.name +
                   "' (backslash, persymmetric, antidiagonal, skewband)");
}

void emit_json(std::ostream& out, const format::Json& j) {
  out << j.dump(2) << '\n';
}

int cmd_triangle(const Options& o, std::ostream& out) {
  if (o.count < 1) throw UsageError("triangle needs ROWS >= 1");
  const SeedPair seed = parse_seed(o.seed);
  std::vector<std::vector<BigInt>> rows;
  for (std::int64_t r = 1; r <= o.count; ++r) rows.push_back(row(r, seed).values());
  if (o.format == "json") {
    emit_json(out, format::triangle_json(rows));
  } else if (o.format == "csv") {
    out << format::triangle_csv(rows);
  } else {
    out << format::triangle_text(rows);
  }
  return kExitOk;
}

int cmd_matrix(const Options& o, std::ostream& out) {
  ExactMatrix m = build_matrix(o);
  if (!o.modulus.empty()) {
    auto modulus = parse_decimal(o.modulus);
    if (!modulus || *modulus < 2) throw UsageError("--mod expects an integer >= 2");
    m = reduce_mod(m, *modulus);
  }
  if (o.format == "json") {
    emit_json(out, format::matrix_json(m));
  } else if (o.format == "csv") {
    out << format::matrix_csv(m);
  } else {
    out << format::matrix_text(m);
  }
  return kExitOk;
}

int cmd_eigen(const Options& o, std::ostream& out) {
  const auto& p = o.params;
  std::vector<EigenPair> pairs;
  if (o.name == "backslash") {
    expect_params(o, 3, "parameters m n t");
    pairs = rank_one_eigen(p[0], p[1], p[2], parse_seed(o.seed));
  } else {
    require_classic(o);
    expect_params(o, 1, "parameter n");
    if (o.name == "persymmetric") {
      pairs = rank_one_eigen(1, p[0], p[0]);
    } else if (o.name == "antidiagonal") {
      pairs = antidiagonal_eigen(p[0]);
    } else if (o.name == "gram") {
      pairs = {gram_eigen(p[0]).gram};
    } else if (o.name == "hadamard") {
      pairs = {gram_eigen(p[0]).hadamard};
    } else {
      throw UsageError("unknown eigen family '" + o.name +
                       "' (backslash, persymmetric, antidiagonal, gram, hadamard)");
    }
  }
  if (o.format == "json") {
    emit_json(out, format::eigen_json(pairs));
  } else {
    out << format::eigen_text(pairs);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  RangeSpec spec{o.name, o.max_n, std::nullopt};
  if (o.max_t > 0) spec.max_t = o.max_t;
  const auto checks = verify_range(spec);
  if (o.format == "json") {
    emit_json(out, format::checks_json(o.name, checks, o.detail));
  } else {
    out << format::checks_summary_text(o.name, checks, o.detail);
  }
  const bool all_equal = std::all_of(checks.begin(), checks.end(),
                                     [](const auto& c) { return c.equal(); });
  return all_equal ? kExitOk : kExitMismatch;
}

int cmd_graph(const Options& o, std::ostream& out) {
  const std::int64_t n = o.count;
  if (n < 1) throw UsageError("graph needs N >= 1");
  if (o.check) {
    if (n % 3 != 2) {
      throw UsageError("--check covers n = 3k+2 only (the complete-graph "
                       "structure is stated for those n); got " + std::to_string(n));
    }
    const IdentityCheck c = structure_check(n);
    if (o.format == "json") {
      emit_json(out, format::check_json(c));
    } else {
      const std::int64_t k = (n - 2) / 3;
      out << "n=" << n << " k=" << k << ": " << to_string(c.verdict)
          << " (complete-with-loops size " << to_decimal(c.lhs) << ", expected "
          << to_decimal(c.rhs) << ", " << k << " isolated expected; " << c.detail
          << ")\n";
    }
    return c.equal() ? kExitOk : kExitMismatch;
  }
  const GraphSpec g = adjacency_graph(n);
  if (o.format == "dot") {
    out << to_dot(g, "B" + std::to_string(n) + "_mod2");
  } else if (o.format == "json") {
    emit_json(out, format::components_json(g, components(g)));
  } else {
    out << format::components_text(g, components(g));
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact matrices, spectra and identities of the Hosoya triangle", "hosoya"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&o](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember(std::move(allowed)));
  };
  auto add_seed = [&o](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Generalized seed a b (G_1 = a, G_2 = b)")
        ->expected(2)
        ->allow_extra_args(false);
  };

  auto* triangle = app.add_subcommand("triangle", "Print the first ROWS rows");
  triangle->add_option("rows", o.count, "Number of rows")->required();
  add_seed(triangle);
  add_format(triangle, {"text", "json", "csv"});

  auto* matrix = app.add_subcommand("matrix", "Construct a matrix family member");
  matrix->add_option("family", o.name, "backslash | persymmetric | antidiagonal | skewband")
      ->required();
  matrix->add_option("params", o.params, "Family parameters")->required();
  add_seed(matrix);
  matrix->add_option("--mod", o.modulus, "Reduce entries modulo P");
  add_format(matrix, {"text", "json", "csv"});

  auto* eigen = app.add_subcommand("eigen", "Closed-form eigenpairs");
  eigen->add_option("family", o.name,
                    "backslash | persymmetric | antidiagonal | gram | hadamard")
      ->required();
  eigen->add_option("params", o.params, "Family parameters")->required();
  add_seed(eigen);
  add_format(eigen, {"text", "json"});

  auto* verify = app.add_subcommand("verify", "Sweep an identity over a parameter grid");
  verify->add_option("identity", o.name, "Identity name")->required();
  verify->add_option("--max-n", o.max_n, "Largest n in the sweep")
      ->check(CLI::Range(std::int64_t{0}, std::int64_t{200}));
  verify->add_option("--max-t", o.max_t, "Largest t in the sweep")
      ->check(CLI::Range(std::int64_t{1}, std::int64_t{200}));
  verify->add_flag("--detail", o.detail, "List every check, not only mismatches");
  add_format(verify, {"text", "json"});

  auto* graph = app.add_subcommand("graph", "Graph of B(N) mod 2");
  graph->add_option("n", o.count, "Matrix size")->required();
  graph->add_flag("--check", o.check, "Check the complete-graph structure (N = 3k+2)");
  add_format(graph, {"text", "json", "dot"});

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "hosoya: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (triangle->parsed()) return cmd_triangle(o, out);
    if (matrix->parsed()) return cmd_matrix(o, out);
    if (eigen->parsed()) return cmd_eigen(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    return cmd_graph(o, out);
  } catch (const UsageError& e) {
    err << "hosoya: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "hosoya: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "hosoya: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace hosoya::cli
