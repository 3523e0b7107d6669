#include "hosoya/identities.hpp"

#include "hosoya/eigen.hpp"
#include "hosoya/errors.hpp"
#include "hosoya/families.hpp"
#include "hosoya/fib.hpp"
#include "hosoya/graphs.hpp"
#include "hosoya/matrix.hpp"
#include "hosoya/triangle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>

namespace hosoya {
namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

void require_backslash_params(std::int64_t m, std::int64_t n, std::int64_t t) {
  if (m < 1 || n < 1 || t < 1 || m > n || t > n) {
    throw DomainError("trace identity requires positive m, n, t with m <= n and t <= n");
  }
}

Rational trace_closed_rational(std::int64_t m, std::int64_t n, std::int64_t t) {
  const BigInt numerator = BigInt(t) * lucas(m + n) +
                           parity_sign(n - t) * fib(m - n + 2 * t - 1) +
                           parity_sign(m - 1) * fib(n - m + 1);
  return Rational(numerator, 5);
}

std::string dump(const Params& params, const Rational& lhs, const Rational& rhs) {
  std::string out;
  for (const auto& [name, value] : params) {
    out += name + "=" + std::to_string(value) + " ";
  }
  return out + "lhs=" + to_decimal(lhs) + " rhs=" + to_decimal(rhs);
}

IdentityCheck check_trace(std::int64_t m, std::int64_t n, std::int64_t t) {
  Params params{{"m", m}, {"n", n}, {"t", t}};
  const BigInt brute = convolution_brute(m, n, t);
  const BigInt matrix_trace = trace(backslash_matrix(m, n, t));
  if (brute != matrix_trace) {
    return make_check("trace", params, Rational(brute), Rational(matrix_trace),
                      "convolution sum disagrees with matrix trace");
  }
  return make_check("trace", std::move(params), trace_closed_rational(m, n, t),
                    Rational(brute));
}

IdentityCheck check_det_sign(std::int64_t n, std::int64_t lo) {
  return make_check("det_sign", {{"n", n}, {"lo", lo}},
                    Rational(det_sign_closed(n)), Rational(det(skew_band(n, lo))));
}

struct NormRelation {
  const char* name;
  bool holds;
};

NormReport compute_norm_report(std::int64_t n) {
  if (n < 1) throw DomainError("norm_report requires n >= 1");
  const ExactMatrix b = persymmetric(n);
  const RankOneFactor f = rank_one_factor(1, n, n);

  NormReport r;
  r.n = n;
  r.lambda = trace(matmul(transpose(b), b));
  r.sqrt_lambda = exact_sqrt(r.lambda).value_or(BigInt(-1));
  // Spectral radius of the rank-one Gram matrix (u.u) v v^T.
  r.two_norm = exact_sqrt(dot(f.u, f.u) * dot(f.v, f.v)).value_or(BigInt(-1));
  r.inf_norm = inf_norm(b);
  for (const auto& v : median(n).values()) r.sum_sq += v;
  r.sum_all = entry_sum(b);
  for (std::int64_t i = 1; i <= n; ++i) r.fib_sum += fib(i);
  for (std::size_t i = 0; i < b.rows(); ++i) r.antidiagonal_sum += b(i, b.rows() - 1 - i);
  return r;
}

std::vector<NormRelation> norm_relations(const NormReport& r) {
  const std::int64_t n = r.n;
  const ExactMatrix b = persymmetric(n);
  const BigInt fn_fn1 = fib(n) * fib(n + 1);
  const BigInt fn2_minus_1 = fib(n + 2) - 1;
  BigInt sum_sq_products = 0;
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      const BigInt p = fib(i) * fib(j);
      sum_sq_products += p * p;
    }
  }
  return {
      {"B^T B has exactly one nonzero eigenvalue",
       rank(matmul(transpose(b), b)) == 1},
      {"lambda = (antidiagonal sum)^2 = (F_n F_{n+1})^2",
       r.lambda == r.antidiagonal_sum * r.antidiagonal_sum &&
           r.lambda == fn_fn1 * fn_fn1},
      {"lambda = tr(B^T B) = sum (F_i F_j)^2", r.lambda == sum_sq_products},
      {"sqrt(lambda) = ||B||_2 = F_n F_{n+1}",
       r.sqrt_lambda == r.two_norm && r.two_norm == fn_fn1},
      {"sqrt(lambda) = sum F_i^2", r.sqrt_lambda == r.sum_sq},
      {"sqrt(sum F_i F_j) = sum F_i = F_{n+2} - 1 = ||B||_inf / F_n",
       r.sum_all == fn2_minus_1 * fn2_minus_1 && r.fib_sum == fn2_minus_1 &&
           r.inf_norm == fib(n) * fn2_minus_1},
      {"sqrt(lambda) = H_{2n,n}", r.sqrt_lambda == hosoya(2 * n, n)},
  };
}

// lhs counts the relations that hold, rhs is the number of relations.
IdentityCheck check_norm(std::int64_t n) {
  const auto relations = norm_relations(compute_norm_report(n));
  std::int64_t holding = 0;
  std::string failed;
  for (const auto& rel : relations) {
    if (rel.holds) {
      ++holding;
    } else {
      failed += std::string(failed.empty() ? "" : "; ") + rel.name;
    }
  }
  return make_check("norm", {{"n", n}}, Rational(holding),
                    Rational(static_cast<std::int64_t>(relations.size())),
                    failed);
}

IdentityCheck check_diag_trace(std::int64_t n) {
  const Rational closed(BigInt(n) * lucas(n + 1) + 2 * fib(n), 5);
  return make_check("diag_trace", {{"n", n}}, closed,
                    Rational(trace(persymmetric(n))));
}

std::vector<IdentityCheck> run_parallel(
    std::size_t count, const std::function<IdentityCheck(std::size_t)>& eval) {
  std::vector<IdentityCheck> results(count);
  if (count == 0) return results;
  const std::size_t workers = std::min<std::size_t>(
      count, std::max(1U, std::thread::hardware_concurrency()));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = eval(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  for (auto& r : results) {
    if (!r.equal() && r.detail.empty()) {
      r.detail = dump(r.params, r.lhs, r.rhs);
    }
  }
  return results;
}

}  // namespace

const char* to_string(Verdict verdict) {
  return verdict == Verdict::kEqual ? "equal" : "mismatch";
}

IdentityCheck make_check(std::string identity, Params params, Rational lhs,
                         Rational rhs, std::string detail) {
  IdentityCheck c;
  c.identity = std::move(identity);
  c.params = std::move(params);
  c.verdict = lhs == rhs ? Verdict::kEqual : Verdict::kMismatch;
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.detail = std::move(detail);
  return c;
}

BigInt trace_closed(std::int64_t m, std::int64_t n, std::int64_t t) {
  require_backslash_params(m, n, t);
  const Rational r = trace_closed_rational(m, n, t);
  if (boost::multiprecision::denominator(r) != 1) {
    throw IdentityViolation("trace closed form is not integral: " + to_decimal(r));
  }
  return boost::multiprecision::numerator(r);
}

BigInt convolution_brute(std::int64_t m, std::int64_t n, std::int64_t t) {
  // Plain iteration, independent of the memoized fib().
  auto f = [](std::int64_t k) {
    BigInt a = 0;
    BigInt b = 1;
    for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) {
      BigInt next = a + b;
      a = std::move(b);
      b = std::move(next);
    }
    return (k < 0 && (-k) % 2 == 0) ? BigInt(-a) : a;
  };
  BigInt sum = 0;
  for (std::int64_t i = 0; i < t; ++i) sum += f(m + i) * f(n - i);
  return sum;
}

IdentityCheck lemma1a(std::int64_t m, std::int64_t n, std::int64_t t) {
  BigInt lhs = 0;
  BigInt alternating = 0;
  for (std::int64_t i = 0; i <= t; ++i) {
    lhs += fib(m + i) * fib(n - i);
    alternating += parity_sign(n - i) * lucas(m - n + 2 * i);
  }
  const Rational rhs(BigInt(t + 1) * lucas(m + n) - alternating, 5);
  return make_check("lemma1a", {{"m", m}, {"n", n}, {"t", t}}, Rational(lhs), rhs);
}

IdentityCheck lemma1b(std::int64_t m, std::int64_t n, std::int64_t t) {
  BigInt lhs = 0;
  for (std::int64_t i = 0; i < t; ++i) {
    lhs += parity_sign(n - i - 1) * lucas(m - n + 2 * i);
  }
  const BigInt rhs = parity_sign(n - t) * fib(m - n + 2 * t - 1) +
                     parity_sign(m - 1) * fib(n - m + 1);
  return make_check("lemma1b", {{"m", m}, {"n", n}, {"t", t}}, Rational(lhs),
                    Rational(rhs));
}

NormReport norm_report(std::int64_t n) {
  NormReport r = compute_norm_report(n);
  for (const auto& rel : norm_relations(r)) {
    if (!rel.holds) {
      throw IdentityViolation("norm relation failed for n=" + std::to_string(n) +
                              ": " + rel.name);
    }
  }
  return r;
}

BigInt det_sign_closed(std::int64_t n) {
  if (n < 2) throw DomainError("det_sign_closed requires n >= 2");
  BigInt product = 1;
  for (std::int64_t i = 1; i <= n; ++i) {
    const BigInt f = fib(i);
    product *= f * f;
  }
  const bool positive = n % 4 == 0 || n % 4 == 1;
  return positive ? product : BigInt(-product);
}

const std::vector<std::string>& registered_identities() {
  static const std::vector<std::string> names{
      "trace", "lemma1a", "lemma1b", "det_sign", "norm", "diag_trace", "structure"};
  return names;
}

std::vector<IdentityCheck> verify_range(const RangeSpec& spec) {
  const std::int64_t max_n = spec.max_n;
  const std::int64_t max_t = spec.max_t.value_or(max_n);
  const std::string& name = spec.identity;
  const auto& known = registered_identities();
  if (std::find(known.begin(), known.end(), name) == known.end()) {
    throw UsageError("unknown identity '" + name + "'");
  }

  std::vector<std::array<std::int64_t, 3>> grid;
  std::function<IdentityCheck(const std::array<std::int64_t, 3>&)> eval;
  if (name == "trace") {
    for (std::int64_t n = 1; n <= max_n; ++n)
      for (std::int64_t m = 1; m <= n; ++m)
        for (std::int64_t t = 1; t <= std::min(n, max_t); ++t) grid.push_back({m, n, t});
    eval = [](const auto& p) { return check_trace(p[0], p[1], p[2]); };
  } else if (name == "lemma1a" || name == "lemma1b") {
    const std::int64_t t_min = name == "lemma1a" ? 0 : 1;
    for (std::int64_t m = 1; m <= max_n; ++m)
      for (std::int64_t n = 1; n <= max_n; ++n)
        for (std::int64_t t = t_min; t <= max_t; ++t) grid.push_back({m, n, t});
    if (name == "lemma1a") {
      eval = [](const auto& p) { return lemma1a(p[0], p[1], p[2]); };
    } else {
      eval = [](const auto& p) { return lemma1b(p[0], p[1], p[2]); };
    }
  } else if (name == "det_sign") {
    for (std::int64_t n = 2; n <= max_n; ++n)
      for (std::int64_t lo = 2; lo <= n + 1; ++lo) grid.push_back({n, lo, 0});
    eval = [](const auto& p) { return check_det_sign(p[0], p[1]); };
  } else if (name == "norm") {
    for (std::int64_t n = 1; n <= max_n; ++n) grid.push_back({n, 0, 0});
    eval = [](const auto& p) { return check_norm(p[0]); };
  } else if (name == "diag_trace") {
    for (std::int64_t n = 1; n <= max_n; ++n) grid.push_back({n, 0, 0});
    eval = [](const auto& p) { return check_diag_trace(p[0]); };
  } else {
    for (std::int64_t n = 2; n <= max_n; n += 3) grid.push_back({n, 0, 0});
    eval = [](const auto& p) { return structure_check(p[0]); };
  }
  return run_parallel(grid.size(), [&](std::size_t i) { return eval(grid[i]); });
}

}  // namespace hosoya
