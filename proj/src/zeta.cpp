#include "primewave/zeta.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace primewave {

namespace {

// Euler-Maclaurin with B2, B4, B6 corrections after an explicit sum.
constexpr int kZetaTerms = 10000;

double zeta_minus_1_em(double s) {
  KahanSum acc;
  for (int n = kZetaTerms; n >= 2; --n) acc.add(std::pow(double(n), -s));
  double N = double(kZetaTerms);
  double ns = std::pow(N, -s);
  acc.add(ns * N / (s - 1.0));  // N^{1-s}/(s-1)
  acc.add(-0.5 * ns);
  double t1 = s * ns / N / 12.0;
  double t2 = -s * (s + 1.0) * (s + 2.0) * ns / (N * N * N) / 720.0;
  double t3 = s * (s + 1.0) * (s + 2.0) * (s + 3.0) * (s + 4.0) * ns /
              (N * N * N * N * N) / 30240.0;
  acc.add(t1);
  acc.add(t2);
  acc.add(t3);
  return acc.value();
}

// Gauss-Legendre nodes/weights on [-1,1], computed once per order by Newton
// iteration on the Legendre polynomial.
struct GaussRule {
  std::vector<double> nodes, weights;
};

GaussRule make_gauss_rule(int n) {
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    r.nodes[i] = x;
    r.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return r;
}

const GaussRule& gauss15() {
  static const GaussRule rule = make_gauss_rule(15);
  return rule;
}

double gl_panel(double a, double b, double (*f)(double)) {
  const GaussRule& r = gauss15();
  double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  KahanSum acc;
  for (size_t i = 0; i < r.nodes.size(); ++i)
    acc.add(r.weights[i] * f(mid + half * r.nodes[i]));
  return half * acc.value();
}

double adaptive_gl(double a, double b, double (*f)(double), double tol,
                   int depth) {
  double whole = gl_panel(a, b, f);
  double mid = 0.5 * (a + b);
  double split = gl_panel(a, mid, f) + gl_panel(mid, b, f);
  if (depth > 40 || std::abs(split - whole) <=
                        tol * std::max(1.0, std::abs(split))) {
    return split;
  }
  return adaptive_gl(a, mid, f, tol, depth + 1) +
         adaptive_gl(mid, b, f, tol, depth + 1);
}

double inv_log(double t) { return 1.0 / std::log(t); }

// li(2), the principal value of the integral from 0
constexpr double kLi2 = 1.0451637801174927848;

}  // namespace

double riemann_zeta_minus_1(double s) {
  require(s > 1.0, ErrorCode::domain, "riemann_zeta: requires s > 1");
  return zeta_minus_1_em(s);
}

double riemann_zeta(double s) { return 1.0 + riemann_zeta_minus_1(s); }

int moebius(uint64_t n) {
  require(n >= 1, ErrorCode::domain, "moebius: n must be >= 1");
  int sign = 1;
  for (uint64_t p = 2; p * p <= n; p += (p == 2) ? 1 : 2) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      sign = -sign;
    }
  }
  if (n > 1) sign = -sign;
  return sign;
}

double log_zeta_euler_tail(const PrimeTable& table, uint64_t N, double s) {
  require(s > 1.0, ErrorCode::domain, "log_zeta_euler_tail: requires s > 1");
  require(N <= table.limit, ErrorCode::insufficient_table,
          "log_zeta_euler_tail: N exceeds table limit");
  KahanSum acc;
  acc.add(std::log1p(riemann_zeta_minus_1(s)));
  for (uint64_t p : table.primes) {
    if (p > N) break;
    double ps = std::pow(double(p), -s);
    acc.add(std::log1p(-ps));
    // remaining factors are below the integral bound p^(1-s)/(s-1)
    if (ps * double(p) / (s - 1.0) < 1e-19) break;
  }
  return acc.value();
}

ZetaEvaluation prime_zeta(double alpha, const PrimeTable& table) {
  require(alpha > 1.0, ErrorCode::divergence,
          "prime_zeta: diverges for alpha <= 1");
  uint64_t N = table.limit;
  double partial = partial_prime_power_sum(alpha, table, N);

  // Moebius series truncated once alpha*n*ln2 > 60: terms are below double
  // epsilon from there on.
  KahanSum tail;
  const double ln2 = std::log(2.0);
  for (uint64_t n = 1; alpha * double(n) * ln2 <= 60.0; ++n) {
    int mu = moebius(n);
    if (mu == 0) continue;
    tail.add(double(mu) / double(n) *
             log_zeta_euler_tail(table, N, alpha * double(n)));
  }
  ZetaEvaluation out;
  out.value = partial + tail.value();
  out.truncation_bound = N;
  out.tail_estimate = tail.value();
  out.method = ZetaMethod::moebius_formula;
  return out;
}

double log_integral(double x) {
  require(x > 1.0, ErrorCode::domain, "log_integral: requires x > 1");
  if (x == 2.0) return kLi2;
  double sign = 1.0, lo = 2.0, hi = x;
  if (x < 2.0) {
    lo = x;
    hi = 2.0;
    sign = -1.0;
  }
  return kLi2 + sign * adaptive_gl(lo, hi, inv_log, 1e-12, 0);
}

double partial_prime_power_sum(double alpha, const PrimeTable& table,
                               uint64_t N) {
  require(N <= table.limit, ErrorCode::insufficient_table,
          "partial_prime_power_sum: N exceeds table limit");
  KahanSum acc;
  for (uint64_t p : table.primes) {
    if (p > N) break;
    acc.add(std::pow(double(p), -alpha));
  }
  return acc.value();
}

double mertens_constant() {
  // M = lim_{n->inf} sum_{p<=n} 1/p - ln ln n
  return 0.26149721284764278;
}

}  // namespace primewave
