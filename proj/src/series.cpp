#include "primewave/series.hpp"

#include <algorithm>
#include <cmath>

#include "primewave/parallel.hpp"

namespace primewave {

namespace {

constexpr size_t kGridChunk = 2048;

struct KahanComplex {
  KahanSum re, im;
  void add(std::complex<double> z) {
    re.add(z.real());
    im.add(z.imag());
  }
  std::complex<double> value() const { return {re.value(), im.value()}; }
};

void check_table(const SeriesParams& params, const PrimeTable& table) {
  require(table.limit >= params.n_max, ErrorCode::insufficient_table,
          "series: prime table limit is below n_max");
}

}  // namespace

void SeriesParams::validate() const {
  require(alpha > 0.0 && beta > 0.0, ErrorCode::domain,
          "series: alpha and beta must be positive");
  require(n_max >= 2, ErrorCode::domain, "series: n_max must be >= 2");
}

double prime_power(uint64_t p, double beta) {
  if (beta == 1.0) return double(p);
  if (beta == 2.0) return double(p) * double(p);
  return std::pow(double(p), beta);
}

double frac_prime_power_cycles(uint64_t p, double beta, double t) {
  if (beta == 1.0) return frac_cycles_u64(p, t);
  if (beta == 2.0) return frac_cycles_u64(p * p, t);
  return frac_cycles(std::pow(double(p), beta), t);
}

std::complex<double> eval_v(const SeriesParams& params, const PrimeTable& table,
                            double t) {
  params.validate();
  check_table(params, table);
  KahanComplex acc;
  for (uint64_t p : table.primes) {
    if (p > params.n_max) break;
    double c = std::pow(double(p), -params.alpha);
    acc.add(c * unit_cycles(frac_prime_power_cycles(p, params.beta, t)));
  }
  return acc.value();
}

SampledGraph sample_graph(const SeriesParams& params, const PrimeTable& table,
                          double t_start, double t_end, size_t points) {
  params.validate();
  check_table(params, table);
  require(points >= 2, ErrorCode::domain, "sample_graph: points must be >= 2");
  require(t_start < t_end, ErrorCode::domain,
          "sample_graph: t_start must be < t_end");

  SampledGraph graph;
  graph.t_start = t_start;
  graph.t_end = t_end;
  graph.values.assign(points, {0.0, 0.0});
  double h = graph.spacing();

  size_t n_primes = table.count_upto(params.n_max);

  parallel_chunks(points, kGridChunk, [&](size_t begin, size_t end) {
    size_t len = end - begin;
    std::vector<double> re(len, 0.0), im(len, 0.0);
    std::vector<double> re_c(len, 0.0), im_c(len, 0.0);
    auto accumulate = [&](size_t j, double zr, double zi) {
      double y = zr - re_c[j];
      double s = re[j] + y;
      re_c[j] = (s - re[j]) - y;
      re[j] = s;
      y = zi - im_c[j];
      s = im[j] + y;
      im_c[j] = (s - im[j]) - y;
      im[j] = s;
    };
    for (size_t k = 0; k < n_primes; ++k) {
      uint64_t p = table.primes[k];
      double c = std::pow(double(p), -params.alpha);
      // rotate by exp(2 pi i p^beta h) per grid step, restarted each chunk;
      // four independent rotator lanes keep the multiply chains off the
      // latency path
      double zr[4], zi[4];
      for (int lane = 0; lane < 4; ++lane) {
        double tl = graph.t_at(begin + size_t(lane));
        auto z = c * unit_cycles(frac_prime_power_cycles(p, params.beta, tl));
        zr[lane] = z.real();
        zi[lane] = z.imag();
      }
      auto w4 =
          unit_cycles(frac_prime_power_cycles(p, params.beta, 4.0 * h));
      double wr = w4.real(), wi = w4.imag();
      size_t j = 0;
      for (; j + 4 <= len; j += 4) {
        for (int lane = 0; lane < 4; ++lane) {
          accumulate(j + size_t(lane), zr[lane], zi[lane]);
          double nr = zr[lane] * wr - zi[lane] * wi;
          zi[lane] = zr[lane] * wi + zi[lane] * wr;
          zr[lane] = nr;
        }
      }
      if (j < len) {
        auto z = std::complex<double>{zr[0], zi[0]};
        auto w1 = unit_cycles(frac_prime_power_cycles(p, params.beta, h));
        for (; j < len; ++j) {
          accumulate(j, z.real(), z.imag());
          z *= w1;
        }
      }
    }
    for (size_t j = 0; j < len; ++j) graph.values[begin + j] = {re[j], im[j]};
  });
  return graph;
}

std::complex<double> eval_v_derivative(const SeriesParams& params,
                                       const PrimeTable& table, double t,
                                       int order) {
  params.validate();
  check_table(params, table);
  require(order >= 1, ErrorCode::domain,
          "eval_v_derivative: order must be >= 1");
  KahanComplex acc;
  // i^m as exact quarter turns
  static const std::complex<double> quarter[4] = {
      {1.0, 0.0}, {0.0, 1.0}, {-1.0, 0.0}, {0.0, -1.0}};
  std::complex<double> rot = quarter[order & 3];
  for (uint64_t p : table.primes) {
    if (p > params.n_max) break;
    double w = prime_power(p, params.beta);
    double mag = std::pow(kTwoPi * w, double(order)) *
                 std::pow(double(p), -params.alpha);
    acc.add(mag * rot *
            unit_cycles(frac_prime_power_cycles(p, params.beta, t)));
  }
  return acc.value();
}

double weierstrass(double a, double b, int terms, double t) {
  require(a > 0.0 && a < 1.0, ErrorCode::domain,
          "weierstrass: a must be in (0,1)");
  require(b > 1.0, ErrorCode::domain, "weierstrass: b must be > 1");
  require(terms >= 1, ErrorCode::domain, "weierstrass: terms must be >= 1");
  KahanSum acc;
  double coeff = 1.0, freq = 1.0;
  for (int n = 0; n < terms; ++n) {
    require(std::isfinite(freq), ErrorCode::domain,
            "weierstrass: frequency b^n exceeds double range");
    acc.add(coeff * std::cos(kTwoPi * frac_cycles_rad(freq, t)));
    coeff *= a;
    freq *= b;
    if (coeff < 1e-300) break;  // below any representable contribution
  }
  return acc.value();
}

double riemann_series(double alpha, int terms, double t) {
  require(terms >= 1, ErrorCode::domain, "riemann_series: terms must be >= 1");
  require(uint64_t(terms) <= (uint64_t(1) << 26), ErrorCode::domain,
          "riemann_series: terms out of supported range");
  DD tau = div_two_pi(t);
  KahanSum acc;
  for (uint64_t n = 1; n <= uint64_t(terms); ++n) {
    uint64_t n2 = n * n;
    double extra = double(n2) * tau.lo;
    double f = wrap_unit(frac_cycles_u64(n2, tau.hi) +
                         (extra - std::floor(extra)));
    acc.add(std::pow(double(n), -alpha) * std::cos(kTwoPi * f));
  }
  return acc.value();
}

}  // namespace primewave
