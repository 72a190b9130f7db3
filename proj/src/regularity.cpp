#include "primewave/regularity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "primewave/parallel.hpp"

namespace primewave {

namespace {

// Support trimmed where the remaining |phi| mass is below target; 5e-11 keeps
// the tabulated fhat(0) within 1e-10 of 1 on top of the 1e-8 mass requirement.
constexpr double kTableStep = 1.0 / 64.0;
constexpr double kTableCap = 480.0;
constexpr double kTailMassTarget = 5e-11;

// least squares slope of y against x with the slope's standard error
struct FitResult {
  double slope = 0.0, intercept = 0.0, slope_se = 0.0, r2 = 1.0;
};

FitResult fit_line(const std::vector<double>& x, const std::vector<double>& y) {
  size_t n = x.size();
  double mx = 0.0, my = 0.0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  FitResult f;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  double ss_res = 0.0;
  for (size_t i = 0; i < n; ++i) {
    double r = y[i] - (f.intercept + f.slope * x[i]);
    ss_res += r * r;
  }
  f.r2 = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
  f.slope_se = (n > 2) ? std::sqrt(ss_res / double(n - 2) / sxx) : 0.0;
  return f;
}

}  // namespace

double GaborWindow::fhat_bump(double y) {
  double y2 = y * y;
  if (y2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - y2));
}

GaborWindow::GaborWindow() : step_(kTableStep), cap_(kTableCap) {
  // phi(t) = (1/pi) * int_0^1 fhat(u) cos(u t) du, composite Gauss-Legendre
  // with panel count tied to the oscillation t.
  constexpr int kGaussOrder = 12;
  static double nodes[kGaussOrder], weights[kGaussOrder];
  for (int i = 0; i < kGaussOrder; ++i) {
    double x = std::cos(M_PI * (i + 0.75) / (kGaussOrder + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= kGaussOrder; ++k) {
        double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = pk;
      }
      dp = kGaussOrder * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[i] = x;
    weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }

  // Panel edges: uniform spacing resolving cos(u t) at the largest t, merged
  // with geometric refinement into the bump's boundary layer at u = 1.
  std::vector<double> edges;
  double osc_step = 4.0 / cap_;
  for (double e = 0.0; e < 1.0; e += osc_step) edges.push_back(e);
  for (int k = 0; k < 24; ++k) edges.push_back(1.0 - 0.1 * std::ldexp(1.0, -k));
  edges.push_back(1.0);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end(),
                          [](double a, double b) { return b - a < 1e-9; }),
              edges.end());
  if (edges.back() < 1.0) edges.push_back(1.0);

  std::vector<double> qu, qw;  // fixed nodes and weight * bump products
  for (size_t pa = 0; pa + 1 < edges.size(); ++pa) {
    double mid = 0.5 * (edges[pa] + edges[pa + 1]);
    double half = 0.5 * (edges[pa + 1] - edges[pa]);
    for (int g = 0; g < kGaussOrder; ++g) {
      double u = mid + half * nodes[g];
      double w = half * weights[g] * fhat_bump(u);
      if (w != 0.0) {
        qu.push_back(u);
        qw.push_back(w);
      }
    }
  }

  size_t n = size_t(cap_ / step_) + 1;
  table_.assign(n, 0.0);
  parallel_chunks(n, 512, [&](size_t begin, size_t end) {
    for (size_t i = begin; i < end; ++i) {
      double t = double(i) * step_;
      KahanSum acc;
      for (size_t g = 0; g < qu.size(); ++g)
        acc.add(qw[g] * std::cos(qu[g] * t));
      table_[i] = acc.value() / M_PI;
    }
  });

  // trim the support to where the remaining |phi| mass drops below target
  tail_mass_.assign(n + 1, 0.0);
  // crude allowance for mass beyond the tabulated cap
  double beyond = std::abs(table_[n - 1]) * (std::sqrt(2.0 * cap_) + 1.0);
  tail_mass_[n] = beyond;
  for (size_t i = n; i-- > 0;)
    tail_mass_[i] = tail_mass_[i + 1] + 2.0 * std::abs(table_[i]) * step_;
  support_ = cap_;
  for (size_t i = 0; i < n; ++i) {
    if (tail_mass_[i] < kTailMassTarget) {
      support_ = double(i) * step_;
      break;
    }
  }
}

double GaborWindow::effective_support(double mass_tol) const {
  for (size_t i = 0; i < tail_mass_.size(); ++i)
    if (tail_mass_[i] < mass_tol)
      return std::min(double(i) * step_, support_);
  return support_;
}

const GaborWindow& GaborWindow::instance() {
  static const GaborWindow w;
  return w;
}

double GaborWindow::phi(double t) const {
  t = std::abs(t);
  if (t >= support_) return 0.0;
  double u = t / step_;
  size_t i = size_t(u);
  if (i + 2 >= table_.size()) return 0.0;
  double x = u - double(i);
  // 4-point cubic on the uniform grid; evenness supplies the i=0 neighbor
  double ym = (i == 0) ? table_[1] : table_[i - 1];
  double y0 = table_[i], y1 = table_[i + 1], y2 = table_[i + 2];
  double a0 = y0;
  double a1 = 0.5 * (y1 - ym);
  double a2 = ym - 2.5 * y0 + 2.0 * y1 - 0.5 * y2;
  double a3 = 0.5 * (y2 - ym) + 1.5 * (y0 - y1);
  return ((a3 * x + a2) * x + a1) * x + a0;
}

std::complex<double> gabor_transform(const SampledGraph& f, double a, double b,
                                     double lambda) {
  require(a > 0.0 && a <= 1.0, ErrorCode::domain,
          "gabor_transform: scale a must be in (0,1]");
  require(f.points() >= 2, ErrorCode::domain,
          "gabor_transform: graph too small");
  const GaborWindow& win = GaborWindow::instance();
  double h = f.spacing();
  double max_h = kTwoPi / (10.0 * std::abs(lambda));
  if (h >= max_h) {
    size_t needed =
        size_t(std::ceil((f.t_end - f.t_start) / max_h)) + 1;
    fail(ErrorCode::resolution,
         "gabor_transform: grid under-resolved for lambda; need >= " +
             std::to_string(needed) + " points over the sampled range");
  }
  // the graph must cover the window out to where the neglected mass is
  // irrelevant; integration then uses whatever part of the support is sampled
  double half_needed = a * win.effective_support(1e-7);
  require(b - half_needed >= f.t_start - 0.5 * h &&
              b + half_needed <= f.t_end + 0.5 * h,
          ErrorCode::resolution,
          "gabor_transform: window support exceeds the sampled range");
  double half = a * win.support();

  double nu = lambda / kTwoPi;  // probe frequency in cycle units
  size_t j0 = (b - half <= f.t_start)
                  ? 0
                  : size_t(std::ceil((b - half - f.t_start) / h));
  size_t j1 = (b + half >= f.t_end)
                  ? f.points() - 1
                  : size_t(std::floor((b + half - f.t_start) / h));
  if (j1 >= f.points()) j1 = f.points() - 1;
  if (j0 > j1) return {0.0, 0.0};

  size_t count = j1 - j0 + 1;
  size_t nchunks = (count + 8191) / 8192;
  std::vector<std::complex<double>> partial(nchunks, {0.0, 0.0});
  parallel_chunks(count, 8192, [&](size_t begin, size_t end) {
    KahanSum re, im;
    for (size_t idx = begin; idx < end; ++idx) {
      size_t j = j0 + idx;
      double t = f.t_at(j);
      double w = win.phi((t - b) / a);
      if (w == 0.0) continue;
      if (j == j0 || j == j1) w *= 0.5;  // trapezoid ends
      std::complex<double> rot = unit_cycles(frac_cycles(nu, -t));
      std::complex<double> term = f.values[j] * rot * w;
      re.add(term.real());
      im.add(term.imag());
    }
    partial[begin / 8192] = {re.value(), im.value()};
  });
  KahanSum re, im;
  for (auto& z : partial) {
    re.add(z.real());
    im.add(z.imag());
  }
  return std::complex<double>{re.value(), im.value()} * (h / a);
}

double theta_gap(const PrimeTable& table, double beta, uint64_t m) {
  require(m >= 1 && m + 1 < table.count(), ErrorCode::domain,
          "theta_gap: m must have neighbors on both sides");
  double lo = prime_power(table.primes[m - 1], beta);
  double mid = prime_power(table.primes[m], beta);
  double hi = prime_power(table.primes[m + 1], beta);
  return std::min(mid - lo, hi - mid);
}

HolderEstimate holder_exponent_oscillation(const SampledGraph& f, double t0,
                                           std::vector<double> scales) {
  require(f.points() >= 8, ErrorCode::domain,
          "holder_exponent_oscillation: graph too small");
  double h = f.spacing();
  if (scales.empty()) {
    for (int k = 4; k <= 12; ++k) scales.push_back(std::ldexp(1.0, -k));
  }
  std::vector<double> usable;
  for (double eps : scales) {
    if (eps < 4.0 * h) continue;  // needs a resolvable window
    if (t0 - eps < f.t_start || t0 + eps > f.t_end) continue;
    usable.push_back(eps);
  }
  std::sort(usable.begin(), usable.end());
  require(usable.size() >= 4 &&
              usable.back() / usable.front() >= 31.6227766,
          ErrorCode::domain,
          "holder_exponent_oscillation: need >= 4 scales spanning >= 1.5 "
          "decades within the sampled range");

  HolderEstimate est;
  est.location = t0;
  est.method = HolderMethod::oscillation;

  std::vector<double> lx, ly;
  for (double eps : usable) {
    size_t lo = size_t(std::ceil((t0 - eps - f.t_start) / h));
    size_t hi = size_t(std::floor((t0 + eps - f.t_start) / h));
    hi = std::min(hi, f.points() - 1);
    double vmin = f.values[lo].real(), vmax = vmin;
    for (size_t j = lo + 1; j <= hi; ++j) {
      double v = f.values[j].real();
      vmin = std::min(vmin, v);
      vmax = std::max(vmax, v);
    }
    double osc = vmax - vmin;
    if (osc > 0.0) {
      lx.push_back(std::log(eps));
      ly.push_back(std::log(osc));
      est.scales_used.push_back(eps);
    }
  }
  if (lx.size() < 4) {
    // constant graph: no oscillation at any scale
    est.degenerate = true;
    est.exponent = 1.5;
    est.ci_halfwidth = 0.0;
    return est;
  }
  FitResult fit = fit_line(lx, ly);
  est.exponent = std::min(fit.slope, 1.5);
  est.ci_halfwidth = fit.slope_se;
  est.differentiable_regime = est.exponent > 1.0;
  return est;
}

HolderBoundReport holder_upper_bound_check(const SeriesParams& params,
                                           const PrimeTable& table,
                                           const std::vector<uint64_t>& m_list,
                                           double t0) {
  params.validate();
  require(params.alpha > 1.0, ErrorCode::domain,
          "holder_upper_bound_check: requires alpha > 1");
  const GaborWindow& win = GaborWindow::instance();

  HolderBoundReport report;
  report.alpha_over_beta = params.alpha / params.beta;
  report.min_bound = std::numeric_limits<double>::infinity();

  for (uint64_t m : m_list) {
    require(m >= 1 && m + 1 < table.count(), ErrorCode::domain,
            "holder_upper_bound_check: m out of range");
    uint64_t p = table.primes[m];
    require(table.primes[m + 1] <= params.n_max, ErrorCode::domain,
            "holder_upper_bound_check: n_max must cover the m+1st prime");
    double theta = theta_gap(table, params.beta, m);
    double nu = prime_power(p, params.beta);
    double lambda = kTwoPi * nu;
    double a = 1.0 / theta;
    double a_min = 1.0 / (kTwoPi * theta);
    require(a <= 1.0, ErrorCode::domain,
            "holder_upper_bound_check: theta below 1, scale out of range");

    double half = 1.02 * a * win.effective_support(1e-7);
    size_t points = size_t(std::ceil(2.0 * half * 10.0 * nu / 0.8)) + 2;
    require(points <= (size_t(1) << 27), ErrorCode::resolution,
            "holder_upper_bound_check: required grid too large");

    std::complex<double> g_a, g_min;
    double prev = -1.0;
    for (int refine = 0; refine < 3; ++refine) {
      SampledGraph graph =
          sample_graph(params, table, t0 - half, t0 + half, points);
      g_a = gabor_transform(graph, a, t0, lambda);
      g_min = gabor_transform(graph, a_min, t0, lambda);
      double cur = std::abs(g_a);
      if (prev >= 0.0 && std::abs(cur - prev) <= 0.005 * prev) break;
      prev = cur;
      points = 2 * points - 1;
    }

    HolderBoundRow row;
    row.index = m;
    row.prime = p;
    row.theta = theta;
    row.gabor_abs = std::abs(g_a);
    row.identity_ratio =
        row.gabor_abs * std::pow(double(p), params.alpha);
    row.implied_bound = std::log(std::abs(g_min)) / std::log(a_min);
    report.min_bound = std::min(report.min_bound, row.implied_bound);
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace primewave
