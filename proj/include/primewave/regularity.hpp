#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "primewave/primes.hpp"
#include "primewave/series.hpp"

namespace primewave {

// Window for the Gabor transform. Its Fourier transform is the C-infinity
// bump u -> exp(1 - 1/(1-u^2)) on (-1,1), zero outside, so fhat(0) = 1
// exactly and any frequency at distance >= theta from the probe is rejected
// at scale a = 1/theta. The time-domain window phi is tabulated by numerical
// inverse Fourier transform out to where the truncated mass is < 1e-8.
class GaborWindow {
 public:
  static const GaborWindow& instance();

  double support() const { return support_; }  // half-width T of the table
  double phi(double t) const;                   // even; 0 beyond support
  static double fhat_bump(double y);

  // smallest half-width whose neglected |phi| mass stays below mass_tol;
  // integration ranges can stop here instead of the full support
  double effective_support(double mass_tol) const;

  // diagnostics over the tabulated window
  double table_step() const { return step_; }
  double table_cap() const { return cap_; }

 private:
  GaborWindow();
  double step_ = 0.0;
  double cap_ = 0.0;
  double support_ = 0.0;
  std::vector<double> table_;
  std::vector<double> tail_mass_;
};

// Gabor wavelet transform (1/a) integral f(t) exp(-i lambda t) phi((t-b)/a) dt,
// trapezoid on the graph's own grid. The grid must resolve the oscillation:
// spacing < 2 pi / (10 lambda), and the window support must lie inside the
// sampled range.
std::complex<double> gabor_transform(const SampledGraph& f, double a, double b,
                                     double lambda);

// Minimum adjacent frequency gap min(p_m^b - p_{m-1}^b, p_{m+1}^b - p_m^b);
// m is a 0-based index into the table with neighbors on both sides.
double theta_gap(const PrimeTable& table, double beta, uint64_t m);

enum class HolderMethod { oscillation, gabor };

struct HolderEstimate {
  double location = 0.0;
  double exponent = 0.0;
  double ci_halfwidth = 0.0;
  std::vector<double> scales_used;
  HolderMethod method = HolderMethod::oscillation;
  bool degenerate = false;            // constant graph
  bool differentiable_regime = false; // exponent above 1
};

// Exponent from oscillation scaling: slope of ln osc(eps) against ln eps,
// osc(eps) = max - min of Re f over |t - t0| <= eps. Scales default to 2^-k,
// k = 4..12, intersected with the grid resolution.
HolderEstimate holder_exponent_oscillation(const SampledGraph& f, double t0,
                                           std::vector<double> scales = {});

struct HolderBoundRow {
  uint64_t index = 0;     // prime index m
  uint64_t prime = 0;     // p_m
  double theta = 0.0;
  double gabor_abs = 0.0;       // |G(1/theta, t0, 2 pi p_m^beta)|
  double identity_ratio = 0.0;  // gabor_abs * p_m^alpha, 1 when isolation holds
  double implied_bound = 0.0;   // ln|G| / ln a at the smallest isolating scale
};

struct HolderBoundReport {
  double alpha_over_beta = 0.0;
  double min_bound = 0.0;
  std::vector<HolderBoundRow> rows;
};

// Single-frequency isolation probe at each m in m_list: samples the complex
// partial sum around t0, evaluates the transform at a = 1/theta_m (identity
// check |G| = p_m^-alpha) and at the smallest isolating scale 1/(2 pi theta_m)
// (strongest admissible exponent bound). Reports the per-m data, the minimum
// bound, and alpha/beta for reference; no bound is asserted.
HolderBoundReport holder_upper_bound_check(const SeriesParams& params,
                                           const PrimeTable& table,
                                           const std::vector<uint64_t>& m_list,
                                           double t0);

}  // namespace primewave
