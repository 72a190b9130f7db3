#include "primewave.h"

#include <algorithm>
#include <cstring>
#include <string>

#include "primewave/fractal.hpp"
#include "primewave/primes.hpp"
#include "primewave/regularity.hpp"
#include "primewave/selfsim.hpp"
#include "primewave/series.hpp"
#include "primewave/stochastic.hpp"
#include "primewave/zeta.hpp"

namespace pw = primewave;

struct pw_prime_table {
  pw::PrimeTable table;
};

struct pw_graph {
  pw::SampledGraph graph;
};

namespace {

thread_local std::string g_last_error;

pw_status code_of(pw::ErrorCode code) {
  switch (code) {
    case pw::ErrorCode::domain:
      return PW_ERR_DOMAIN;
    case pw::ErrorCode::resolution:
      return PW_ERR_RESOLUTION;
    case pw::ErrorCode::consistency:
      return PW_ERR_CONSISTENCY;
    case pw::ErrorCode::insufficient_table:
      return PW_ERR_INSUFFICIENT_TABLE;
    case pw::ErrorCode::divergence:
      return PW_ERR_DIVERGENCE;
    case pw::ErrorCode::internal:
      return PW_ERR_INTERNAL;
  }
  return PW_ERR_INTERNAL;
}

template <class Fn>
pw_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PW_OK;
  } catch (const pw::Error& e) {
    g_last_error = e.what();
    return code_of(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PW_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return PW_ERR_INTERNAL;
  }
}

pw_status need(bool ok, const char* msg) {
  if (ok) return PW_OK;
  g_last_error = msg;
  return PW_ERR_DOMAIN;
}

pw::SeriesParams convert(const pw_series_params& p) {
  pw::Component c = pw::Component::complex_full;
  if (p.component == PW_COMPONENT_REAL) c = pw::Component::real_part;
  if (p.component == PW_COMPONENT_IMAG) c = pw::Component::imag_part;
  return {p.alpha, p.beta, p.n_max, c};
}

pw::WalkFamily convert(pw_walk_family f) {
  switch (f) {
    case PW_FAMILY_POWERS_OF_TWO:
      return pw::WalkFamily::powers_of_two;
    case PW_FAMILY_INTEGERS:
      return pw::WalkFamily::integers;
    case PW_FAMILY_PRIMES:
      return pw::WalkFamily::primes;
    case PW_FAMILY_PRIME_POWERS:
    default:
      return pw::WalkFamily::prime_powers;
  }
}

}  // namespace

extern "C" {

const char* pw_version(void) { return pw::kVersion; }

const char* pw_status_name(pw_status status) {
  switch (status) {
    case PW_OK:
      return "PW_OK";
    case PW_ERR_DOMAIN:
      return "PW_ERR_DOMAIN";
    case PW_ERR_RESOLUTION:
      return "PW_ERR_RESOLUTION";
    case PW_ERR_CONSISTENCY:
      return "PW_ERR_CONSISTENCY";
    case PW_ERR_INSUFFICIENT_TABLE:
      return "PW_ERR_INSUFFICIENT_TABLE";
    case PW_ERR_DIVERGENCE:
      return "PW_ERR_DIVERGENCE";
    case PW_ERR_INTERNAL:
      return "PW_ERR_INTERNAL";
  }
  return "PW_ERR_INTERNAL";
}

const char* pw_last_error(void) { return g_last_error.c_str(); }

pw_status pw_sieve(uint64_t limit, pw_prime_table** out) {
  if (pw_status s = need(out != nullptr, "pw_sieve: out is null")) return s;
  return guarded([&] {
    auto* handle = new pw_prime_table{pw::sieve(limit)};
    *out = handle;
  });
}

void pw_prime_table_free(pw_prime_table* table) { delete table; }

uint64_t pw_prime_count(const pw_prime_table* table) {
  return table ? table->table.count() : 0;
}

uint64_t pw_prime_limit(const pw_prime_table* table) {
  return table ? table->table.limit : 0;
}

pw_status pw_prime_at(const pw_prime_table* table, uint64_t index,
                      uint64_t* out) {
  if (pw_status s = need(table && out, "pw_prime_at: null argument")) return s;
  if (pw_status s = need(index < table->table.count(),
                         "pw_prime_at: index out of range"))
    return s;
  *out = table->table.primes[index];
  return PW_OK;
}

pw_status pw_prime_gaps(const pw_prime_table* table, uint64_t* out,
                        size_t capacity, size_t* written) {
  if (pw_status s = need(table && out && written,
                         "pw_prime_gaps: null argument"))
    return s;
  return guarded([&] {
    auto gaps = pw::prime_gaps(table->table);
    pw::require(capacity >= gaps.size(), pw::ErrorCode::domain,
                "pw_prime_gaps: buffer too small");
    std::copy(gaps.begin(), gaps.end(), out);
    *written = gaps.size();
  });
}

pw_status pw_residue_class_sizes(const pw_prime_table* table, uint64_t q,
                                 uint64_t* counts) {
  if (pw_status s = need(table && counts,
                         "pw_residue_class_sizes: null argument"))
    return s;
  return guarded([&] {
    auto classes = pw::residue_classes(table->table, q);
    std::fill(counts, counts + q, 0);
    for (auto& [l, primes] : classes) counts[l] = primes.size();
  });
}

pw_status pw_riemann_zeta(double s, double* out) {
  if (pw_status st = need(out != nullptr, "pw_riemann_zeta: out is null"))
    return st;
  return guarded([&] { *out = pw::riemann_zeta(s); });
}

pw_status pw_moebius(uint64_t n, int* out) {
  if (pw_status s = need(out != nullptr, "pw_moebius: out is null")) return s;
  return guarded([&] { *out = pw::moebius(n); });
}

pw_status pw_prime_zeta(double alpha, const pw_prime_table* table,
                        pw_zeta_eval* out) {
  if (pw_status s = need(table && out, "pw_prime_zeta: null argument"))
    return s;
  return guarded([&] {
    auto eval = pw::prime_zeta(alpha, table->table);
    out->value = eval.value;
    out->truncation_bound = eval.truncation_bound;
    out->tail_estimate = eval.tail_estimate;
    out->method = PW_ZETA_MOEBIUS_FORMULA;
  });
}

pw_status pw_log_integral(double x, double* out) {
  if (pw_status s = need(out != nullptr, "pw_log_integral: out is null"))
    return s;
  return guarded([&] { *out = pw::log_integral(x); });
}

pw_status pw_partial_prime_power_sum(double alpha, const pw_prime_table* table,
                                     uint64_t n, double* out) {
  if (pw_status s = need(table && out,
                         "pw_partial_prime_power_sum: null argument"))
    return s;
  return guarded(
      [&] { *out = pw::partial_prime_power_sum(alpha, table->table, n); });
}

double pw_mertens_constant(void) { return pw::mertens_constant(); }

pw_status pw_eval_v(const pw_series_params* params,
                    const pw_prime_table* table, double t, double* out_re,
                    double* out_im) {
  if (pw_status s = need(params && table && out_re && out_im,
                         "pw_eval_v: null argument"))
    return s;
  return guarded([&] {
    auto z = pw::eval_v(convert(*params), table->table, t);
    *out_re = z.real();
    *out_im = z.imag();
  });
}

pw_status pw_eval_v_derivative(const pw_series_params* params,
                               const pw_prime_table* table, double t,
                               int order, double* out_re, double* out_im) {
  if (pw_status s = need(params && table && out_re && out_im,
                         "pw_eval_v_derivative: null argument"))
    return s;
  return guarded([&] {
    auto z = pw::eval_v_derivative(convert(*params), table->table, t, order);
    *out_re = z.real();
    *out_im = z.imag();
  });
}

pw_status pw_sample_graph(const pw_series_params* params,
                          const pw_prime_table* table, double t_start,
                          double t_end, uint64_t points, pw_graph** out) {
  if (pw_status s = need(params && table && out,
                         "pw_sample_graph: null argument"))
    return s;
  return guarded([&] {
    auto* handle = new pw_graph{pw::sample_graph(
        convert(*params), table->table, t_start, t_end, size_t(points))};
    *out = handle;
  });
}

pw_status pw_weierstrass(double a, double b, int terms, double t,
                         double* out) {
  if (pw_status s = need(out != nullptr, "pw_weierstrass: out is null"))
    return s;
  return guarded([&] { *out = pw::weierstrass(a, b, terms, t); });
}

pw_status pw_riemann_series(double alpha, int terms, double t, double* out) {
  if (pw_status s = need(out != nullptr, "pw_riemann_series: out is null"))
    return s;
  return guarded([&] { *out = pw::riemann_series(alpha, terms, t); });
}

pw_status pw_graph_create(double t_start, double t_end, uint64_t points,
                          const double* re, const double* im, pw_graph** out) {
  if (pw_status s = need(re && out, "pw_graph_create: null argument"))
    return s;
  return guarded([&] {
    pw::require(points >= 2, pw::ErrorCode::domain,
                "pw_graph_create: need at least two points");
    pw::require(t_start < t_end, pw::ErrorCode::domain,
                "pw_graph_create: t_start must be < t_end");
    pw::SampledGraph graph;
    graph.t_start = t_start;
    graph.t_end = t_end;
    graph.values.resize(points);
    for (uint64_t i = 0; i < points; ++i)
      graph.values[i] = {re[i], im ? im[i] : 0.0};
    *out = new pw_graph{std::move(graph)};
  });
}

void pw_graph_free(pw_graph* graph) { delete graph; }

uint64_t pw_graph_points(const pw_graph* graph) {
  return graph ? graph->graph.points() : 0;
}

double pw_graph_t_start(const pw_graph* graph) {
  return graph ? graph->graph.t_start : 0.0;
}

double pw_graph_t_end(const pw_graph* graph) {
  return graph ? graph->graph.t_end : 0.0;
}

pw_status pw_graph_copy(const pw_graph* graph, double* re, double* im) {
  if (pw_status s = need(graph != nullptr, "pw_graph_copy: graph is null"))
    return s;
  for (size_t i = 0; i < graph->graph.points(); ++i) {
    if (re) re[i] = graph->graph.values[i].real();
    if (im) im[i] = graph->graph.values[i].imag();
  }
  return PW_OK;
}

pw_status pw_gabor_transform(const pw_graph* graph, double a, double b,
                             double lambda, double* out_re, double* out_im) {
  if (pw_status s = need(graph && out_re && out_im,
                         "pw_gabor_transform: null argument"))
    return s;
  return guarded([&] {
    auto z = pw::gabor_transform(graph->graph, a, b, lambda);
    *out_re = z.real();
    *out_im = z.imag();
  });
}

pw_status pw_theta_gap(const pw_prime_table* table, double beta,
                       uint64_t index, double* out) {
  if (pw_status s = need(table && out, "pw_theta_gap: null argument"))
    return s;
  return guarded([&] { *out = pw::theta_gap(table->table, beta, index); });
}

pw_status pw_holder_oscillation(const pw_graph* graph, double t0,
                                const double* scales, size_t n_scales,
                                pw_holder_estimate* out) {
  if (pw_status s = need(graph && out,
                         "pw_holder_oscillation: null argument"))
    return s;
  return guarded([&] {
    std::vector<double> sc(scales, scales + (scales ? n_scales : 0));
    auto est = pw::holder_exponent_oscillation(graph->graph, t0, sc);
    out->location = est.location;
    out->exponent = est.exponent;
    out->ci_halfwidth = est.ci_halfwidth;
    out->scales_used = est.scales_used.size();
    out->scale_min = est.scales_used.empty() ? 0.0 : est.scales_used.front();
    out->scale_max = est.scales_used.empty() ? 0.0 : est.scales_used.back();
    out->degenerate = est.degenerate ? 1 : 0;
    out->differentiable_regime = est.differentiable_regime ? 1 : 0;
  });
}

pw_status pw_holder_upper_bound(const pw_series_params* params,
                                const pw_prime_table* table,
                                const uint64_t* m_list, size_t n_m, double t0,
                                pw_holder_bound_row* rows,
                                double* alpha_over_beta, double* min_bound) {
  if (pw_status s =
          need(params && table && m_list && rows && alpha_over_beta &&
                   min_bound,
               "pw_holder_upper_bound: null argument"))
    return s;
  return guarded([&] {
    std::vector<uint64_t> ms(m_list, m_list + n_m);
    auto rep =
        pw::holder_upper_bound_check(convert(*params), table->table, ms, t0);
    *alpha_over_beta = rep.alpha_over_beta;
    *min_bound = rep.min_bound;
    for (size_t i = 0; i < rep.rows.size(); ++i) {
      rows[i].index = rep.rows[i].index;
      rows[i].prime = rep.rows[i].prime;
      rows[i].theta = rep.rows[i].theta;
      rows[i].gabor_abs = rep.rows[i].gabor_abs;
      rows[i].identity_ratio = rep.rows[i].identity_ratio;
      rows[i].implied_bound = rep.rows[i].implied_bound;
    }
  });
}

pw_status pw_box_count(const pw_graph* graph, uint32_t n, uint64_t* out) {
  if (pw_status s = need(graph && out, "pw_box_count: null argument"))
    return s;
  return guarded([&] { *out = pw::box_count(graph->graph, n); });
}

pw_status pw_box_dimension(const pw_graph* graph, const uint32_t* grid_sizes,
                           size_t n_grids, pw_boxdim_result* out,
                           uint64_t* occupied) {
  if (pw_status s = need(graph && out, "pw_box_dimension: null argument"))
    return s;
  return guarded([&] {
    std::vector<uint32_t> grids(grid_sizes, grid_sizes + (grid_sizes ? n_grids : 0));
    auto res = pw::box_dimension(graph->graph, grids);
    out->dimension = res.dimension;
    out->fit_r2 = res.fit_r2;
    out->box_t0 = res.box_t0;
    out->box_t1 = res.box_t1;
    out->box_y0 = res.box_y0;
    out->box_y1 = res.box_y1;
    out->resolution_warning = res.resolution_warning ? 1 : 0;
    out->range_flag = res.range_flag ? 1 : 0;
    if (occupied)
      std::copy(res.occupied.begin(), res.occupied.end(), occupied);
  });
}

pw_status pw_residue_sums(const pw_prime_table* table, uint64_t q, uint64_t n,
                          double* sums, double* predicted) {
  if (pw_status s = need(table && sums, "pw_residue_sums: null argument"))
    return s;
  return guarded([&] {
    auto dec = pw::residue_sums(table->table, q, n);
    std::copy(dec.sums.begin(), dec.sums.end(), sums);
    if (predicted) *predicted = dec.predicted;
  });
}

pw_status pw_value_at_reciprocal(const pw_prime_table* table, uint64_t q,
                                 uint64_t n, double* direct,
                                 double* residue_route) {
  if (pw_status s = need(table && direct && residue_route,
                         "pw_value_at_reciprocal: null argument"))
    return s;
  return guarded([&] {
    auto v = pw::value_at_reciprocal(table->table, q, n);
    *direct = v.direct;
    *residue_route = v.residue_route;
  });
}

pw_status pw_affine_similarity_residual(const pw_prime_table* table,
                                        uint64_t q, uint64_t n,
                                        uint64_t points,
                                        pw_affine_residual* out) {
  if (pw_status s = need(table && out,
                         "pw_affine_similarity_residual: null argument"))
    return s;
  return guarded([&] {
    auto rep = pw::affine_similarity_residual(table->table, q, n, points);
    out->rms = rep.rms;
    out->max_abs = rep.max_abs;
    out->value_range = rep.value_range;
    out->normalized_rms = rep.normalized_rms;
  });
}

pw_status pw_walk(pw_walk_family family, double beta, uint64_t n_terms,
                  double x, pw_angular angular, const pw_prime_table* table,
                  double* out) {
  if (pw_status s = need(out != nullptr, "pw_walk: out is null")) return s;
  return guarded([&] {
    pw::WalkSpec spec;
    spec.family = convert(family);
    spec.beta = beta;
    spec.n_terms = n_terms;
    spec.x = x;
    spec.angular = angular == PW_ANGULAR_PI ? pw::AngularConvention::pi
                                            : pw::AngularConvention::two_pi;
    auto sums = pw::walk(spec, table ? &table->table : nullptr);
    std::copy(sums.begin(), sums.end(), out);
  });
}

pw_status pw_clt_experiment(pw_walk_family family, double beta,
                            uint64_t n_terms, uint64_t n_samples,
                            pw_clt_normalization normalization, uint64_t seed,
                            pw_angular angular, const pw_prime_table* table,
                            pw_clt_report* out, double* bin_centers,
                            uint64_t* bin_counts) {
  if (pw_status s = need(out != nullptr, "pw_clt_experiment: out is null"))
    return s;
  return guarded([&] {
    auto rep = pw::clt_experiment(
        convert(family), beta, n_terms, n_samples,
        normalization == PW_NORM_BY_N ? pw::CltNormalization::by_n
                                      : pw::CltNormalization::by_sqrt_n,
        seed,
        angular == PW_ANGULAR_PI ? pw::AngularConvention::pi
                                 : pw::AngularConvention::two_pi,
        table ? &table->table : nullptr);
    out->n_samples = rep.n_samples;
    out->n_terms = rep.n_terms;
    out->seed = rep.seed;
    out->normalization = normalization;
    out->mean = rep.mean;
    out->variance = rep.variance;
    out->skewness = rep.skewness;
    out->excess_kurtosis = rep.excess_kurtosis;
    out->jarque_bera = rep.jarque_bera;
    out->bins = rep.bin_centers.size();
    if (bin_centers)
      std::copy(rep.bin_centers.begin(), rep.bin_centers.end(), bin_centers);
    if (bin_counts)
      std::copy(rep.bin_counts.begin(), rep.bin_counts.end(), bin_counts);
  });
}

pw_status pw_hadamard_check(const uint64_t* sequence, size_t length,
                            double rho, uint8_t* flags, int* overall,
                            int64_t* first_fail) {
  if (pw_status s = need(sequence && flags && overall,
                         "pw_hadamard_check: null argument"))
    return s;
  return guarded([&] {
    std::vector<uint64_t> seq(sequence, sequence + length);
    auto rep = pw::hadamard_check(seq, rho);
    std::copy(rep.pass.begin(), rep.pass.end(), flags);
    *overall = rep.all_pass ? 1 : 0;
    if (first_fail) *first_fail = rep.first_fail;
  });
}

}  // extern "C"
