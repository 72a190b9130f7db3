#include "primewave/selfsim.hpp"

#include <algorithm>
#include <cmath>

#include "primewave/zeta.hpp"

namespace primewave {

namespace {

void check_q(const PrimeTable& table, uint64_t q, uint64_t n) {
  require(table.contains(q), ErrorCode::domain,
          "selfsim: q must be a prime within the table");
  require(q <= n && n <= table.limit, ErrorCode::domain,
          "selfsim: need q <= n <= table limit");
}

}  // namespace

ResidueDecomposition residue_sums(const PrimeTable& table, uint64_t q,
                                  uint64_t n) {
  check_q(table, q, n);
  std::vector<KahanSum> acc(q);
  for (uint64_t p : table.primes) {
    if (p > n) break;
    acc[p % q].add(1.0 / double(p));
  }
  ResidueDecomposition out;
  out.q = q;
  out.n = n;
  out.sums.reserve(q);
  for (auto& a : acc) out.sums.push_back(a.value());
  out.predicted =
      (std::log(std::log(double(n))) + mertens_constant()) / double(q - 1);
  return out;
}

ReciprocalValue value_at_reciprocal(const PrimeTable& table, uint64_t q,
                                    uint64_t n) {
  check_q(table, q, n);
  SeriesParams params{1.0, 1.0, n, Component::real_part};
  ReciprocalValue out;
  out.direct = eval_v(params, table, 1.0 / double(q)).real();

  ResidueDecomposition dec = residue_sums(table, q, n);
  KahanSum acc;
  for (uint64_t l = 0; l < q; ++l) {
    double c = std::cos(kTwoPi * (double(l) / double(q)));
    acc.add(c * dec.sums[l]);
  }
  out.residue_route = acc.value();

  require(std::abs(out.direct - out.residue_route) <= 1e-8,
          ErrorCode::consistency,
          "value_at_reciprocal: evaluation routes disagree beyond 1e-8");
  return out;
}

AffineResidualReport affine_residual_stats(const std::vector<double>& lhs,
                                           const std::vector<double>& rhs,
                                           uint64_t q) {
  require(lhs.size() == rhs.size() && !lhs.empty(), ErrorCode::domain,
          "affine_residual_stats: mismatched sample arrays");
  double scale = 1.0 / (1.0 - double(q));
  double shift = 1.0 / double(q);
  KahanSum sq;
  double max_abs = 0.0;
  double vmin = lhs[0], vmax = lhs[0];
  for (size_t i = 0; i < lhs.size(); ++i) {
    double r = lhs[i] - (rhs[i] * scale + shift);
    sq.add(r * r);
    max_abs = std::max(max_abs, std::abs(r));
    vmin = std::min(vmin, lhs[i]);
    vmax = std::max(vmax, lhs[i]);
  }
  AffineResidualReport rep;
  rep.q = q;
  rep.points = lhs.size();
  rep.rms = std::sqrt(sq.value() / double(lhs.size()));
  rep.max_abs = max_abs;
  rep.value_range = vmax - vmin;
  rep.normalized_rms = (rep.value_range > 0.0) ? rep.rms / rep.value_range
                                               : rep.rms;
  return rep;
}

AffineResidualReport affine_similarity_residual(const PrimeTable& table,
                                                uint64_t q, uint64_t n,
                                                uint64_t points) {
  check_q(table, q, n);
  require(q >= 3, ErrorCode::domain,
          "affine_similarity_residual: q must be an odd prime");
  require(points >= 2, ErrorCode::domain,
          "affine_similarity_residual: points must be >= 2");

  SeriesParams params{1.0, 1.0, n, Component::real_part};
  double t_last = double(points - 1) / double(points);
  SampledGraph scaled =
      sample_graph(params, table, 0.0, t_last / double(q), points);
  SampledGraph base = sample_graph(params, table, 0.0, t_last, points);

  std::vector<double> lhs(points), rhs(points);
  for (size_t i = 0; i < points; ++i) {
    lhs[i] = scaled.values[i].real();
    rhs[i] = base.values[i].real();
  }
  AffineResidualReport rep = affine_residual_stats(lhs, rhs, q);
  rep.n = n;
  return rep;
}

}  // namespace primewave
