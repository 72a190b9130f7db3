// primewave CLI: every analysis as a subcommand, emitting CSV/JSON/SVG with a
// replayable config echo. Numeric work happens behind the C API.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "primewave.h"

namespace {

struct PwFailure {
  pw_status status;
  std::string message;
};

void check(pw_status s) {
  if (s != PW_OK) throw PwFailure{s, pw_last_error()};
}

using TablePtr = std::unique_ptr<pw_prime_table, decltype(&pw_prime_table_free)>;
using GraphPtr = std::unique_ptr<pw_graph, decltype(&pw_graph_free)>;

TablePtr make_table(uint64_t limit) {
  pw_prime_table* t = nullptr;
  check(pw_sieve(limit, &t));
  return TablePtr(t, &pw_prime_table_free);
}

// sieve limit guaranteed to cover the first n primes
uint64_t limit_for_count(uint64_t n) {
  if (n < 6) return 16;
  double nn = double(n);
  return uint64_t(nn * (std::log(nn) + std::log(std::log(nn))) + 16.0);
}

GraphPtr make_series_graph(double alpha, double beta, uint64_t nmax,
                           const TablePtr& table, double t0, double t1,
                           uint64_t points) {
  pw_series_params params{alpha, beta, nmax, PW_COMPONENT_COMPLEX};
  pw_graph* g = nullptr;
  check(pw_sample_graph(&params, table.get(), t0, t1, points, &g));
  return GraphPtr(g, &pw_graph_free);
}

GraphPtr graph_from_csv(const std::string& path) {
  pwcli::GraphData data = pwcli::read_graph_csv(path);
  pw_graph* g = nullptr;
  check(pw_graph_create(data.t_start, data.t_end, data.t.size(),
                        data.re.data(), data.im.data(), &g));
  return GraphPtr(g, &pw_graph_free);
}

std::vector<double> graph_re(const GraphPtr& g) {
  std::vector<double> re(pw_graph_points(g.get()));
  check(pw_graph_copy(g.get(), re.data(), nullptr));
  return re;
}

std::vector<double> graph_im(const GraphPtr& g) {
  std::vector<double> im(pw_graph_points(g.get()));
  check(pw_graph_copy(g.get(), nullptr, im.data()));
  return im;
}

std::vector<double> graph_t(const GraphPtr& g) {
  uint64_t n = pw_graph_points(g.get());
  double t0 = pw_graph_t_start(g.get()), t1 = pw_graph_t_end(g.get());
  std::vector<double> t(n);
  for (uint64_t i = 0; i < n; ++i)
    t[i] = t0 + double(i) * ((t1 - t0) / double(n - 1));
  return t;
}

pw_walk_family parse_family(const std::string& name) {
  if (name == "powers_of_two") return PW_FAMILY_POWERS_OF_TWO;
  if (name == "integers") return PW_FAMILY_INTEGERS;
  if (name == "primes") return PW_FAMILY_PRIMES;
  if (name == "prime_powers") return PW_FAMILY_PRIME_POWERS;
  throw CLI::ValidationError("family", "unknown family: " + name);
}

std::vector<uint32_t> parse_grids(const std::string& spec) {
  std::vector<uint32_t> out;
  std::string cur;
  for (char c : std::string(spec + ",")) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(uint32_t(std::stoul(cur)));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// figures
// ---------------------------------------------------------------------------

void emit_figure_csv_svg(const std::string& outdir, const std::string& name,
                         const std::string& config,
                         const std::vector<pwcli::CsvColumn>& cols,
                         const std::string& xlab, const std::string& ylab) {
  pwcli::write_output(outdir + "/" + name + ".csv",
                      pwcli::render_csv(config, cols));
  std::vector<pwcli::SvgSeries> series;
  for (size_t c = 1; c < cols.size(); ++c)
    series.push_back({cols[0].values, cols[c].values});
  pwcli::write_output(outdir + "/" + name + ".svg",
                      pwcli::render_svg(config, series, xlab, ylab));
}

void figure_sines(const std::string& outdir) {
  const uint64_t points = 2001;
  pwcli::CsvColumn t{"t", {}}, a{"sin_2e5_pi_t", {}}, b{"sin_2e6_pi_t", {}};
  for (uint64_t i = 0; i < points; ++i) {
    double x = double(i) / double(points - 1);
    t.values.push_back(x);
    a.values.push_back(std::sin(32.0 * M_PI * x));
    b.values.push_back(std::sin(64.0 * M_PI * x));
  }
  pwcli::ConfigEcho cfg;
  cfg.set("curves", std::string("sin(2^5 pi t),sin(2^6 pi t)"));
  cfg.set("points", points);
  emit_figure_csv_svg(outdir, "fig1", cfg.line("figures target=fig1"),
                      {t, a, b}, "t", "sin");
}

void figure_walk_graphs(const std::string& outdir) {
  const uint64_t points = 2001;
  auto table = make_table(1000);
  uint64_t n_primes = pw_prime_count(table.get());
  pwcli::CsvColumn t{"t", {}}, lac{"lacunary", {}}, ints{"integers", {}},
      prs{"primes", {}};
  std::vector<double> buf(1000);
  for (uint64_t i = 0; i < points; ++i) {
    double x = double(i) / double(points - 1);
    t.values.push_back(x);
    check(pw_walk(PW_FAMILY_POWERS_OF_TWO, 1.0, 1000, x, PW_ANGULAR_PI,
                  nullptr, buf.data()));
    lac.values.push_back(buf[999]);
    check(pw_walk(PW_FAMILY_INTEGERS, 1.0, 1000, x, PW_ANGULAR_PI, nullptr,
                  buf.data()));
    ints.values.push_back(buf[999]);
    check(pw_walk(PW_FAMILY_PRIMES, 1.0, n_primes, x, PW_ANGULAR_PI,
                  table.get(), buf.data()));
    prs.values.push_back(buf[n_primes - 1]);
  }
  pwcli::ConfigEcho cfg;
  cfg.set("terms", std::string("2^n:1000,n:1000,p<=1000"));
  cfg.set("omega", std::string("pi"));
  cfg.set("points", points);
  emit_figure_csv_svg(outdir, "fig2", cfg.line("figures target=fig2"),
                      {t, lac, ints, prs}, "t", "partial sum");
}

void figure_series_graph(const std::string& outdir, const std::string& name,
                         double alpha, double beta, uint64_t nmax,
                         uint64_t points) {
  auto table = make_table(nmax);
  double t_end = double(points - 1) / double(points);
  auto g = make_series_graph(alpha, beta, nmax, table, 0.0, t_end, points);
  pwcli::ConfigEcho cfg;
  cfg.set("alpha", alpha);
  cfg.set("beta", beta);
  cfg.set("nmax", nmax);
  cfg.set("points", points);
  pwcli::CsvColumn tc{"t", graph_t(g)}, re{"re", graph_re(g)},
      im{"im", graph_im(g)};
  emit_figure_csv_svg(outdir, name, cfg.line("figures target=" + name),
                      {tc, re, im}, "t", "V");
}

void figure_similarity(const std::string& outdir) {
  const uint64_t nmax = 1000000, points = 20000;
  auto table = make_table(nmax);
  double t_end = double(points - 1) / double(points);
  auto base = make_series_graph(1.0, 1.0, nmax, table, 0.0, t_end, points);
  auto scaled =
      make_series_graph(1.0, 1.0, nmax, table, 0.0, t_end / 3.0, points);
  auto vre = graph_re(base);
  auto sre = graph_re(scaled);
  pwcli::CsvColumn t{"t", graph_t(base)}, lhs{"minus_half_v", {}},
      rhs{"v_scaled_plus_third", {}};
  for (size_t i = 0; i < vre.size(); ++i) {
    lhs.values.push_back(-0.5 * vre[i]);
    rhs.values.push_back(sre[i] + 1.0 / 3.0);
  }
  pwcli::ConfigEcho cfg;
  cfg.set("nmax", nmax);
  cfg.set("q", uint64_t(3));
  cfg.set("points", points);
  emit_figure_csv_svg(outdir, "fig7", cfg.line("figures target=fig7"),
                      {t, lhs, rhs}, "t", "V");
}

void figure_boxdim_sweep(const std::string& outdir) {
  const uint64_t nmax = 10000, points = 16385;
  auto table = make_table(nmax);
  std::vector<uint32_t> grids{16, 32, 64, 128, 256, 512, 1024, 2048};
  pwcli::CsvColumn ca{"alpha", {}}, cb{"beta", {}}, cr{"ratio", {}},
      cd{"box_dimension", {}};
  for (double alpha : {1.0, 1.125, 1.25, 1.375, 1.5}) {
    for (double beta : {0.5, 1.0, 1.5, 2.0, 2.5, 3.0}) {
      auto g = make_series_graph(alpha, beta, nmax, table, 0.0,
                                 double(points - 1) / double(points), points);
      pw_boxdim_result res;
      std::vector<uint64_t> occ(grids.size());
      check(pw_box_dimension(g.get(), grids.data(), grids.size(), &res,
                             occ.data()));
      ca.values.push_back(alpha);
      cb.values.push_back(beta);
      cr.values.push_back(alpha / beta);
      cd.values.push_back(res.dimension);
    }
  }
  // order by ratio for the plotted trend
  std::vector<size_t> idx(ca.values.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    return cr.values[a] < cr.values[b];
  });
  pwcli::ConfigEcho cfg;
  cfg.set("nmax", nmax);
  cfg.set("points", points);
  cfg.set("grids", std::string("16..2048"));
  std::string config = cfg.line("figures target=fig8");
  pwcli::write_output(outdir + "/fig8.csv",
                      pwcli::render_csv(config, {ca, cb, cr, cd}));
  pwcli::SvgSeries s;
  for (size_t i : idx) {
    s.x.push_back(cr.values[i]);
    s.y.push_back(cd.values[i]);
  }
  pwcli::write_output(outdir + "/fig8.svg",
                      pwcli::render_svg(config, {s}, "alpha/beta",
                                        "box dimension"));
}

void figure_clt(const std::string& outdir, const std::string& name,
                pw_walk_family family, double beta) {
  const uint64_t n_terms = 78498, n_samples = 10000, seed = 20160913;
  auto table = make_table(limit_for_count(n_terms));
  pw_clt_report rep;
  size_t bins = size_t(std::ceil(std::sqrt(double(n_samples))));
  std::vector<double> centers(bins);
  std::vector<uint64_t> counts(bins);
  check(pw_clt_experiment(family, beta, n_terms, n_samples, PW_NORM_BY_N,
                          seed, PW_ANGULAR_PI, table.get(), &rep,
                          centers.data(), counts.data()));
  pwcli::ConfigEcho cfg;
  cfg.set("family", std::string(family == PW_FAMILY_PRIMES ? "primes"
                                                           : "prime_powers"));
  if (family == PW_FAMILY_PRIME_POWERS) cfg.set("beta", beta);
  cfg.set("nterms", n_terms);
  cfg.set("nsamples", n_samples);
  cfg.set("normalization", std::string("by_n"));
  cfg.set("omega", std::string("pi"));
  cfg.set("seed", seed);
  pwcli::CsvColumn cc{"bin_center", centers}, cn{"count", {}};
  for (uint64_t c : counts) cn.values.push_back(double(c));
  emit_figure_csv_svg(outdir, name, cfg.line("figures target=" + name),
                      {cc, cn}, "sample average", "count");
}

void run_figures(const std::string& target, const std::string& outdir) {
  bool all = target == "all";
  if (all || target == "fig1") figure_sines(outdir);
  if (all || target == "fig2") figure_walk_graphs(outdir);
  if (all || target == "fig3")
    figure_series_graph(outdir, "fig3", 1.5, 2.0, 100000, 50000);
  if (all || target == "fig4")
    figure_series_graph(outdir, "fig4", 1.5, 1.5, 100000, 50000);
  if (all || target == "fig5")
    figure_series_graph(outdir, "fig5", 1.5, 1.0, 100000, 50000);
  if (all || target == "fig6")
    figure_series_graph(outdir, "fig6", 1.0, 1.0, 100000, 50000);
  if (all || target == "fig7") figure_similarity(outdir);
  if (all || target == "fig8") figure_boxdim_sweep(outdir);
  if (all || target == "fig9") figure_clt(outdir, "fig9", PW_FAMILY_PRIMES, 1.0);
  if (all || target == "fig10")
    figure_clt(outdir, "fig10", PW_FAMILY_PRIME_POWERS, 1.5);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"prime trigonometric series toolkit"};
  app.require_subcommand(1);
  // --- eval ---
  {
    auto* cmd = app.add_subcommand("eval", "evaluate the series at one point");
    auto alpha = std::make_shared<double>(1.5);
    auto beta = std::make_shared<double>(1.0);
    auto nmax = std::make_shared<uint64_t>(100000);
    auto t = std::make_shared<double>(0.0);
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--beta", *beta)->required();
    cmd->add_option("--nmax", *nmax)->required();
    cmd->add_option("--t", *t)->required();
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      auto table = make_table(*nmax);
      pw_series_params params{*alpha, *beta, *nmax, PW_COMPONENT_COMPLEX};
      double re = 0, im = 0;
      check(pw_eval_v(&params, table.get(), *t, &re, &im));
      pwcli::ConfigEcho cfg;
      cfg.set("alpha", *alpha);
      cfg.set("beta", *beta);
      cfg.set("nmax", *nmax);
      cfg.set("t", *t);
      cfg.set("format", std::string("json"));
      pwcli::JsonReport rep(cfg.line("eval"));
      rep.add("t", *t);
      rep.add("re", re);
      rep.add("im", im);
      pwcli::write_output(*output, rep.render());
    });
  }

  // --- deriv ---
  {
    auto* cmd = app.add_subcommand("deriv", "evaluate an analytic derivative");
    auto alpha = std::make_shared<double>(4.0);
    auto beta = std::make_shared<double>(1.0);
    auto nmax = std::make_shared<uint64_t>(10000);
    auto t = std::make_shared<double>(0.0);
    auto order = std::make_shared<int>(1);
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--beta", *beta)->required();
    cmd->add_option("--nmax", *nmax)->required();
    cmd->add_option("--t", *t)->required();
    cmd->add_option("--order", *order);
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      auto table = make_table(*nmax);
      pw_series_params params{*alpha, *beta, *nmax, PW_COMPONENT_COMPLEX};
      double re = 0, im = 0;
      check(pw_eval_v_derivative(&params, table.get(), *t, *order, &re, &im));
      pwcli::ConfigEcho cfg;
      cfg.set("alpha", *alpha);
      cfg.set("beta", *beta);
      cfg.set("nmax", *nmax);
      cfg.set("t", *t);
      cfg.set_int("order", *order);
      cfg.set("format", std::string("json"));
      pwcli::JsonReport rep(cfg.line("deriv"));
      rep.add("t", *t);
      rep.add("order", int64_t(*order));
      rep.add("re", re);
      rep.add("im", im);
      pwcli::write_output(*output, rep.render());
    });
  }

  // --- graph ---
  {
    auto* cmd = app.add_subcommand("graph", "sample the series on a grid");
    auto alpha = std::make_shared<double>(1.5);
    auto beta = std::make_shared<double>(2.0);
    auto nmax = std::make_shared<uint64_t>(100000);
    auto points = std::make_shared<uint64_t>(50000);
    auto tstart = std::make_shared<double>(0.0);
    auto tend = std::make_shared<double>(-1.0);  // default 1 - 1/points
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--beta", *beta)->required();
    cmd->add_option("--nmax", *nmax)->required();
    cmd->add_option("--points", *points)->required();
    cmd->add_option("--tstart", *tstart);
    cmd->add_option("--tend", *tend);
    auto format = std::make_shared<std::string>("csv");
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      double t1 = *tend < *tstart
                      ? *tstart + (1.0 - 1.0 / double(*points))
                      : *tend;
      auto table = make_table(*nmax);
      auto g = make_series_graph(*alpha, *beta, *nmax, table, *tstart, t1,
                                 *points);
      pwcli::ConfigEcho cfg;
      cfg.set("alpha", *alpha);
      cfg.set("beta", *beta);
      cfg.set("nmax", *nmax);
      cfg.set("points", *points);
      cfg.set("tstart", *tstart);
      cfg.set("tend", t1);
      cfg.set("format", *format);
      std::string config = cfg.line("graph");
      pwcli::CsvColumn tc{"t", graph_t(g)}, re{"re", graph_re(g)},
          im{"im", graph_im(g)};
      if (*format == "svg") {
        pwcli::write_output(
            *output, pwcli::render_svg(config, {{tc.values, re.values}}, "t",
                                       "Re V"));
      } else {
        pwcli::write_output(*output, pwcli::render_csv(config, {tc, re, im}));
      }
    });
  }

  // --- zeta ---
  {
    auto* cmd = app.add_subcommand("zeta", "prime zeta via the explicit formula");
    auto alpha = std::make_shared<double>(2.0);
    auto limit = std::make_shared<uint64_t>(1000000);
    cmd->add_option("--alpha", *alpha)->required();
    cmd->add_option("--limit", *limit);
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      auto table = make_table(*limit);
      pw_zeta_eval eval;
      check(pw_prime_zeta(*alpha, table.get(), &eval));
      pwcli::ConfigEcho cfg;
      cfg.set("alpha", *alpha);
      cfg.set("limit", *limit);
      cfg.set("format", std::string("json"));
      pwcli::JsonReport rep(cfg.line("zeta"));
      rep.add("value", eval.value);
      rep.add("truncation_bound", uint64_t(eval.truncation_bound));
      rep.add("tail_estimate", eval.tail_estimate);
      rep.add("method", std::string("moebius_formula"));
      pwcli::write_output(*output, rep.render());
    });
  }

  // --- boxdim ---
  {
    auto* cmd = app.add_subcommand("boxdim", "box-counting dimension");
    auto input = std::make_shared<std::string>();
    auto alpha = std::make_shared<double>(1.5);
    auto beta = std::make_shared<double>(1.5);
    auto nmax = std::make_shared<uint64_t>(10000);
    auto points = std::make_shared<uint64_t>(16385);
    auto grids = std::make_shared<std::string>("16,32,64,128,256,512,1024,2048");
    cmd->add_option("--input", *input, "graph CSV to analyze");
    cmd->add_option("--alpha", *alpha);
    cmd->add_option("--beta", *beta);
    cmd->add_option("--nmax", *nmax);
    cmd->add_option("--points", *points);
    cmd->add_option("--grids", *grids);
    auto format = std::make_shared<std::string>("json");
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      GraphPtr g(nullptr, &pw_graph_free);
      pwcli::ConfigEcho cfg;
      if (!input->empty()) {
        g = graph_from_csv(*input);
        cfg.set("input", *input);
      } else {
        auto table = make_table(*nmax);
        g = make_series_graph(*alpha, *beta, *nmax, table, 0.0,
                              1.0 - 1.0 / double(*points), *points);
        cfg.set("alpha", *alpha);
        cfg.set("beta", *beta);
        cfg.set("nmax", *nmax);
        cfg.set("points", *points);
      }
      cfg.set("grids", *grids);
      cfg.set("format", *format);
      auto gv = parse_grids(*grids);
      pw_boxdim_result res;
      std::vector<uint64_t> occ(gv.size());
      check(pw_box_dimension(g.get(), gv.data(), gv.size(), &res, occ.data()));
      std::string config = cfg.line("boxdim");
      if (*format == "csv") {
        pwcli::CsvColumn cn{"N", {}}, cm{"M", {}};
        for (size_t i = 0; i < gv.size(); ++i) {
          cn.values.push_back(double(gv[i]));
          cm.values.push_back(double(occ[i]));
        }
        pwcli::write_output(*output, pwcli::render_csv(config, {cn, cm}));
      } else {
        pwcli::JsonReport rep(config);
        rep.add("dimension", res.dimension);
        rep.add("fit_r2", res.fit_r2);
        rep.add("box_t0", res.box_t0);
        rep.add("box_t1", res.box_t1);
        rep.add("box_y0", res.box_y0);
        rep.add("box_y1", res.box_y1);
        rep.add("resolution_warning", res.resolution_warning != 0);
        rep.add("range_flag", res.range_flag != 0);
        std::vector<std::pair<double, double>> nm;
        for (size_t i = 0; i < gv.size(); ++i)
          nm.emplace_back(double(gv[i]), double(occ[i]));
        rep.add_pairs("counts", nm);
        pwcli::write_output(*output, rep.render());
      }
    });
  }

  // --- holder ---
  {
    auto* cmd = app.add_subcommand("holder", "local Holder exponent estimates");
    auto input = std::make_shared<std::string>();
    auto method = std::make_shared<std::string>("oscillation");
    auto alpha = std::make_shared<double>(1.2);
    auto beta = std::make_shared<double>(2.0);
    auto nmax = std::make_shared<uint64_t>(10000);
    auto points = std::make_shared<uint64_t>(65537);
    auto t0 = std::make_shared<double>(0.5);
    auto mprimes = std::make_shared<std::string>("101,151,211,307,401,503");
    cmd->add_option("--input", *input, "graph CSV to analyze (oscillation)");
    cmd->add_option("--method", *method)
        ->check(CLI::IsMember({"oscillation", "gabor"}));
    cmd->add_option("--alpha", *alpha);
    cmd->add_option("--beta", *beta);
    cmd->add_option("--nmax", *nmax);
    cmd->add_option("--points", *points);
    cmd->add_option("--t0", *t0);
    cmd->add_option("--mprimes", *mprimes,
                    "primes probed by the gabor method");
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      pwcli::ConfigEcho cfg;
      cfg.set("method", *method);
      cfg.set("t0", *t0);
      if (*method == "oscillation") {
        GraphPtr g(nullptr, &pw_graph_free);
        if (!input->empty()) {
          g = graph_from_csv(*input);
          cfg.set("input", *input);
        } else {
          auto table = make_table(*nmax);
          g = make_series_graph(*alpha, *beta, *nmax, table, 0.0,
                                1.0 - 1.0 / double(*points), *points);
          cfg.set("alpha", *alpha);
          cfg.set("beta", *beta);
          cfg.set("nmax", *nmax);
          cfg.set("points", *points);
        }
        cfg.set("format", std::string("json"));
        pw_holder_estimate est;
        check(pw_holder_oscillation(g.get(), *t0, nullptr, 0, &est));
        pwcli::JsonReport rep(cfg.line("holder"));
        rep.add("location", est.location);
        rep.add("exponent", est.exponent);
        rep.add("ci_halfwidth", est.ci_halfwidth);
        rep.add("method", std::string("oscillation"));
        rep.add("scales_used", uint64_t(est.scales_used));
        rep.add("scale_min", est.scale_min);
        rep.add("scale_max", est.scale_max);
        rep.add("degenerate", est.degenerate != 0);
        rep.add("differentiable_regime", est.differentiable_regime != 0);
        pwcli::write_output(*output, rep.render());
      } else {
        auto table = make_table(*nmax);
        auto targets = parse_grids(*mprimes);
        std::vector<uint64_t> ms;
        for (uint32_t prime : targets) {
          // index of the prime at or below the requested value
          uint64_t lo = 0, hi = pw_prime_count(table.get());
          while (lo + 1 < hi) {
            uint64_t mid = (lo + hi) / 2, p = 0;
            check(pw_prime_at(table.get(), mid, &p));
            if (p <= prime) lo = mid;
            else hi = mid;
          }
          ms.push_back(lo);
        }
        cfg.set("alpha", *alpha);
        cfg.set("beta", *beta);
        cfg.set("nmax", *nmax);
        cfg.set("mprimes", *mprimes);
        cfg.set("format", std::string("json"));
        pw_series_params params{*alpha, *beta, *nmax, PW_COMPONENT_COMPLEX};
        std::vector<pw_holder_bound_row> rows(ms.size());
        double ab = 0, minb = 0;
        check(pw_holder_upper_bound(&params, table.get(), ms.data(), ms.size(),
                                    *t0, rows.data(), &ab, &minb));
        pwcli::JsonReport rep(cfg.line("holder"));
        rep.add("method", std::string("gabor"));
        rep.add("alpha_over_beta", ab);
        rep.add("min_bound", minb);
        rep.add("rows", uint64_t(rows.size()));
        std::vector<std::pair<double, double>> bounds, ratios;
        for (auto& r : rows) {
          bounds.emplace_back(double(r.prime), r.implied_bound);
          ratios.emplace_back(double(r.prime), r.identity_ratio);
        }
        rep.add_pairs("prime_bound", bounds);
        rep.add_pairs("prime_identity_ratio", ratios);
        pwcli::write_output(*output, rep.render());
      }
    });
  }

  // --- selfsim ---
  {
    auto* cmd = app.add_subcommand("selfsim",
                                   "residue decomposition and similarity");
    auto q = std::make_shared<uint64_t>(3);
    auto n = std::make_shared<uint64_t>(100000);
    auto points = std::make_shared<uint64_t>(10000);
    cmd->add_option("--q", *q)->required();
    cmd->add_option("--n", *n)->required();
    cmd->add_option("--points", *points);
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      auto table = make_table(*n);
      std::vector<double> sums(*q);
      double predicted = 0;
      check(pw_residue_sums(table.get(), *q, *n, sums.data(), &predicted));
      double direct = 0, residue_route = 0;
      check(pw_value_at_reciprocal(table.get(), *q, *n, &direct,
                                   &residue_route));
      pwcli::ConfigEcho cfg;
      cfg.set("q", *q);
      cfg.set("n", *n);
      cfg.set("points", *points);
      cfg.set("format", std::string("json"));
      pwcli::JsonReport rep(cfg.line("selfsim"));
      double total = 0;
      for (double s : sums) total += s;
      rep.add("reciprocal_direct", direct);
      rep.add("reciprocal_residue_route", residue_route);
      rep.add("residue_total", total);
      rep.add("predicted_class_sum", predicted);
      std::vector<std::pair<double, double>> class_sums;
      for (uint64_t l = 0; l < *q; ++l)
        class_sums.emplace_back(double(l), sums[l]);
      rep.add_pairs("class_sums", class_sums);
      if (*q >= 3) {
        pw_affine_residual res;
        check(pw_affine_similarity_residual(table.get(), *q, *n, *points,
                                            &res));
        rep.add("affine_rms", res.rms);
        rep.add("affine_max_abs", res.max_abs);
        rep.add("affine_value_range", res.value_range);
        rep.add("affine_normalized_rms", res.normalized_rms);
      }
      pwcli::write_output(*output, rep.render());
    });
  }

  // --- clt ---
  {
    auto* cmd = app.add_subcommand("clt", "Monte-Carlo normality experiment");
    auto family = std::make_shared<std::string>("primes");
    auto beta = std::make_shared<double>(1.5);
    auto nterms = std::make_shared<uint64_t>(78498);
    auto nsamples = std::make_shared<uint64_t>(10000);
    auto normalization = std::make_shared<std::string>("by_n");
    auto seed = std::make_shared<uint64_t>(20160913);
    auto omega = std::make_shared<std::string>("pi");
    cmd->add_option("--family", *family);
    cmd->add_option("--beta", *beta);
    cmd->add_option("--nterms", *nterms);
    cmd->add_option("--nsamples", *nsamples);
    cmd->add_option("--normalization", *normalization)
        ->check(CLI::IsMember({"by_n", "by_sqrt_n"}));
    cmd->add_option("--seed", *seed);
    cmd->add_option("--omega", *omega)->check(CLI::IsMember({"pi", "2pi"}));
    auto format = std::make_shared<std::string>("json");
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      pw_walk_family fam = parse_family(*family);
      TablePtr table(nullptr, &pw_prime_table_free);
      if (fam == PW_FAMILY_PRIMES || fam == PW_FAMILY_PRIME_POWERS)
        table = make_table(limit_for_count(*nterms));
      pw_clt_report rep;
      size_t bins = size_t(std::ceil(std::sqrt(double(*nsamples))));
      std::vector<double> centers(bins);
      std::vector<uint64_t> counts(bins);
      check(pw_clt_experiment(
          fam, *beta, *nterms, *nsamples,
          *normalization == "by_n" ? PW_NORM_BY_N : PW_NORM_BY_SQRT_N, *seed,
          *omega == "pi" ? PW_ANGULAR_PI : PW_ANGULAR_TWO_PI, table.get(),
          &rep, centers.data(), counts.data()));
      pwcli::ConfigEcho cfg;
      cfg.set("family", *family);
      if (fam == PW_FAMILY_PRIME_POWERS) cfg.set("beta", *beta);
      cfg.set("nterms", *nterms);
      cfg.set("nsamples", *nsamples);
      cfg.set("normalization", *normalization);
      cfg.set("omega", *omega);
      cfg.set("seed", *seed);
      cfg.set("format", *format);
      std::string config = cfg.line("clt");
      if (*format == "csv") {
        pwcli::CsvColumn cc{"bin_center", centers}, cn{"count", {}};
        for (uint64_t c : counts) cn.values.push_back(double(c));
        pwcli::write_output(*output, pwcli::render_csv(config, {cc, cn}));
      } else {
        pwcli::JsonReport out_rep(config);
        out_rep.add("mean", rep.mean);
        out_rep.add("variance", rep.variance);
        out_rep.add("skewness", rep.skewness);
        out_rep.add("excess_kurtosis", rep.excess_kurtosis);
        out_rep.add("jarque_bera", rep.jarque_bera);
        out_rep.add("normalization", *normalization);
        out_rep.add("n_samples", uint64_t(rep.n_samples));
        out_rep.add("n_terms", uint64_t(rep.n_terms));
        out_rep.add("seed", uint64_t(rep.seed));
        std::vector<std::pair<double, double>> hist;
        for (size_t i = 0; i < bins; ++i)
          hist.emplace_back(centers[i], double(counts[i]));
        out_rep.add_pairs("histogram", hist);
        pwcli::write_output(*output, out_rep.render());
      }
    });
  }

  // --- walk ---
  {
    auto* cmd = app.add_subcommand("walk", "partial-sum random walk");
    auto family = std::make_shared<std::string>("primes");
    auto beta = std::make_shared<double>(1.5);
    auto nterms = std::make_shared<uint64_t>(1000);
    auto x = std::make_shared<double>(0.25);
    auto omega = std::make_shared<std::string>("pi");
    cmd->add_option("--family", *family);
    cmd->add_option("--beta", *beta);
    cmd->add_option("--nterms", *nterms);
    cmd->add_option("--x", *x)->required();
    cmd->add_option("--omega", *omega)->check(CLI::IsMember({"pi", "2pi"}));
    auto format = std::make_shared<std::string>("csv");
    auto output = std::make_shared<std::string>("-");
    cmd->add_option("--format", *format)->check(CLI::IsMember({"csv", "svg"}));
    cmd->add_option("--output", *output);
    cmd->callback([=] {
      pw_walk_family fam = parse_family(*family);
      TablePtr table(nullptr, &pw_prime_table_free);
      if (fam == PW_FAMILY_PRIMES || fam == PW_FAMILY_PRIME_POWERS)
        table = make_table(limit_for_count(*nterms));
      std::vector<double> sums(*nterms);
      check(pw_walk(fam, *beta, *nterms, *x,
                    *omega == "pi" ? PW_ANGULAR_PI : PW_ANGULAR_TWO_PI,
                    table.get(), sums.data()));
      pwcli::ConfigEcho cfg;
      cfg.set("family", *family);
      if (fam == PW_FAMILY_PRIME_POWERS) cfg.set("beta", *beta);
      cfg.set("nterms", *nterms);
      cfg.set("x", *x);
      cfg.set("omega", *omega);
      cfg.set("format", *format);
      std::string config = cfg.line("walk");
      pwcli::CsvColumn ck{"k", {}}, cs{"s", sums};
      for (uint64_t k = 1; k <= *nterms; ++k) ck.values.push_back(double(k));
      if (*format == "svg") {
        pwcli::write_output(*output,
                            pwcli::render_svg(config, {{ck.values, cs.values}},
                                              "k", "S(x,k)"));
      } else {
        pwcli::write_output(*output, pwcli::render_csv(config, {ck, cs}));
      }
    });
  }

  // --- figures ---
  {
    auto* cmd = app.add_subcommand("figures", "reproduction recipes");
    auto target = std::make_shared<std::string>("all");
    auto outdir = std::make_shared<std::string>(".");
    cmd->add_option("--target", *target)
        ->check(CLI::IsMember({"all", "fig1", "fig2", "fig3", "fig4", "fig5",
                               "fig6", "fig7", "fig8", "fig9", "fig10"}));
    cmd->add_option("--outdir", *outdir);
    cmd->callback([=] { run_figures(*target, *outdir); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: status=USAGE message=\"" << e.what() << "\"\n";
    return 2;
  } catch (const PwFailure& e) {
    std::cerr << "error: status=" << pw_status_name(e.status) << " message=\""
              << e.message << "\"\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: status=RUNTIME message=\"" << e.what() << "\"\n";
    return 3;
  }
  return 0;
}
