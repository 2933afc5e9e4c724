// Command-line front end: one subcommand per operation, JSON or CSV output.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "trialsig/binom.hpp"
#include "trialsig/bivariate.hpp"
#include "trialsig/contdist.hpp"
#include "trialsig/distribution_io.hpp"
#include "trialsig/errors.hpp"
#include "trialsig/mc_oracle.hpp"
#include "trialsig/samplesize.hpp"
#include "trialsig/version.hpp"

namespace ts = trialsig;
using nlohmann::ordered_json;

namespace {

// ---------------------------------------------------------------- output --

std::string fmt17(double v) {
  if (!std::isfinite(v)) return "null";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// JSON writer with doubles at 17 significant digits.
void dump_json(const ordered_json& j, std::string& out) {
  switch (j.type()) {
    case nlohmann::detail::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : j.items()) {
        if (!first) out += ',';
        first = false;
        out += ordered_json(k).dump();
        out += ':';
        dump_json(v, out);
      }
      out += '}';
      break;
    }
    case nlohmann::detail::value_t::array: {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ',';
        dump_json(j[i], out);
      }
      out += ']';
      break;
    }
    case nlohmann::detail::value_t::number_float:
      out += fmt17(j.get<double>());
      break;
    default:
      out += j.dump();
  }
}

std::string csv_cell(const ordered_json& j) {
  if (j.is_number_float()) return fmt17(j.get<double>());
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (const char c : s) {
        if (c == '"') q += '"';
        q += c;
      }
      return q + "\"";
    }
    return s;
  }
  return j.dump();
}

void flatten(const ordered_json& j, const std::string& prefix,
             std::vector<std::pair<std::string, ordered_json>>& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items())
      flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (!j.is_array()) {
    out.emplace_back(prefix, j);
  }
}

struct Emitter {
  std::string format = "json";

  void scalar(const ordered_json& envelope) const {
    if (format == "json") {
      std::string out;
      dump_json(envelope, out);
      std::cout << out << "\n";
      return;
    }
    std::vector<std::pair<std::string, ordered_json>> cells;
    flatten(envelope, "", cells);
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << cells[i].first << (i + 1 < cells.size() ? "," : "\n");
    for (std::size_t i = 0; i < cells.size(); ++i)
      std::cout << csv_cell(cells[i].second)
                << (i + 1 < cells.size() ? "," : "\n");
  }

  // table payloads (curve points, distributions) become a plain CSV table
  void table(const ordered_json& envelope, const std::string& col_a,
             const std::string& col_b, const ordered_json& rows) const {
    if (format == "json") {
      scalar(envelope);
      return;
    }
    std::cout << col_a << "," << col_b << "\n";
    for (const auto& row : rows)
      std::cout << fmt17(row[0].get<double>()) << ","
                << fmt17(row[1].get<double>()) << "\n";
  }
};

ordered_json envelope(const std::string& command, ordered_json inputs,
                      ordered_json result, ordered_json precision) {
  return ordered_json{{"command", command},
                      {"inputs", std::move(inputs)},
                      {"result", std::move(result)},
                      {"precision", std::move(precision)},
                      {"version", ts::kVersion}};
}

// ---------------------------------------------------------------- inputs --

// Accepts plain numbers and exact count ratios like "154/162".
double parse_number(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) {
      std::size_t used = 0;
      const double v = std::stod(text, &used);
      if (used != text.size()) throw std::invalid_argument(text);
      return v;
    }
    const double num = std::stod(text.substr(0, slash));
    const double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw std::domain_error("zero denominator in " + text);
    return num / den;
  } catch (const std::invalid_argument&) {
    throw std::domain_error("not a number: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw std::domain_error("number out of range: '" + text + "'");
  }
}

ordered_json dist_json(const ts::contdist::DiscreteDistribution& d) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < d.mass.size(); ++i)
    rows.push_back({d.value_at(i), d.mass[i]});
  return rows;
}

struct Globals {
  Emitter emit;
  ts::quadrature::QuadratureConfig quad;
  std::uint64_t seed = 0;
  long long draws = 1'000'000;
};

// ------------------------------------------------------------- commands ---

void add_significance(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "significance", "Posterior probability that the true efficacy exceeds q0");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  auto q0 = std::make_shared<std::string>();
  auto method = std::make_shared<std::string>("inc-beta");
  sub->add_option("--q", *q, "observed efficacy fraction (number or a/b)")->required();
  sub->add_option("--m", *m, "trial count (real, > 0)")->required();
  sub->add_option("--q0", *q0, "efficacy threshold in [0,1]")->required();
  sub->add_option("--method", *method, "inc-beta | quadrature")
      ->check(CLI::IsMember({"inc-beta", "quadrature"}));
  sub->callback([&g, q, m, q0, method] {
    const ts::binom::SignificanceQuery query{
        {parse_number(*q), parse_number(*m)}, parse_number(*q0)};
    double p;
    ordered_json precision;
    if (*method == "quadrature") {
      p = ts::binom::significance_quadrature(query, g.quad);
      precision = {{"panels", g.quad.panels}, {"rel_tol", g.quad.rel_tol}};
    } else {
      p = ts::binom::significance(query);
      precision = {{"rel_tol", 1e-12}};
    }
    g.emit.scalar(envelope("significance",
                           {{"q", query.obs.q},
                            {"m", query.obs.trials},
                            {"q0", query.q0},
                            {"method", *method}},
                           {{"p", p}}, precision));
  });
}

void add_curve(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "curve", "Significance over a uniform grid of thresholds (columns Q0,p)");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  auto points = std::make_shared<int>(201);
  sub->add_option("--q", *q, "observed efficacy fraction")->required();
  sub->add_option("--m", *m, "trial count")->required();
  sub->add_option("--points", *points, "grid size (default 201)");
  sub->callback([&g, q, m, points] {
    const ts::binom::TrialObservation obs{parse_number(*q), parse_number(*m)};
    const auto grid = ts::binom::uniform_grid(*points);
    const auto curve = ts::binom::significance_curve(obs, grid);
    ordered_json rows = ordered_json::array();
    for (const auto& pt : curve) rows.push_back({pt.q0, pt.p});
    const auto env = envelope(
        "curve",
        {{"q", obs.q}, {"m", obs.trials}, {"points", *points}},
        {{"points", rows}}, {{"rel_tol", 1e-12}});
    g.emit.table(env, "Q0", "p", rows);
  });
}

void add_tail(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "tail", "Probability of measuring a fraction above q when Q is true");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto big_q = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  auto method = std::make_shared<std::string>("continuum");
  sub->add_option("--q", *q, "measured fraction threshold")->required();
  sub->add_option("--Q,--true-q", *big_q, "true efficacy")->required();
  sub->add_option("--m", *m, "trial count")->required();
  sub->add_option("--method", *method, "continuum | discrete")
      ->check(CLI::IsMember({"continuum", "discrete"}));
  sub->callback([&g, q, big_q, m, method] {
    const double qv = parse_number(*q);
    const double big_qv = parse_number(*big_q);
    const double mv = parse_number(*m);
    double w;
    ordered_json precision;
    if (*method == "discrete") {
      if (std::fabs(mv - std::nearbyint(mv)) > 1e-9)
        throw std::domain_error("tail --method discrete requires integer --m");
      w = ts::binom::tail_discrete(qv, big_qv,
                                   static_cast<long long>(std::nearbyint(mv)));
      precision = {{"abs_tol", 1e-12}};
    } else {
      w = ts::binom::tail_continuum(qv, big_qv, mv, g.quad);
      precision = {{"panels", g.quad.panels}, {"rel_tol", g.quad.rel_tol}};
    }
    g.emit.scalar(envelope(
        "tail",
        {{"q", qv}, {"Q", big_qv}, {"m", mv}, {"method", *method}},
        {{"w", w}}, precision));
  });
}

void add_sample_size(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "sample-size", "Minimal trial count for a one-arm significance target");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto q0 = std::make_shared<std::string>();
  auto target = std::make_shared<std::string>();
  sub->add_option("--q", *q, "observed efficacy fraction")->required();
  sub->add_option("--q0", *q0, "efficacy threshold")->required();
  sub->add_option("--target", *target, "required significance in (0,1)")->required();
  sub->callback([&g, q, q0, target] {
    const auto r = ts::samplesize::required_trials(
        parse_number(*q), parse_number(*q0), parse_number(*target));
    g.emit.scalar(envelope(
        "sample-size",
        {{"q", parse_number(*q)}, {"q0", parse_number(*q0)},
         {"target", parse_number(*target)}},
        {{"m_real", r.m_real}, {"m_int", r.m_int}, {"achieved_p", r.achieved_p}},
        {{"m_tol", 1e-3}, {"rel_tol", 1e-12}}));
  });
}

void add_bivariate(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "bivariate", "P(Q >= Pi + delta) for paired test/control observations");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto pi = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  auto n = std::make_shared<std::string>();
  auto delta = std::make_shared<std::string>("0");
  auto exact = std::make_shared<bool>(false);
  sub->add_option("--q", *q, "test-arm fraction")->required();
  sub->add_option("--pi", *pi, "control-arm fraction")->required();
  sub->add_option("--m", *m, "test-arm trials")->required();
  sub->add_option("--n", *n, "control-arm trials")->required();
  sub->add_option("--delta", *delta, "superiority buffer in [0,1)");
  sub->add_flag("--exact", *exact,
                "integer-count exact path instead of quadrature");
  sub->callback([&g, q, pi, m, n, delta, exact] {
    const ts::bivariate::BivariateDesign design{
        {parse_number(*q), parse_number(*m)},
        {parse_number(*pi), parse_number(*n)},
        parse_number(*delta)};
    ordered_json inputs{{"q", design.test.q},
                        {"pi", design.control.q},
                        {"m", design.test.trials},
                        {"n", design.control.trials},
                        {"delta", design.delta}};
    if (*exact) {
      inputs["exact"] = true;
      const double p = ts::bivariate::superiority_exact(design);
      g.emit.scalar(envelope("bivariate", inputs, {{"p", p}},
                             {{"method", "exact"}, {"abs_tol", 1e-12}}));
      return;
    }
    const auto rep = ts::bivariate::superiority_report(design, g.quad);
    g.emit.scalar(envelope("bivariate", inputs, {{"p", rep.value}},
                           {{"panels_used", rep.panels_used},
                            {"last_delta", rep.last_delta},
                            {"rel_tol", g.quad.rel_tol}}));
  });
}

void add_bivariate_sample_size(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "bivariate-sample-size",
      "Minimal per-arm trial count for a two-arm superiority target");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto pi = std::make_shared<std::string>();
  auto delta = std::make_shared<std::string>("0");
  auto target = std::make_shared<std::string>();
  auto ratio = std::make_shared<std::string>("1");
  sub->add_option("--q", *q, "test-arm fraction")->required();
  sub->add_option("--pi", *pi, "control-arm fraction")->required();
  sub->add_option("--delta", *delta, "superiority buffer");
  sub->add_option("--target", *target, "required probability in (0,1)")->required();
  sub->add_option("--ratio", *ratio, "control/test size ratio N/M");
  sub->callback([&g, q, pi, delta, target, ratio] {
    const auto r = ts::samplesize::required_trials_bivariate(
        parse_number(*q), parse_number(*pi), parse_number(*delta),
        parse_number(*target), parse_number(*ratio), g.quad);
    g.emit.scalar(envelope(
        "bivariate-sample-size",
        {{"q", parse_number(*q)}, {"pi", parse_number(*pi)},
         {"delta", parse_number(*delta)}, {"target", parse_number(*target)},
         {"ratio", parse_number(*ratio)}},
        {{"m_real", r.m_real}, {"m_int", r.m_int}, {"achieved_p", r.achieved_p}},
        {{"m_tol", 1e-3}, {"rel_tol", g.quad.rel_tol}}));
  });
}

void add_superiority(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "superiority",
      "P(x2 >= x1 + delta) for Gaussian specs or tabulated distributions");
  sub->fallthrough();
  auto mu1 = std::make_shared<std::string>();
  auto sigma1 = std::make_shared<std::string>();
  auto mu2 = std::make_shared<std::string>();
  auto sigma2 = std::make_shared<std::string>();
  auto dist1 = std::make_shared<std::string>();
  auto dist2 = std::make_shared<std::string>();
  auto delta = std::make_shared<std::string>("0");
  auto method = std::make_shared<std::string>("closed");
  auto* o_mu1 = sub->add_option("--mu1", *mu1, "sample-1 mean");
  sub->add_option("--sigma1", *sigma1, "sample-1 sd");
  sub->add_option("--mu2", *mu2, "sample-2 mean");
  sub->add_option("--sigma2", *sigma2, "sample-2 sd");
  auto* o_d1 = sub->add_option("--dist1", *dist1, "sample-1 CSV (value,mass)");
  sub->add_option("--dist2", *dist2, "sample-2 CSV (value,mass)");
  sub->add_option("--delta", *delta, "required margin");
  sub->add_option("--method", *method,
                  "closed | quadrature (Gaussian cross-check path)")
      ->check(CLI::IsMember({"closed", "quadrature"}));
  o_mu1->excludes(o_d1);
  sub->callback([&g, mu1, sigma1, mu2, sigma2, dist1, dist2, delta, method] {
    const double d = parse_number(*delta);
    if (!dist1->empty() || !dist2->empty()) {
      if (dist1->empty() || dist2->empty())
        throw std::domain_error("superiority: both --dist1 and --dist2 required");
      const auto p1 = ts::io::load_distribution_csv(*dist1);
      const auto p2 = ts::io::load_distribution_csv(*dist2);
      const double p = ts::contdist::superiority_tabulated(p1, p2, d);
      g.emit.scalar(envelope(
          "superiority",
          {{"dist1", *dist1}, {"dist2", *dist2}, {"delta", d},
           {"method", "tabulated"}},
          {{"p", p}}, {{"abs_tol", 1e-14}}));
      return;
    }
    if (mu1->empty() || sigma1->empty() || mu2->empty() || sigma2->empty())
      throw std::domain_error(
          "superiority: provide --mu1/--sigma1/--mu2/--sigma2 or --dist1/--dist2");
    const ts::contdist::GaussianSpec g1{parse_number(*mu1), parse_number(*sigma1)};
    const ts::contdist::GaussianSpec g2{parse_number(*mu2), parse_number(*sigma2)};
    const double p = (*method == "quadrature")
                         ? ts::contdist::superiority_gaussian_quadrature(g1, g2, d)
                         : ts::contdist::superiority_gaussian(g1, g2, d);
    g.emit.scalar(envelope("superiority",
                           {{"mu1", g1.mu}, {"sigma1", g1.sigma},
                            {"mu2", g2.mu}, {"sigma2", g2.sigma},
                            {"delta", d}, {"method", *method}},
                           {{"p", p}},
                           {{"abs_tol", *method == "quadrature" ? 1e-12 : 1e-15}}));
  });
}

void add_mean_dist(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "mean-dist",
      "Distribution of the mean of n draws (exact convolution or sampled)");
  sub->fallthrough();
  auto dist = std::make_shared<std::string>();
  auto n = std::make_shared<long long>(1);
  auto reps = std::make_shared<long long>(0);
  sub->add_option("--dist", *dist, "base distribution CSV (value,mass)")->required();
  sub->add_option("--n", *n, "draws per mean")->required();
  sub->add_option("--repetitions", *reps,
                  "sample this many means instead of convolving exactly");
  sub->callback([&g, dist, n, reps] {
    const auto base = ts::io::load_distribution_csv(*dist);
    ts::contdist::DiscreteDistribution out;
    ordered_json precision;
    ordered_json inputs{{"dist", *dist}, {"n", *n}};
    if (*reps > 0) {
      out = ts::mc::mc_mean_distribution(base, *n, *reps,
                                         {g.seed, std::max(g.draws, 1000LL)});
      inputs["repetitions"] = *reps;
      inputs["seed"] = g.seed;
      precision = {{"std_err_of_mean",
                    std::sqrt(base.variance() / static_cast<double>(*n) /
                              static_cast<double>(*reps))}};
    } else {
      out = ts::contdist::mean_sampling_distribution(base, *n);
      precision = {{"abs_tol", 1e-12}};
    }
    ordered_json rows = dist_json(out);
    const auto env = envelope(
        "mean-dist", inputs,
        {{"origin", out.origin}, {"step", out.step}, {"points", rows}},
        precision);
    g.emit.table(env, "value", "mass", rows);
  });
}

void add_trunc_moments(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "trunc-moments", "Observable mean/sd of a Gaussian truncated to x >= 0");
  sub->fallthrough();
  auto mu = std::make_shared<std::string>();
  auto sigma = std::make_shared<std::string>();
  sub->add_option("--mu", *mu, "location of the untruncated Gaussian")->required();
  sub->add_option("--sigma", *sigma, "scale of the untruncated Gaussian")->required();
  sub->callback([&g, mu, sigma] {
    const ts::contdist::GaussianSpec spec{parse_number(*mu), parse_number(*sigma)};
    const auto ms = ts::contdist::truncated_moments(spec);
    g.emit.scalar(envelope("trunc-moments",
                           {{"mu", spec.mu}, {"sigma", spec.sigma}},
                           {{"mean", ms.mean}, {"sd", ms.sd}},
                           {{"rel_tol", 1e-10}}));
  });
}

void add_trunc_fit(CLI::App& app, Globals& g) {
  auto* sub = app.add_subcommand(
      "trunc-fit", "Recover (mu, sigma) from observed truncated mean/sd");
  sub->fallthrough();
  auto mean = std::make_shared<std::string>();
  auto sd = std::make_shared<std::string>();
  sub->add_option("--mean", *mean, "observed mean of the truncated data")->required();
  sub->add_option("--sd", *sd, "observed sd of the truncated data")->required();
  sub->callback([&g, mean, sd] {
    const ts::contdist::TruncatedMoments obs{parse_number(*mean), parse_number(*sd)};
    const auto fit = ts::contdist::fit_truncated_gaussian(obs);
    g.emit.scalar(envelope("trunc-fit", {{"mean", obs.mean}, {"sd", obs.sd}},
                           {{"mu", fit.mu}, {"sigma", fit.sigma}},
                           {{"residual_tol", 1e-8}}));
  });
}

void add_verify(CLI::App& app, Globals& g, int& exit_code) {
  auto* sub = app.add_subcommand(
      "verify",
      "Monte Carlo check of the analytic result; fails beyond 4 std errors");
  sub->fallthrough();
  auto q = std::make_shared<std::string>();
  auto m = std::make_shared<std::string>();
  auto q0 = std::make_shared<std::string>();
  auto pi = std::make_shared<std::string>();
  auto n = std::make_shared<std::string>();
  auto delta = std::make_shared<std::string>("0");
  sub->add_option("--q", *q, "observed/test fraction")->required();
  sub->add_option("--m", *m, "trial count")->required();
  sub->add_option("--q0", *q0, "threshold (one-arm mode)");
  sub->add_option("--pi", *pi, "control fraction (two-arm mode)");
  sub->add_option("--n", *n, "control trials (two-arm mode)");
  sub->add_option("--delta", *delta, "superiority buffer (two-arm mode)");
  sub->callback([&g, &exit_code, q, m, q0, pi, n, delta] {
    const ts::mc::McConfig cfg{g.seed, g.draws};
    double analytic;
    ts::mc::McEstimate est;
    ordered_json inputs;
    if (!pi->empty()) {
      const ts::bivariate::BivariateDesign design{
          {parse_number(*q), parse_number(*m)},
          {parse_number(*pi), n->empty() ? parse_number(*m) : parse_number(*n)},
          parse_number(*delta)};
      analytic = ts::bivariate::superiority(design, g.quad);
      est = ts::mc::mc_superiority(design, cfg);
      inputs = {{"q", design.test.q}, {"m", design.test.trials},
                {"pi", design.control.q}, {"n", design.control.trials},
                {"delta", design.delta}, {"draws", cfg.draws},
                {"seed", cfg.seed}};
    } else {
      if (q0->empty())
        throw std::domain_error("verify: provide --q0 (one-arm) or --pi (two-arm)");
      const double qv = parse_number(*q);
      const double mv = parse_number(*m);
      const double q0v = parse_number(*q0);
      analytic = ts::binom::significance(qv, mv, q0v);
      est = ts::mc::mc_significance(qv, mv, q0v, cfg);
      inputs = {{"q", qv}, {"m", mv}, {"q0", q0v},
                {"draws", cfg.draws}, {"seed", cfg.seed}};
    }
    const double se = est.std_err > 0.0 ? est.std_err : 1e-300;
    const double z = (est.value - analytic) / se;
    const bool ok = std::fabs(z) <= 4.0;
    g.emit.scalar(envelope("verify", inputs,
                           {{"analytic", analytic}, {"mc", est.value},
                            {"std_err", est.std_err}, {"z", z},
                            {"within_4se", ok}},
                           {{"std_err", est.std_err}}));
    if (!ok) exit_code = 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact continuum-limit binomial significance, trial sizing and "
               "continuous-distribution tools, verified against a seeded "
               "Monte Carlo oracle"};
  app.require_subcommand(1);

  Globals g;
  int exit_code = 0;
  app.add_option("--format", g.emit.format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--panels", g.quad.panels, "quadrature panels")
      ->capture_default_str();
  app.add_option("--rel-tol", g.quad.rel_tol, "quadrature relative tolerance")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "Monte Carlo seed")->capture_default_str();
  app.add_option("--draws", g.draws, "Monte Carlo draws")->capture_default_str();

  add_significance(app, g);
  add_curve(app, g);
  add_tail(app, g);
  add_sample_size(app, g);
  add_bivariate(app, g);
  add_bivariate_sample_size(app, g);
  add_superiority(app, g);
  add_mean_dist(app, g);
  add_trunc_moments(app, g);
  add_trunc_fit(app, g);
  add_verify(app, g, exit_code);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ts::NoSolutionError& e) {
    std::string out;
    dump_json({{"error", {{"type", "NoSolution"}, {"message", e.what()}}},
               {"version", ts::kVersion}},
              out);
    std::cout << out << "\n";
    return 1;
  } catch (const ts::ConvergenceError& e) {
    std::string out;
    dump_json({{"error", {{"type", "ConvergenceFailure"}, {"message", e.what()}}},
               {"version", ts::kVersion}},
              out);
    std::cout << out << "\n";
    return 1;
  } catch (const std::length_error& e) {
    std::string out;
    dump_json({{"error", {{"type", "SizeCapExceeded"}, {"message", e.what()}}},
               {"version", ts::kVersion}},
              out);
    std::cout << out << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return exit_code;
}
