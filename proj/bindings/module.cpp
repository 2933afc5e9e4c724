// Python bindings for the main operations.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "trialsig/binom.hpp"
#include "trialsig/bivariate.hpp"
#include "trialsig/contdist.hpp"
#include "trialsig/distribution_io.hpp"
#include "trialsig/errors.hpp"
#include "trialsig/mc_oracle.hpp"
#include "trialsig/samplesize.hpp"
#include "trialsig/version.hpp"

namespace py = pybind11;
namespace ts = trialsig;

using ts::quadrature::QuadratureConfig;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuum-limit binomial significance, trial sizing and "
            "continuous-distribution tools";
  m.attr("__version__") = ts::kVersion;

  py::register_exception<ts::NoSolutionError>(m, "NoSolutionError");
  py::register_exception<ts::ConvergenceError>(m, "ConvergenceError");

  py::class_<QuadratureConfig>(m, "QuadratureConfig")
      .def(py::init([](int panels, bool refine, double rel_tol,
                       int max_doublings) {
             return QuadratureConfig{panels, refine, rel_tol, max_doublings};
           }),
           py::arg("panels") = 10000, py::arg("refine") = true,
           py::arg("rel_tol") = 1e-9, py::arg("max_doublings") = 6)
      .def_readwrite("panels", &QuadratureConfig::panels)
      .def_readwrite("refine", &QuadratureConfig::refine)
      .def_readwrite("rel_tol", &QuadratureConfig::rel_tol)
      .def_readwrite("max_doublings", &QuadratureConfig::max_doublings);

  py::class_<ts::samplesize::SampleSizeResult>(m, "SampleSizeResult")
      .def_readonly("m_real", &ts::samplesize::SampleSizeResult::m_real)
      .def_readonly("m_int", &ts::samplesize::SampleSizeResult::m_int)
      .def_readonly("achieved_p", &ts::samplesize::SampleSizeResult::achieved_p)
      .def("__repr__", [](const ts::samplesize::SampleSizeResult& r) {
        return "SampleSizeResult(m_real=" + std::to_string(r.m_real) +
               ", m_int=" + std::to_string(r.m_int) +
               ", achieved_p=" + std::to_string(r.achieved_p) + ")";
      });

  py::class_<ts::contdist::DiscreteDistribution>(m, "DiscreteDistribution")
      .def(py::init([](double origin, double step, std::vector<double> mass) {
             ts::contdist::DiscreteDistribution d{origin, step, std::move(mass)};
             d.validate();
             return d;
           }),
           py::arg("origin"), py::arg("step"), py::arg("mass"))
      .def_readonly("origin", &ts::contdist::DiscreteDistribution::origin)
      .def_readonly("step", &ts::contdist::DiscreteDistribution::step)
      .def_readonly("mass", &ts::contdist::DiscreteDistribution::mass)
      .def("mean", &ts::contdist::DiscreteDistribution::mean)
      .def("variance", &ts::contdist::DiscreteDistribution::variance)
      .def("values", [](const ts::contdist::DiscreteDistribution& d) {
        std::vector<double> v(d.mass.size());
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = d.value_at(i);
        return v;
      });

  py::class_<ts::mc::McEstimate>(m, "McEstimate")
      .def_readonly("value", &ts::mc::McEstimate::value)
      .def_readonly("std_err", &ts::mc::McEstimate::std_err)
      .def_readonly("draws", &ts::mc::McEstimate::draws)
      .def("__repr__", [](const ts::mc::McEstimate& e) {
        return "McEstimate(value=" + std::to_string(e.value) +
               ", std_err=" + std::to_string(e.std_err) +
               ", draws=" + std::to_string(e.draws) + ")";
      });

  // one-arm machinery
  m.def("density", &ts::binom::density, py::arg("q"), py::arg("big_q"),
        py::arg("m"));
  m.def("tail_discrete", &ts::binom::tail_discrete, py::arg("q"),
        py::arg("big_q"), py::arg("m"));
  m.def(
      "tail_continuum",
      [](double q, double big_q, double m, const QuadratureConfig& cfg) {
        return ts::binom::tail_continuum(q, big_q, m, cfg);
      },
      py::arg("q"), py::arg("big_q"), py::arg("m"),
      py::arg("quad") = QuadratureConfig{});
  m.def(
      "significance",
      [](double q, double m, double q0) {
        return ts::binom::significance(q, m, q0);
      },
      py::arg("q"), py::arg("m"), py::arg("q0"));
  m.def(
      "significance_quadrature",
      [](double q, double m, double q0, const QuadratureConfig& cfg) {
        return ts::binom::significance_quadrature({{q, m}, q0}, cfg);
      },
      py::arg("q"), py::arg("m"), py::arg("q0"),
      py::arg("quad") = QuadratureConfig{});
  m.def(
      "significance_curve",
      [](double q, double m, const std::vector<double>& grid) {
        const auto pts = ts::binom::significance_curve({q, m}, grid);
        std::vector<std::pair<double, double>> out;
        out.reserve(pts.size());
        for (const auto& p : pts) out.emplace_back(p.q0, p.p);
        return out;
      },
      py::arg("q"), py::arg("m"), py::arg("grid"));

  // two-arm machinery
  m.def(
      "superiority",
      [](double q, double pi, double m, double n, double delta,
         const QuadratureConfig& cfg) {
        return ts::bivariate::superiority({{q, m}, {pi, n}, delta}, cfg);
      },
      py::arg("q"), py::arg("pi"), py::arg("m"), py::arg("n"),
      py::arg("delta") = 0.0, py::arg("quad") = QuadratureConfig{});
  m.def(
      "superiority_exact",
      [](double q, double pi, double m, double n, double delta, int max_total) {
        return ts::bivariate::superiority_exact({{q, m}, {pi, n}, delta},
                                                max_total);
      },
      py::arg("q"), py::arg("pi"), py::arg("m"), py::arg("n"),
      py::arg("delta") = 0.0, py::arg("max_total") = 200);
  m.def("inc_beta_integer_series", &ts::bivariate::inc_beta_integer_series,
        py::arg("n"), py::arg("pi_count"), py::arg("x"));
  m.def(
      "joint_density",
      [](double q, double big_q, double m, double pi, double big_pi, double n) {
        return ts::bivariate::joint_density(q, big_q, m, pi, big_pi, n);
      },
      py::arg("q"), py::arg("big_q"), py::arg("m"), py::arg("pi"),
      py::arg("big_pi"), py::arg("n"));

  // sample sizes
  m.def("required_trials", &ts::samplesize::required_trials, py::arg("q"),
        py::arg("q0"), py::arg("target"));
  m.def(
      "required_trials_bivariate",
      [](double q, double pi, double delta, double target, double ratio,
         const QuadratureConfig& cfg) {
        return ts::samplesize::required_trials_bivariate(q, pi, delta, target,
                                                         ratio, cfg);
      },
      py::arg("q"), py::arg("pi"), py::arg("delta"), py::arg("target"),
      py::arg("ratio") = 1.0, py::arg("quad") = QuadratureConfig{});

  // continuous distributions
  m.def(
      "superiority_gaussian",
      [](double mu1, double sigma1, double mu2, double sigma2, double delta) {
        return ts::contdist::superiority_gaussian({mu1, sigma1}, {mu2, sigma2},
                                                  delta);
      },
      py::arg("mu1"), py::arg("sigma1"), py::arg("mu2"), py::arg("sigma2"),
      py::arg("delta") = 0.0);
  m.def(
      "superiority_gaussian_quadrature",
      [](double mu1, double sigma1, double mu2, double sigma2, double delta,
         double tol) {
        return ts::contdist::superiority_gaussian_quadrature(
            {mu1, sigma1}, {mu2, sigma2}, delta, tol);
      },
      py::arg("mu1"), py::arg("sigma1"), py::arg("mu2"), py::arg("sigma2"),
      py::arg("delta") = 0.0, py::arg("tol") = 1e-12);
  m.def("superiority_tabulated", &ts::contdist::superiority_tabulated,
        py::arg("p1"), py::arg("p2"), py::arg("delta") = 0.0);
  m.def("mean_sampling_distribution", &ts::contdist::mean_sampling_distribution,
        py::arg("base"), py::arg("n"), py::arg("size_cap") = (1u << 22));
  m.def(
      "truncated_moments",
      [](double mu, double sigma) {
        const auto ms = ts::contdist::truncated_moments({mu, sigma});
        return std::make_pair(ms.mean, ms.sd);
      },
      py::arg("mu"), py::arg("sigma"));
  m.def(
      "fit_truncated_gaussian",
      [](double mean, double sd) {
        const auto fit = ts::contdist::fit_truncated_gaussian({mean, sd});
        return std::make_pair(fit.mu, fit.sigma);
      },
      py::arg("mean"), py::arg("sd"));

  // Monte Carlo oracle
  m.def(
      "mc_significance",
      [](double q, double m, double q0, std::uint64_t seed, long long draws,
         int threads) {
        return ts::mc::mc_significance(q, m, q0, {seed, draws}, threads);
      },
      py::arg("q"), py::arg("m"), py::arg("q0"), py::arg("seed") = 0,
      py::arg("draws") = 1000000, py::arg("threads") = 1);
  m.def(
      "mc_superiority",
      [](double q, double pi, double m, double n, double delta,
         std::uint64_t seed, long long draws, int threads) {
        return ts::mc::mc_superiority({{q, m}, {pi, n}, delta}, {seed, draws},
                                      threads);
      },
      py::arg("q"), py::arg("pi"), py::arg("m"), py::arg("n"),
      py::arg("delta") = 0.0, py::arg("seed") = 0, py::arg("draws") = 1000000,
      py::arg("threads") = 1);
  m.def(
      "mc_mean_distribution",
      [](const ts::contdist::DiscreteDistribution& base, long long n,
         long long repetitions, std::uint64_t seed, std::size_t size_cap,
         int threads) {
        return ts::mc::mc_mean_distribution(base, n, repetitions,
                                            {seed, 1000000}, size_cap, threads);
      },
      py::arg("base"), py::arg("n"), py::arg("repetitions"),
      py::arg("seed") = 0, py::arg("size_cap") = (1u << 22),
      py::arg("threads") = 1);

  // distribution CSV round trip
  m.def("load_distribution_csv",
        [](const std::string& path) { return ts::io::load_distribution_csv(path); },
        py::arg("path"));
}
