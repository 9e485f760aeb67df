#include "symdisc/probe.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "symdisc/gauge.hpp"

namespace symdisc {

namespace {

double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

Complex disc_uniform(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(unit_uniform(rng));
  return std::polar(r, 2.0 * std::numbers::pi * unit_uniform(rng));
}

std::vector<Complex> midpoint_of(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m[i] = 0.5 * (a[i] + b[i]);
  return m;
}

}  // namespace

ProbeReport midpoint_probe(const DomainMembership& member, const PointSampler& sampler, std::int64_t trials,
                           std::uint64_t seed) {
  ProbeReport report;
  std::mt19937_64 rng(seed);
  for (std::int64_t t = 0; t < trials; ++t) {
    auto a = sampler(rng);
    auto b = sampler(rng);
    if (member(a) != Verdict::AllInside || member(b) != Verdict::AllInside)
      throw std::logic_error("sampler produced a point outside the domain");
    report.trials_run = t + 1;
    auto mid = midpoint_of(a, b);
    if (member(mid) == Verdict::NotAllInside) {
      report.found = MidpointViolation{std::move(a), std::move(b), std::move(mid), t};
      break;
    }
  }
  return report;
}

PointSampler gauge_shell_sampler(DomainMembership member, Weights weights, double box_radius, double width,
                                 const Tolerances& tol) {
  if (!(width > 0.0 && width < 1.0)) throw std::invalid_argument("shell width must lie in (0, 1)");
  return [member = std::move(member), weights = std::move(weights), box_radius, width,
          tol](std::mt19937_64& rng) {
    std::vector<Complex> z(weights.size());
    for (int attempt = 0; attempt < 1000; ++attempt) {
      for (auto& c : z) c = disc_uniform(rng, box_radius);
      const double h = gauge_h(member, weights, z, tol);
      if (!(h > 0.0)) continue;
      const double level = 1.0 - width * (0.01 + 0.99 * unit_uniform(rng));
      auto point = pi_action(weights, Complex(level / h, 0.0), z);
      if (member(point) == Verdict::AllInside) return point;
    }
    throw std::runtime_error("shell sampler could not produce an interior point");
  };
}

double example_d_function(std::span<const Complex> z) { return std::norm(z[0]) + std::abs(z[1] + z[0] * z[0]); }

double example_g_function(std::span<const Complex> z) { return std::norm(z[0]) + std::abs(z[1]); }

std::vector<Complex> example_map(std::span<const Complex> z) { return {z[0], z[1] - z[0] * z[0]}; }

DomainMembership cross_domain_membership(double c, const Tolerances& tol) {
  if (!(c > 0.0 && c < 1.0)) throw std::invalid_argument("cross domain needs 0 < c < 1");
  // Minkowski functional of the union is the smaller of the two polydisc gauges.
  return sublevel_membership(
      [c](std::span<const Complex> z) {
        const double a = std::abs(z[0]);
        const double b = std::abs(z[1]);
        return std::min(std::max(a, b / c), std::max(a / c, b));
      },
      tol);
}

BalancedExampleReport balanced_example_check(std::int64_t samples, std::int64_t probe_trials, std::uint64_t seed,
                                             const Tolerances& tol) {
  if (samples < 1) throw std::invalid_argument("balanced_example_check needs samples >= 1");

  const auto in_d = sublevel_membership(example_d_function, tol);
  const auto in_g = sublevel_membership(example_g_function, tol);
  const Weights weights({1, 2});

  BalancedExampleReport report;
  report.samples = samples;
  std::mt19937_64 rng(seed);
  for (std::int64_t s = 0; s < samples; ++s) {
    const std::vector<Complex> z{disc_uniform(rng, 1.5), disc_uniform(rng, 1.5)};

    const Verdict vg = in_g(z);
    const Verdict vd = in_d(example_map(z));
    if (vg == Verdict::Indeterminate || vd == Verdict::Indeterminate) {
      ++report.map_undecided;
    } else if (vg == vd) {
      ++report.map_agreements;
    } else {
      ++report.map_disagreements;
    }

    const Complex lambda = disc_uniform(rng, 1.0);
    const auto scaled = pi_action(weights, lambda, z);
    if (in_d(z) == Verdict::AllInside) {
      ++report.balance_checks;
      if (in_d(scaled) != Verdict::AllInside) ++report.d_balance_failures;
    }
    if (vg == Verdict::AllInside) {
      ++report.balance_checks;
      if (in_g(scaled) != Verdict::AllInside) ++report.g_balance_failures;
    }
  }

  report.probe_d = midpoint_probe(in_d, gauge_shell_sampler(in_d, weights, 1.5, 1e-3, tol), probe_trials, seed + 1);
  report.probe_g = midpoint_probe(in_g, gauge_shell_sampler(in_g, weights, 1.5, 1e-3, tol), probe_trials, seed + 2);
  return report;
}

}  // namespace symdisc
