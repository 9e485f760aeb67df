#include "symdisc/roots.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <string>

namespace symdisc {

namespace {

constexpr double kResidualBound = 1e-8;

// Sum |a_j| x^(n-j): the rounding-error envelope of Horner at |z| = x.
double abs_envelope(std::span<const Complex> c, double x) {
  double acc = 0.0;
  for (const auto& a : c) acc = acc * x + std::abs(a);
  return acc;
}

std::vector<double> residuals_of(const Poly& p, const std::vector<Complex>& z) {
  std::vector<double> r(z.size());
  std::transform(z.begin(), z.end(), r.begin(), [&](Complex x) { return scaled_residual(p, x); });
  return r;
}

std::string describe(const std::vector<double>& residuals) {
  const double worst = residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
  return "root iteration did not converge (worst scaled residual " + std::to_string(worst) + ")";
}

}  // namespace

RootFindingError::RootFindingError(std::vector<Complex> best_iterate, std::vector<double> residuals)
    : std::runtime_error(describe(residuals)),
      best_iterate_(std::move(best_iterate)),
      residuals_(std::move(residuals)) {}

double scaled_residual(const Poly& p, Complex z) {
  const double scale = p.max_coeff_modulus() * std::pow(std::max(1.0, std::abs(z)), p.degree());
  return std::abs(eval(p, z)) / scale;
}

std::vector<Complex> find_roots(const Poly& p, const Tolerances& tol, std::uint64_t seed) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("find_roots needs degree >= 1");
  if (p.leading() == Complex{}) throw std::domain_error("find_roots needs a nonzero leading coefficient");

  std::vector<Complex> monic(p.coeffs().begin(), p.coeffs().end());
  const Complex lead = monic.front();
  for (auto& a : monic) a /= lead;
  const Poly q(monic);

  // Start on a circle outside every root, rotated by a seed-derived phase.
  std::mt19937_64 rng(seed);
  const double phase = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi;
  const double radius = 1.1 * cauchy_bound(q);
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    z[k] = std::polar(radius, phase + 0.25 + 2.0 * std::numbers::pi * k / n);
  }

  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double backward_bound = 4.0 * (n + 1) * eps;

  for (int sweep = 0; sweep < tol.root_iter_max; ++sweep) {
    double max_step = 0.0;
    for (int i = 0; i < n; ++i) {
      Complex den{1.0, 0.0};
      for (int j = 0; j < n; ++j) {
        if (j != i) den *= z[i] - z[j];
      }
      if (den == Complex{}) {
        // Coincident iterates; nudge apart.
        z[i] += std::polar(1e-8 * std::max(1.0, std::abs(z[i])), 1.0 + i);
        max_step = std::numeric_limits<double>::infinity();
        continue;
      }
      const Complex step = eval(q, z[i]) / den;
      z[i] -= step;
      max_step = std::max(max_step, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }

    bool settled = max_step <= tol.root_iter_tol;
    if (!settled) {
      settled = std::all_of(z.begin(), z.end(), [&](Complex x) {
        return std::abs(eval(q, x)) <= backward_bound * abs_envelope(q.coeffs(), std::abs(x));
      });
    }
    if (settled) {
      auto res = residuals_of(p, z);
      if (std::all_of(res.begin(), res.end(), [](double r) { return r < kResidualBound; })) return z;
    }
  }
  throw RootFindingError(z, residuals_of(p, z));
}

double max_root_modulus(const Poly& p, const Tolerances& tol, std::uint64_t seed) {
  double m = 0.0;
  for (const auto& z : find_roots(p, tol, seed)) m = std::max(m, std::abs(z));
  return m;
}

RootLocation root_oracle_location(const Poly& p, const Tolerances& tol, std::uint64_t seed) {
  const Poly q = normalize(p);
  RootLocation loc;
  if (q.degree() == 0) {
    loc.verdict = Verdict::AllInside;
    loc.max_modulus_estimate = 0.0;
    return loc;
  }
  const double m = max_root_modulus(q, tol, seed);
  loc.max_modulus_estimate = m;
  if (m < 1.0 - tol.boundary_band) {
    loc.verdict = Verdict::AllInside;
  } else if (m > 1.0 + tol.boundary_band) {
    loc.verdict = Verdict::NotAllInside;
  } else {
    loc.verdict = Verdict::Indeterminate;
  }
  return loc;
}

}  // namespace symdisc
