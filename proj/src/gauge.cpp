#include "symdisc/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>

namespace symdisc {

namespace {

constexpr int kMaxScaleSteps = 64;

}  // namespace

double gauge_h(const DomainMembership& member, const Weights& w, std::span<const Complex> z,
               const Tolerances& tol) {
  if (w.size() != z.size()) throw std::invalid_argument("weights and point differ in dimension");
  if (std::all_of(z.begin(), z.end(), [](const Complex& c) { return c == Complex{}; })) return 0.0;

  const auto inside = [&](double lambda) {
    return member(pi_action(w, Complex(1.0 / lambda, 0.0), z)) == Verdict::AllInside;
  };

  double lo = 1.0;
  double hi = 1.0;
  if (inside(1.0)) {
    int steps = 0;
    while (inside(lo)) {
      if (++steps > kMaxScaleSteps) throw std::domain_error("not a bounded balanced domain along this ray");
      hi = lo;
      lo *= 0.5;
    }
  } else {
    int steps = 0;
    while (!inside(hi)) {
      if (++steps > kMaxScaleSteps) throw std::domain_error("not a bounded balanced domain along this ray");
      lo = hi;
      hi *= 2.0;
    }
  }

  while (hi - lo > tol.bisect_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (inside(mid) ? hi : lo) = mid;
  }
  return 0.5 * (lo + hi);
}

SubmeanReport log_gauge_submean_check(const DomainMembership& member, const Weights& w,
                                      std::span<const Complex> z, std::span<const Complex> direction,
                                      double radius, int samples, std::uint64_t seed,
                                      const Tolerances& tol, double slack) {
  if (samples < 16) throw std::invalid_argument("sub-mean check needs at least 16 samples");
  if (direction.size() != z.size()) throw std::invalid_argument("direction and point differ in dimension");

  std::mt19937_64 rng(seed);
  const double offset = static_cast<double>(rng() >> 11) * 0x1.0p-53 * 2.0 * std::numbers::pi / samples;

  SubmeanReport report;
  report.lhs = std::log(gauge_h(member, w, z, tol));

  std::vector<Complex> point(z.size());
  double sum = 0.0;
  for (int j = 0; j < samples; ++j) {
    const Complex u = std::polar(radius, offset + 2.0 * std::numbers::pi * j / samples);
    for (std::size_t i = 0; i < z.size(); ++i) point[i] = z[i] + u * direction[i];
    sum += std::log(gauge_h(member, w, point, tol));
  }
  report.rhs = sum / samples;
  report.pass = report.lhs <= report.rhs + slack;
  return report;
}

}  // namespace symdisc
