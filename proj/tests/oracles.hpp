#pragma once

// Reference computations used only by the tests. Each one takes a route
// independent of the library code it checks.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "symdisc/poly.hpp"

namespace symdisc::oracle {

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Complex in_disc(std::mt19937_64& rng, double radius) {
  const double r = radius * std::sqrt(uniform(rng, 0.0, 1.0));
  return std::polar(r, uniform(rng, 0.0, 2.0 * M_PI));
}

inline Complex in_square(std::mt19937_64& rng, double half) {
  return {uniform(rng, -half, half), uniform(rng, -half, half)};
}

/// Descending coefficients of prod (zeta - roots[i]).
inline std::vector<Complex> expand_from_roots(const std::vector<Complex>& roots) {
  std::vector<Complex> c{1.0};
  for (const auto& r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i] += c[i];
      next[i + 1] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

/// sigma_k by summing over every k-subset (bitmask enumeration).
inline std::vector<Complex> elementary_symmetric_by_subsets(const std::vector<Complex>& z) {
  const std::size_t n = z.size();
  std::vector<Complex> s(n);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    Complex prod{1.0};
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        prod *= z[i];
        ++k;
      }
    }
    s[static_cast<std::size_t>(k - 1)] += prod;
  }
  return s;
}

/// Product of polynomials in descending coefficients.
inline std::vector<Complex> multiply(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  std::vector<Complex> c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

/// z^j f(z^k) for f given in descending coefficients, by substitution.
inline std::vector<Complex> substitute_power(const std::vector<Complex>& f, int k, int j) {
  const int deg = static_cast<int>(f.size()) - 1;
  std::vector<Complex> g(static_cast<std::size_t>(deg * k + 1));
  for (int i = 0; i <= deg; ++i) g[static_cast<std::size_t>(i * k)] = f[static_cast<std::size_t>(i)];
  std::vector<Complex> zj(static_cast<std::size_t>(j + 1));
  zj[0] = 1.0;
  return multiply(g, zj);
}

/// Smallest achievable max distance when pairing `got` with `want`
/// (greedy nearest pairing, falling back to exhaustive search for n <= 8).
inline double multiset_distance(std::vector<Complex> got, std::vector<Complex> want) {
  if (got.size() != want.size()) return INFINITY;
  double greedy = 0.0;
  {
    std::vector<bool> used(got.size());
    for (const auto& w : want) {
      std::size_t best = 0;
      double bd = INFINITY;
      for (std::size_t i = 0; i < got.size(); ++i) {
        if (!used[i] && std::abs(got[i] - w) < bd) {
          bd = std::abs(got[i] - w);
          best = i;
        }
      }
      used[best] = true;
      greedy = std::max(greedy, bd);
    }
  }
  if (greedy < 1e-9 || got.size() > 8) return greedy;

  std::vector<std::size_t> perm(got.size());
  std::iota(perm.begin(), perm.end(), 0);
  double best = greedy;
  do {
    double d = 0.0;
    for (std::size_t i = 0; i < perm.size() && d < best; ++i) d = std::max(d, std::abs(got[perm[i]] - want[i]));
    best = std::min(best, d);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Factorized value of r at the n = 3 witness midpoint, in terms of
/// P = |p0| and Q = |q0|.
inline double r_midpoint_factorized(double P, double Q) { return (1.0 - Q * Q + P) * (1.0 + Q) * (P + Q - 1.0); }

/// Factorized value of s at the n = 4 witness midpoint.
inline double s_midpoint_factorized(double P, double Q) {
  return (1.0 - Q * Q) * ((1.0 - Q * Q) * (1.0 + Q) - P * P) * (1.0 + P - Q * Q) * (P + Q - 1.0);
}

/// Closed-form sums |p0| + |q0| of the two witness midpoints.
inline double g3_witness_sum() { return (3.0 * std::sqrt(3.0) + 2.0 * std::sqrt(2.0)) / 8.0; }
inline double g4_witness_sum() {
  return (3.0 * std::sqrt(7.0 * (2.0 + std::sqrt(2.0)) / 5.0) + 2.0 * std::sqrt(3.0)) / 10.0;
}

}  // namespace symdisc::oracle
