#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "symdisc/geometry.hpp"

namespace symdisc {

/// Gauge h(z) = inf { lambda > 0 : pi_{1/lambda}(z) in D } of a
/// (k_1, ..., k_n)-balanced domain D given by `member`.
///
/// A point counts as inside only on a margined AllInside verdict. The
/// bracket is found by doubling or halving from lambda = 1, then bisected to
/// relative width tol.bisect_tol. h(0) = 0.
///
/// Throws std::domain_error("not a bounded balanced domain along this ray")
/// when no bracket exists within a factor 2^64.
double gauge_h(const DomainMembership& member, const Weights& w, std::span<const Complex> z,
               const Tolerances& tol = {});

struct SubmeanReport {
  double lhs = 0.0;  ///< log h(z)
  double rhs = 0.0;  ///< mean of log h over the sampled circle
  bool pass = false;
};

/// Discrete sub-mean-value test of log h along the complex line through z
/// in `direction`: log h(z) <= (1/N) sum_j log h(z + radius e^{i theta_j} direction) + slack,
/// theta_j = 2 pi j / N + (seed-derived offset). Requires N >= 16.
SubmeanReport log_gauge_submean_check(const DomainMembership& member, const Weights& w,
                                      std::span<const Complex> z, std::span<const Complex> direction,
                                      double radius, int samples, std::uint64_t seed,
                                      const Tolerances& tol = {}, double slack = 1e-6);

}  // namespace symdisc
