#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "symdisc/poly.hpp"
#include "symdisc/root_location.hpp"

namespace symdisc {

/// Thrown by find_roots when the iteration does not settle within
/// Tolerances::root_iter_max sweeps.
class RootFindingError : public std::runtime_error {
 public:
  RootFindingError(std::vector<Complex> best_iterate, std::vector<double> residuals);

  const std::vector<Complex>& best_iterate() const { return best_iterate_; }
  const std::vector<double>& residuals() const { return residuals_; }

 private:
  std::vector<Complex> best_iterate_;
  std::vector<double> residuals_;
};

/// Scaled residual |p(z)| / (max|a_j| * max(1, |z|)^n).
double scaled_residual(const Poly& p, Complex z);

/// All n roots (with multiplicity) by Weierstrass / Durand-Kerner
/// simultaneous iteration, started on a circle of radius 1.1 * cauchy_bound
/// with a phase offset derived from `seed`. Order is unspecified.
std::vector<Complex> find_roots(const Poly& p, const Tolerances& tol = {}, std::uint64_t seed = 0);

/// max |root| over find_roots.
double max_root_modulus(const Poly& p, const Tolerances& tol = {}, std::uint64_t seed = 0);

/// Verdict implied by the root oracle: AllInside if the largest modulus is
/// below 1 - band, NotAllInside if above 1 + band.
RootLocation root_oracle_location(const Poly& p, const Tolerances& tol = {}, std::uint64_t seed = 0);

}  // namespace symdisc
