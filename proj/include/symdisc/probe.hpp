#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "symdisc/geometry.hpp"

namespace symdisc {

/// Draws a point that the probed domain contains with margin.
using PointSampler = std::function<std::vector<Complex>(std::mt19937_64&)>;

struct MidpointViolation {
  std::vector<Complex> a;
  std::vector<Complex> b;
  std::vector<Complex> midpoint;
  std::int64_t trial = 0;
};

struct ProbeReport {
  std::optional<MidpointViolation> found;
  std::int64_t trials_run = 0;
};

/// Randomized search for a, b in the domain with 0.5 (a + b) outside it
/// (NotAllInside). Stops at the first hit.
ProbeReport midpoint_probe(const DomainMembership& member, const PointSampler& sampler, std::int64_t trials,
                           std::uint64_t seed);

/// Samples the thin shell {1 - width <= h < 1} of a balanced domain: a
/// uniform point of the polydisc of radius `box_radius` is pushed along its
/// pi-orbit to gauge level 1 - width * u, u uniform in [0.01, 1).
PointSampler gauge_shell_sampler(DomainMembership member, Weights weights, double box_radius, double width,
                                 const Tolerances& tol = {});

/// |z_1|^2 + |z_2 + z_1^2|: defining function of the (1,2)-balanced example
/// domain D = {phi < 1}.
double example_d_function(std::span<const Complex> z);
/// |z_1|^2 + |z_2|: defining function of G = {phi < 1}.
double example_g_function(std::span<const Complex> z);
/// (z_1, z_2 - z_1^2), which carries G onto D.
std::vector<Complex> example_map(std::span<const Complex> z);

/// The union of two flat polydiscs {|z_1| < 1, |z_2| < c} and
/// {|z_1| < c, |z_2| < 1}: balanced but not pseudoconvex for 0 < c < 1.
DomainMembership cross_domain_membership(double c, const Tolerances& tol = {});

struct BalancedExampleReport {
  std::int64_t samples = 0;
  std::int64_t map_agreements = 0;
  std::int64_t map_disagreements = 0;
  std::int64_t map_undecided = 0;  ///< a verdict fell inside the band
  std::int64_t balance_checks = 0;
  std::int64_t d_balance_failures = 0;
  std::int64_t g_balance_failures = 0;
  ProbeReport probe_d;
  ProbeReport probe_g;
};

/// Checks on the pair D, G: z in G iff example_map(z) in D on random
/// samples; pi_lambda membership preservation for |lambda| <= 1 with weights
/// (1, 2); and a midpoint probe of each domain.
BalancedExampleReport balanced_example_check(std::int64_t samples, std::int64_t probe_trials, std::uint64_t seed,
                                             const Tolerances& tol = {});

}  // namespace symdisc
