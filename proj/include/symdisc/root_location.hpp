#pragma once

#include <optional>
#include <string_view>

#include "symdisc/poly.hpp"

namespace symdisc {

/// Numerical tolerances shared by every membership and root-finding routine.
struct Tolerances {
  /// Width of the "on the unit circle" zone of the Cohn test and of the
  /// zero level of every defining function.
  double boundary_band = 1e-9;
  double root_iter_tol = 1e-13;
  int root_iter_max = 200;
  /// Relative tolerance of gauge bisection.
  double bisect_tol = 1e-12;

  /// Throws std::invalid_argument unless every field is strictly positive.
  void validate() const;

  friend bool operator==(const Tolerances&, const Tolerances&) = default;
};

enum class Verdict { AllInside, NotAllInside, Indeterminate };

std::string_view to_string(Verdict v);
/// Inverse of to_string; throws std::invalid_argument on unknown names.
Verdict verdict_from_string(std::string_view name);

struct RootLocation {
  Verdict verdict = Verdict::Indeterminate;
  std::optional<double> max_modulus_estimate;
  /// Recursion depth of the first stage that did not pass.
  std::optional<int> failing_stage;

  friend bool operator==(const RootLocation&, const RootLocation&) = default;
};

/// Cohn recursion: all roots of p lie in the open unit disc iff
/// |a0| > |a_n| and the same holds for the Schur transform.
///
/// Each stage is renormalized. A stage with ||a0| - |a_n|| <= boundary_band
/// yields Indeterminate.
RootLocation cohn_all_roots_in_disc(const Poly& p, const Tolerances& tol = {});

}  // namespace symdisc
