#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symdisc/geometry.hpp"
#include "symdisc/root_location.hpp"

namespace symdisc {

enum class FamilyKind { G3Direct, G4Direct, LiftG3, LiftG4Zeta, LiftG4Square };

/// Witness family. For LiftG3 the slice point (p, q) of the cubic is placed
/// into z^j f_3(z^k); k and j are unused otherwise.
struct Family {
  FamilyKind kind = FamilyKind::G3Direct;
  int k = 1;
  int j = 0;

  friend bool operator==(const Family&, const Family&) = default;
};

std::string family_name(FamilyKind kind);
FamilyKind family_kind_from_name(const std::string& name);

/// Two boundary points of a slice and their coordinate mean.
struct WitnessPair {
  int n = 3;
  Family family;
  double q_prime = 0.0;
  SliceCoords a;
  SliceCoords b;
  SliceCoords midpoint;
};

/// a = (p' e^{2 pi i/3}, q'), b = (p' e^{pi i/3}, q' e^{pi i/2}), p' = 1 - q'^2.
/// The mean is cross-checked against its closed polar form
/// (p' cos(pi/6) e^{pi i/2}, q' cos(pi/4) e^{pi i/4}).
/// Requires 0 < q' < 1.
WitnessPair witness_g3(double q_prime);

/// a = (p' e^{pi i/2}, q'), b = (p' e^{pi i/4}, q' e^{pi i/3}),
/// p' = (1 - q') sqrt(1 + q'). Closed polar form of the mean:
/// (p' cos(pi/8) e^{3 pi i/8}, q' cos(pi/6) e^{pi i/6}). Requires 0 <= q' < 1.
WitnessPair witness_g4(double q_prime);

/// Embeds an n = 3 pair into degree 3k + j via z^j f_3(z^k): p goes to
/// a_{2k}, q to a_{3k}. Admissible: (j = 0, k >= 1), (j = 1, k >= 2),
/// (j = 2, k >= 3).
WitnessPair lift_g3(const WitnessPair& pair, int k, int j);

enum class G4Lift { Zeta, Square };

/// zeta f_4(zeta) (n = 5: a_3 = p, a_4 = q) or f_4(zeta^2) (n = 8: a_6 = p, a_8 = q).
WitnessPair lift_g4(const WitnessPair& pair, G4Lift variant);

/// The family used for a given n >= 3.
Family family_for(int n);

/// Boundary witness of the given family at parameter q'.
WitnessPair witness_for(const Family& family, double q_prime);

/// 0.5 for the n = 3 families, 0.4 for the n = 4 ones.
double default_q_prime(FamilyKind kind);

/// Shrinks every slice coordinate a_j by t^j.
SliceCoords shrink(const SliceCoords& c, double t);

/// Coordinate-wise 0.5 * (a + b).
SliceCoords coordinate_mean(const SliceCoords& a, const SliceCoords& b);

struct CertificateVerdicts {
  RootLocation a_interior;
  RootLocation b_interior;
  RootLocation mid_exterior;
};

struct NonConvexityCertificate {
  WitnessPair witness;
  double epsilon = 0.0;
  SliceCoords a_interior;
  SliceCoords b_interior;
  SliceCoords mid_exterior;
  double h_mid = 0.0;
  CertificateVerdicts verdicts;
  Tolerances tolerances;
};

/// Builds a margined certificate that the slice G_n of degree-n monic
/// polynomials {a_1 = ... = a_{n/2} = 0} is not convex.
///
/// With delta = h(midpoint) - 1 and epsilon = min(delta / (2 (1 + delta)), 1e-3),
/// the endpoints are pi_{1-epsilon}(a), pi_{1-epsilon}(b) and the exterior
/// point is their coordinate mean. Throws std::invalid_argument for n < 3 and
/// std::runtime_error if the result fails verification.
NonConvexityCertificate build_certificate(int n, const Tolerances& tol = {}, std::uint64_t seed = 0,
                                          std::optional<double> q_prime = std::nullopt);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  [[nodiscard]] bool passed() const;
  [[nodiscard]] const CheckResult* find(const std::string& name) const;
};

/// Re-derives the witness from (n, family, q'), and re-checks every
/// certificate invariant with both the Cohn test and the root oracle.
VerificationReport verify_certificate(const NonConvexityCertificate& cert, const Tolerances& tol = {},
                                      std::uint64_t seed = 0);

}  // namespace symdisc
