#include "symdisc/certificate.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "symdisc/gauge.hpp"
#include "symdisc/roots.hpp"

namespace symdisc {

namespace {

using std::numbers::pi;

constexpr double kClosedFormAgreement = 1e-12;
constexpr double kEndpointGaugeTol = 1e-6;
constexpr double kReconstructionTol = 1e-13;
constexpr double kMaxEpsilon = 1e-3;

// Slice point of degree n with a_idx[i] = value[i] and zeros elsewhere.
SliceCoords place(int n, std::initializer_list<std::pair<int, Complex>> entries) {
  const int m = n / 2;
  std::vector<Complex> free(static_cast<std::size_t>(n - m));
  for (const auto& [idx, value] : entries) {
    if (idx <= m || idx > n) throw std::logic_error("coefficient index outside the free slice");
    free[static_cast<std::size_t>(idx - m - 1)] = value;
  }
  return SliceCoords(n, std::move(free));
}

void check_close(Complex got, Complex want, const char* what) {
  if (std::abs(got - want) > kClosedFormAgreement)
    throw std::logic_error(std::string("midpoint disagrees with its closed polar form: ") + what);
}

int base_degree(FamilyKind kind) {
  return (kind == FamilyKind::G3Direct || kind == FamilyKind::LiftG3) ? 3 : 4;
}

// Coordinates (p, q) of the underlying n = 3 or n = 4 slice point.
std::pair<Complex, Complex> base_point(const SliceCoords& c, const Family& f) {
  switch (f.kind) {
    case FamilyKind::G3Direct: return {c.coeff(2), c.coeff(3)};
    case FamilyKind::G4Direct: return {c.coeff(3), c.coeff(4)};
    case FamilyKind::LiftG3: return {c.coeff(2 * f.k), c.coeff(3 * f.k)};
    case FamilyKind::LiftG4Zeta: return {c.coeff(3), c.coeff(4)};
    case FamilyKind::LiftG4Square: return {c.coeff(6), c.coeff(8)};
  }
  throw std::logic_error("unknown family");
}

bool lift_admissible(int k, int j) {
  return (j == 0 && k >= 1) || (j == 1 && k >= 2) || (j == 2 && k >= 3);
}

bool same_coords(const SliceCoords& x, const SliceCoords& y, double tol) {
  if (x.n() != y.n()) return false;
  for (std::size_t i = 0; i < x.free().size(); ++i) {
    if (std::abs(x.free()[i] - y.free()[i]) > tol) return false;
  }
  return true;
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

}  // namespace

std::string family_name(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::G3Direct: return "G3Direct";
    case FamilyKind::G4Direct: return "G4Direct";
    case FamilyKind::LiftG3: return "LiftG3";
    case FamilyKind::LiftG4Zeta: return "LiftG4Zeta";
    case FamilyKind::LiftG4Square: return "LiftG4Square";
  }
  return "?";
}

FamilyKind family_kind_from_name(const std::string& name) {
  for (auto kind : {FamilyKind::G3Direct, FamilyKind::G4Direct, FamilyKind::LiftG3, FamilyKind::LiftG4Zeta,
                    FamilyKind::LiftG4Square}) {
    if (family_name(kind) == name) return kind;
  }
  throw std::invalid_argument("unknown witness family '" + name + "'");
}

WitnessPair witness_g3(double q_prime) {
  if (!(q_prime > 0.0 && q_prime < 1.0)) throw std::invalid_argument("witness_g3 needs 0 < q' < 1");
  const double p_prime = 1.0 - q_prime * q_prime;
  SliceCoords a(3, {std::polar(p_prime, 2.0 * pi / 3.0), Complex(q_prime, 0.0)});
  SliceCoords b(3, {std::polar(p_prime, pi / 3.0), std::polar(q_prime, pi / 2.0)});
  SliceCoords mid = coordinate_mean(a, b);

  check_close(mid.coeff(2), std::polar(p_prime * std::cos(pi / 6.0), pi / 2.0), "p");
  check_close(mid.coeff(3), std::polar(q_prime * std::cos(pi / 4.0), pi / 4.0), "q");
  return WitnessPair{3, Family{FamilyKind::G3Direct}, q_prime, std::move(a), std::move(b), std::move(mid)};
}

WitnessPair witness_g4(double q_prime) {
  if (!(q_prime >= 0.0 && q_prime < 1.0)) throw std::invalid_argument("witness_g4 needs 0 <= q' < 1");
  const double p_prime = (1.0 - q_prime) * std::sqrt(1.0 + q_prime);
  SliceCoords a(4, {std::polar(p_prime, pi / 2.0), Complex(q_prime, 0.0)});
  SliceCoords b(4, {std::polar(p_prime, pi / 4.0), std::polar(q_prime, pi / 3.0)});
  SliceCoords mid = coordinate_mean(a, b);

  check_close(mid.coeff(3), std::polar(p_prime * std::cos(pi / 8.0), 3.0 * pi / 8.0), "p");
  check_close(mid.coeff(4), std::polar(q_prime * std::cos(pi / 6.0), pi / 6.0), "q");
  return WitnessPair{4, Family{FamilyKind::G4Direct}, q_prime, std::move(a), std::move(b), std::move(mid)};
}

WitnessPair lift_g3(const WitnessPair& pair, int k, int j) {
  if (pair.n != 3 || pair.family.kind != FamilyKind::G3Direct)
    throw std::invalid_argument("lift_g3 needs an n = 3 witness");
  if (!lift_admissible(k, j))
    throw std::invalid_argument("inadmissible lift (k=" + std::to_string(k) + ", j=" + std::to_string(j) + ")");

  const int n = 3 * k + j;
  const auto lift = [&](const SliceCoords& c) { return place(n, {{2 * k, c.coeff(2)}, {3 * k, c.coeff(3)}}); };
  return WitnessPair{n, Family{FamilyKind::LiftG3, k, j}, pair.q_prime, lift(pair.a), lift(pair.b),
                     lift(pair.midpoint)};
}

WitnessPair lift_g4(const WitnessPair& pair, G4Lift variant) {
  if (pair.n != 4 || pair.family.kind != FamilyKind::G4Direct)
    throw std::invalid_argument("lift_g4 needs an n = 4 witness");

  const bool zeta = variant == G4Lift::Zeta;
  const int n = zeta ? 5 : 8;
  const int ip = zeta ? 3 : 6;
  const int iq = zeta ? 4 : 8;
  const auto lift = [&](const SliceCoords& c) { return place(n, {{ip, c.coeff(3)}, {iq, c.coeff(4)}}); };
  const Family family{zeta ? FamilyKind::LiftG4Zeta : FamilyKind::LiftG4Square};
  return WitnessPair{n, family, pair.q_prime, lift(pair.a), lift(pair.b), lift(pair.midpoint)};
}

Family family_for(int n) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  if (n == 3) return {FamilyKind::G3Direct};
  if (n == 4) return {FamilyKind::G4Direct};
  if (n == 5) return {FamilyKind::LiftG4Zeta};
  if (n == 8) return {FamilyKind::LiftG4Square};
  const int k = n / 3;
  const int j = n % 3;
  if (!lift_admissible(k, j)) throw std::logic_error("no admissible family for n = " + std::to_string(n));
  return {FamilyKind::LiftG3, k, j};
}

WitnessPair witness_for(const Family& f, double q_prime) {
  switch (f.kind) {
    case FamilyKind::G3Direct: return witness_g3(q_prime);
    case FamilyKind::G4Direct: return witness_g4(q_prime);
    case FamilyKind::LiftG3: return lift_g3(witness_g3(q_prime), f.k, f.j);
    case FamilyKind::LiftG4Zeta: return lift_g4(witness_g4(q_prime), G4Lift::Zeta);
    case FamilyKind::LiftG4Square: return lift_g4(witness_g4(q_prime), G4Lift::Square);
  }
  throw std::logic_error("unknown family");
}

double default_q_prime(FamilyKind kind) {
  return (kind == FamilyKind::G3Direct || kind == FamilyKind::LiftG3) ? 0.5 : 0.4;
}

SliceCoords shrink(const SliceCoords& c, double t) {
  std::vector<Complex> free(c.free().begin(), c.free().end());
  for (std::size_t i = 0; i < free.size(); ++i) {
    const int weight = c.m() + 1 + static_cast<int>(i);
    double scale = 1.0;
    for (int e = 0; e < weight; ++e) scale *= t;
    free[i] *= scale;
  }
  return SliceCoords(c.n(), std::move(free));
}

SliceCoords coordinate_mean(const SliceCoords& a, const SliceCoords& b) {
  if (a.n() != b.n()) throw std::invalid_argument("mean of points on different slices");
  std::vector<Complex> free(a.free().size());
  for (std::size_t i = 0; i < free.size(); ++i) free[i] = 0.5 * (a.free()[i] + b.free()[i]);
  return SliceCoords(a.n(), std::move(free));
}

NonConvexityCertificate build_certificate(int n, const Tolerances& tol, std::uint64_t seed,
                                          std::optional<double> q_prime) {
  if (n < 3) throw std::invalid_argument("n must be >= 3");
  tol.validate();

  const Family family = family_for(n);
  WitnessPair pair = witness_for(family, q_prime.value_or(default_q_prime(family.kind)));

  const auto member = slice_membership(n, tol);
  const double h_mid = gauge_h(member, pair.midpoint.weights(), pair.midpoint.free(), tol);
  const double delta = h_mid - 1.0;
  if (!(delta > 0.0))
    throw std::runtime_error("midpoint gauge " + fmt(h_mid) + " does not exceed 1; no certificate for this q'");

  const double epsilon = std::min(delta / (2.0 * (1.0 + delta)), kMaxEpsilon);
  const double t = 1.0 - epsilon;
  SliceCoords a_int = shrink(pair.a, t);
  SliceCoords b_int = shrink(pair.b, t);
  SliceCoords mid_ext = coordinate_mean(a_int, b_int);

  const auto located = [&](const SliceCoords& c) {
    const Poly poly = slice_poly(c);
    RootLocation loc = cohn_all_roots_in_disc(poly, tol);
    loc.max_modulus_estimate = max_root_modulus(poly, tol, seed);
    return loc;
  };
  CertificateVerdicts verdicts{located(a_int), located(b_int), located(mid_ext)};

  NonConvexityCertificate cert{std::move(pair), epsilon,  std::move(a_int), std::move(b_int),
                               std::move(mid_ext), h_mid, verdicts,         tol};

  const auto report = verify_certificate(cert, tol, seed);
  if (!report.passed()) {
    std::string failed;
    for (const auto& c : report.checks) {
      if (!c.pass) failed += " " + c.name + " (" + c.detail + ")";
    }
    throw std::runtime_error("certificate for n = " + std::to_string(n) + " failed verification:" + failed);
  }
  return cert;
}

bool VerificationReport::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  const auto it = std::find_if(checks.begin(), checks.end(), [&](const CheckResult& c) { return c.name == name; });
  return it == checks.end() ? nullptr : &*it;
}

VerificationReport verify_certificate(const NonConvexityCertificate& cert, const Tolerances& tol,
                                      std::uint64_t seed) {
  VerificationReport report;
  const auto add = [&](std::string name, bool pass, std::string detail = {}) {
    report.checks.push_back({std::move(name), pass, std::move(detail)});
  };

  const int n = cert.witness.n;
  const double band = tol.boundary_band;
  const std::array<const SliceCoords*, 3> points{&cert.a_interior, &cert.b_interior, &cert.mid_exterior};

  // Structure: everything lives on the degree-n slice and the family is the
  // one assigned to n. Later checks depend on it.
  bool structure = n >= 3 && cert.epsilon > 0.0 && cert.epsilon < 1.0;
  for (const auto* p : points) structure = structure && p->n() == n;
  std::string structure_detail;
  try {
    if (structure && !(family_for(n) == cert.witness.family)) {
      structure = false;
      structure_detail = "family does not match n";
    }
    cert.tolerances.validate();
  } catch (const std::exception& e) {
    structure = false;
    structure_detail = e.what();
  }
  add("structure", structure, structure_detail);
  if (!structure) return report;

  // Every nonzero coefficient index exceeds floor(n/2), so 2 k_{m+1} > k_n
  // holds for the weights (1, ..., n) restricted to the support.
  const int m = n / 2;
  bool support_ok = 2 * (m + 1) > n;
  for (const auto* p : points) {
    for (int j = 1; j <= m; ++j) support_ok = support_ok && p->coeff(j) == Complex{};
  }
  add("slice_condition", support_ok, "m = " + std::to_string(m));

  add("mean_exactness", cert.mid_exterior == coordinate_mean(cert.a_interior, cert.b_interior));

  // Re-derive the boundary witness and the shrink.
  const double t = 1.0 - cert.epsilon;
  std::optional<WitnessPair> witness;
  try {
    witness = witness_for(cert.witness.family, cert.witness.q_prime);
  } catch (const std::exception& e) {
    add("witness_reconstruction", false, e.what());
  }
  if (witness) {
    const bool same = same_coords(shrink(witness->a, t), cert.a_interior, kReconstructionTol) &&
                      same_coords(shrink(witness->b, t), cert.b_interior, kReconstructionTol) &&
                      same_coords(shrink(witness->midpoint, t), cert.mid_exterior, kReconstructionTol) &&
                      same_coords(coordinate_mean(witness->a, witness->b), witness->midpoint, 0.0);
    add("witness_reconstruction", same);

    const auto member = slice_membership(n, tol);
    const auto weights = witness->a.weights();
    const double ha = gauge_h(member, weights, witness->a.free(), tol);
    const double hb = gauge_h(member, weights, witness->b.free(), tol);
    bool on_boundary = std::abs(ha - 1.0) <= kEndpointGaugeTol && std::abs(hb - 1.0) <= kEndpointGaugeTol;
    std::string detail = "h(a) = " + fmt(ha) + ", h(b) = " + fmt(hb);
    if (cert.witness.family.kind == FamilyKind::G3Direct || cert.witness.family.kind == FamilyKind::G4Direct) {
      const auto f = base_degree(cert.witness.family.kind) == 3 ? r_value : s_value;
      const auto [pa, qa] = base_point(witness->a, cert.witness.family);
      const auto [pb, qb] = base_point(witness->b, cert.witness.family);
      const double fa = f(pa, qa);
      const double fb = f(pb, qb);
      on_boundary = on_boundary && std::abs(fa) < kClosedFormAgreement && std::abs(fb) < kClosedFormAgreement;
      detail += ", defining function " + fmt(fa) + ", " + fmt(fb);
    }
    add("endpoint_boundary", on_boundary, detail);
  }

  // Membership, three independent ways.
  const std::array<Verdict, 3> expected{Verdict::AllInside, Verdict::AllInside, Verdict::NotAllInside};
  std::array<RootLocation, 3> cohn;
  bool cohn_ok = true;
  bool oracle_ok = true;
  bool closed_ok = true;
  std::string oracle_detail;
  for (std::size_t i = 0; i < 3; ++i) {
    const Poly poly = slice_poly(*points[i]);
    cohn[i] = cohn_all_roots_in_disc(poly, tol);
    cohn_ok = cohn_ok && cohn[i].verdict == expected[i];
    try {
      const auto loc = root_oracle_location(poly, tol, seed);
      oracle_ok = oracle_ok && loc.verdict == expected[i];
      oracle_detail += (i ? ", " : "") + fmt(*loc.max_modulus_estimate);
    } catch (const std::exception& e) {
      oracle_ok = false;
      oracle_detail += (i ? ", " : "") + std::string(e.what());
    }
    const auto [p, q] = base_point(*points[i], cert.witness.family);
    closed_ok = closed_ok &&
                slice_membership_closed_form(base_degree(cert.witness.family.kind), p, q, tol).verdict == expected[i];
  }
  add("cohn_verdicts", cohn_ok);
  add("root_oracle_verdicts", oracle_ok, "max root moduli " + oracle_detail);
  add("closed_form_verdicts", closed_ok);

  const bool stored = cert.verdicts.a_interior.verdict == cohn[0].verdict &&
                      cert.verdicts.b_interior.verdict == cohn[1].verdict &&
                      cert.verdicts.mid_exterior.verdict == cohn[2].verdict;
  add("stored_verdicts", stored);

  // The exterior point's gauge is (1 - epsilon) h_mid, which must clear 1.
  const double h_ext = gauge_h(slice_membership(n, tol), cert.mid_exterior.weights(), cert.mid_exterior.free(), tol);
  const bool margin = t * cert.h_mid > 1.0 + band && h_ext > 1.0 + band &&
                      std::abs(h_ext - t * cert.h_mid) <= 1e-8 * h_ext;
  add("exterior_margin", margin, "(1 - eps) h_mid = " + fmt(t * cert.h_mid) + ", h(mid_exterior) = " + fmt(h_ext));

  return report;
}

}  // namespace symdisc
