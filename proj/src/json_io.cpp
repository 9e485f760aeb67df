#include "symdisc/json_io.hpp"

#include <cmath>

namespace symdisc {

namespace {

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex number must be an [re, im] pair");
  const Complex z(j[0].get<double>(), j[1].get<double>());
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw SchemaError("non-finite complex number");
  return z;
}

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + name + "'");
  return *it;
}

double number_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number()) throw SchemaError(std::string("field '") + name + "' must be a number");
  return v.get<double>();
}

int int_field(const json& j, const char* name) {
  const json& v = field(j, name);
  if (!v.is_number_integer()) throw SchemaError(std::string("field '") + name + "' must be an integer");
  return v.get<int>();
}

json slice_to_json(const SliceCoords& c) { return complex_array_to_json(c.free()); }

SliceCoords slice_from_json(int n, const json& j) {
  try {
    return SliceCoords(n, complex_array_from_json(j));
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
}

json family_to_json(const Family& f) {
  json j{{"name", family_name(f.kind)}};
  if (f.kind == FamilyKind::LiftG3) {
    j["k"] = f.k;
    j["j"] = f.j;
  }
  return j;
}

Family family_from_json(const json& j) {
  const json& name = field(j, "name");
  if (!name.is_string()) throw SchemaError("family name must be a string");
  Family f;
  try {
    f.kind = family_kind_from_name(name.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (f.kind == FamilyKind::LiftG3) {
    f.k = int_field(j, "k");
    f.j = int_field(j, "j");
  }
  return f;
}

json violation_to_json(const MidpointViolation& v) {
  return {{"trial", v.trial},
          {"a", complex_array_to_json(v.a)},
          {"b", complex_array_to_json(v.b)},
          {"midpoint", complex_array_to_json(v.midpoint)}};
}

}  // namespace

json complex_array_to_json(std::span<const Complex> values) {
  json out = json::array();
  for (const auto& z : values) out.push_back(json::array({z.real(), z.imag()}));
  return out;
}

std::vector<Complex> complex_array_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("expected an array of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(complex_from_json(e));
  return out;
}

json poly_to_json(const Poly& p) { return complex_array_to_json(p.coeffs()); }

Poly poly_from_json(const json& j) {
  auto c = complex_array_from_json(j);
  if (c.empty()) throw SchemaError("polynomial needs at least one coefficient");
  return Poly(std::move(c));
}

json tolerances_to_json(const Tolerances& tol) {
  return {{"boundary_band", tol.boundary_band},
          {"root_iter_tol", tol.root_iter_tol},
          {"root_iter_max", tol.root_iter_max},
          {"bisect_tol", tol.bisect_tol}};
}

Tolerances tolerances_from_json(const json& j) {
  Tolerances tol;
  tol.boundary_band = number_field(j, "boundary_band");
  tol.root_iter_tol = number_field(j, "root_iter_tol");
  tol.root_iter_max = int_field(j, "root_iter_max");
  tol.bisect_tol = number_field(j, "bisect_tol");
  try {
    tol.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  return tol;
}

json root_location_to_json(const RootLocation& loc) {
  json j{{"verdict", std::string(to_string(loc.verdict))}};
  j["max_modulus_estimate"] = loc.max_modulus_estimate ? json(*loc.max_modulus_estimate) : json(nullptr);
  j["failing_stage"] = loc.failing_stage ? json(*loc.failing_stage) : json(nullptr);
  return j;
}

RootLocation root_location_from_json(const json& j) {
  RootLocation loc;
  const json& verdict = field(j, "verdict");
  if (!verdict.is_string()) throw SchemaError("verdict must be a string");
  try {
    loc.verdict = verdict_from_string(verdict.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  if (const auto it = j.find("max_modulus_estimate"); it != j.end() && !it->is_null()) {
    if (!it->is_number()) throw SchemaError("max_modulus_estimate must be a number");
    loc.max_modulus_estimate = it->get<double>();
  }
  if (const auto it = j.find("failing_stage"); it != j.end() && !it->is_null()) {
    if (!it->is_number_integer()) throw SchemaError("failing_stage must be an integer");
    loc.failing_stage = it->get<int>();
  }
  return loc;
}

json certificate_to_json(const NonConvexityCertificate& cert) {
  return {{"v", kCertificateSchemaVersion},
          {"n", cert.witness.n},
          {"family", family_to_json(cert.witness.family)},
          {"q_prime", cert.witness.q_prime},
          {"epsilon", cert.epsilon},
          {"tolerances", tolerances_to_json(cert.tolerances)},
          {"a_interior", slice_to_json(cert.a_interior)},
          {"b_interior", slice_to_json(cert.b_interior)},
          {"mid_exterior", slice_to_json(cert.mid_exterior)},
          {"h_mid", cert.h_mid},
          {"verdicts",
           {{"a_interior", root_location_to_json(cert.verdicts.a_interior)},
            {"b_interior", root_location_to_json(cert.verdicts.b_interior)},
            {"mid_exterior", root_location_to_json(cert.verdicts.mid_exterior)}}}};
}

NonConvexityCertificate certificate_from_json(const json& j) {
  if (int_field(j, "v") != kCertificateSchemaVersion) throw SchemaError("unsupported certificate schema version");
  const int n = int_field(j, "n");
  if (n < 3) throw SchemaError("n must be >= 3");

  const Family family = family_from_json(field(j, "family"));
  const double q_prime = number_field(j, "q_prime");

  // The stored points are authoritative; the boundary witness is rebuilt so
  // the certificate is self-contained.
  std::optional<WitnessPair> witness;
  try {
    witness = witness_for(family, q_prime);
  } catch (const std::exception& e) {
    throw SchemaError(std::string("cannot rebuild witness: ") + e.what());
  }
  if (witness->n != n) throw SchemaError("family does not produce degree n");

  const json& verdicts = field(j, "verdicts");
  return NonConvexityCertificate{
      std::move(*witness),
      number_field(j, "epsilon"),
      slice_from_json(n, field(j, "a_interior")),
      slice_from_json(n, field(j, "b_interior")),
      slice_from_json(n, field(j, "mid_exterior")),
      number_field(j, "h_mid"),
      CertificateVerdicts{root_location_from_json(field(verdicts, "a_interior")),
                          root_location_from_json(field(verdicts, "b_interior")),
                          root_location_from_json(field(verdicts, "mid_exterior"))},
      tolerances_from_json(field(j, "tolerances")),
  };
}

json verification_report_to_json(const VerificationReport& report) {
  json checks = json::array();
  for (const auto& c : report.checks) checks.push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  return {{"pass", report.passed()}, {"checks", std::move(checks)}};
}

json probe_report_to_json(const ProbeReport& report) {
  return {{"trials_run", report.trials_run},
          {"found", report.found ? violation_to_json(*report.found) : json(nullptr)}};
}

json balanced_example_report_to_json(const BalancedExampleReport& r) {
  return {{"samples", r.samples},
          {"map_agreements", r.map_agreements},
          {"map_disagreements", r.map_disagreements},
          {"map_undecided", r.map_undecided},
          {"balance_checks", r.balance_checks},
          {"d_balance_failures", r.d_balance_failures},
          {"g_balance_failures", r.g_balance_failures},
          {"probe_d", probe_report_to_json(r.probe_d)},
          {"probe_g", probe_report_to_json(r.probe_g)}};
}

}  // namespace symdisc
