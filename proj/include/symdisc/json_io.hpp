#pragma once

#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "symdisc/certificate.hpp"
#include "symdisc/probe.hpp"

namespace symdisc {

using nlohmann::json;

inline constexpr int kCertificateSchemaVersion = 1;

/// Raised for JSON that parses but does not match the expected schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex numbers are [re, im] pairs; sequences are arrays of them.
json complex_array_to_json(std::span<const Complex> values);
std::vector<Complex> complex_array_from_json(const json& j);

json poly_to_json(const Poly& p);
Poly poly_from_json(const json& j);

json tolerances_to_json(const Tolerances& tol);
Tolerances tolerances_from_json(const json& j);

json root_location_to_json(const RootLocation& loc);
RootLocation root_location_from_json(const json& j);

/// {"v", "n", "family", "q_prime", "epsilon", "tolerances", "a_interior",
///  "b_interior", "mid_exterior", "h_mid", "verdicts"}.
json certificate_to_json(const NonConvexityCertificate& cert);

/// Inverse of certificate_to_json; the boundary witness is re-derived from
/// (n, family, q_prime). Throws SchemaError on schema violations.
NonConvexityCertificate certificate_from_json(const json& j);

json verification_report_to_json(const VerificationReport& report);
json probe_report_to_json(const ProbeReport& report);
json balanced_example_report_to_json(const BalancedExampleReport& report);

}  // namespace symdisc
