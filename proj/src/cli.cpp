#include "symdisc/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "symdisc/certificate.hpp"
#include "symdisc/geometry.hpp"
#include "symdisc/json_io.hpp"
#include "symdisc/probe.hpp"
#include "symdisc/roots.hpp"

namespace symdisc::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_real(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
    throw std::invalid_argument("malformed complex literal '" + std::string(whole) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return parts;
}

struct Options {
  double tol_boundary = Tolerances{}.boundary_band;
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
};

Tolerances tolerances_of(const Options& o) {
  Tolerances tol;
  tol.boundary_band = o.tol_boundary;
  tol.validate();
  return tol;
}

// Writes to --out when given, else to the command's stdout.
void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out_path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
  f << text;
}

void require_json(const Options& o) {
  if (o.format != "json") throw UsageError("this command only writes json");
}

int exit_code_of(Verdict v) {
  switch (v) {
    case Verdict::AllInside: return kExitAllInside;
    case Verdict::NotAllInside: return kExitNotAllInside;
    case Verdict::Indeterminate: return kExitIndeterminate;
  }
  return kExitError;
}

json header(const Options& o, const char* command) { return {{"command", command}, {"seed", o.seed}}; }

// ---- check ---------------------------------------------------------------

struct CheckArgs {
  std::string coeffs;
  std::string sym;
  int slice_n = 0;
  std::string free;
};

int cmd_check(const Options& o, const CheckArgs& a, std::ostream& out) {
  require_json(o);
  const Tolerances tol = tolerances_of(o);
  const int given = !a.coeffs.empty() + !a.sym.empty() + (a.slice_n != 0);
  if (given != 1) throw UsageError("check needs exactly one of --coeffs, --sym, --slice");

  json report = header(o, "check");
  std::optional<Poly> poly;
  std::optional<SliceCoords> slice;
  if (!a.coeffs.empty()) {
    poly = normalize(Poly(parse_coeff_list(a.coeffs)));
    report["input"] = {{"coeffs", complex_array_to_json(parse_coeff_list(a.coeffs))}};
  } else if (!a.sym.empty()) {
    const SymPoint s{parse_complex_list(a.sym)};
    if (s.coords.empty()) throw UsageError("--sym needs at least one coordinate");
    poly = poly_from_sym_point(s);
    report["input"] = {{"sym", complex_array_to_json(s.coords)}};
  } else {
    if (a.free.empty()) throw UsageError("--slice needs --free");
    try {
      slice.emplace(a.slice_n, parse_complex_list(a.free));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    poly = slice_poly(*slice);
    report["input"] = {{"slice", a.slice_n}, {"free", complex_array_to_json(slice->free())}};
  }

  report["polynomial"] = poly_to_json(*poly);
  const RootLocation cohn = cohn_all_roots_in_disc(*poly, tol);
  report["cohn"] = root_location_to_json(cohn);
  try {
    const RootLocation oracle = root_oracle_location(*poly, tol, o.seed);
    report["root_oracle"] = root_location_to_json(oracle);
    report["max_root_modulus"] = *oracle.max_modulus_estimate;
  } catch (const RootFindingError& e) {
    report["root_oracle"] = {{"error", e.what()}};
    report["max_root_modulus"] = nullptr;
  }

  report["closed_form"] = nullptr;
  if (slice && (slice->n() == 3 || slice->n() == 4)) {
    const Complex p = slice->coeff(slice->n() - 1);
    const Complex q = slice->coeff(slice->n());
    report["closed_form"] = root_location_to_json(slice_membership_closed_form(slice->n(), p, q, tol));
    report[slice->n() == 3 ? "r" : "s"] = slice->n() == 3 ? r_value(p, q) : s_value(p, q);
  }

  emit(o, out, report.dump(2) + "\n");
  return exit_code_of(cohn.verdict);
}

// ---- certificate / verify ------------------------------------------------

int cmd_certificate(const Options& o, int n, std::optional<double> q_prime, std::ostream& out) {
  require_json(o);
  if (n < 3) throw UsageError("n must be >= 3");
  const auto cert = build_certificate(n, tolerances_of(o), o.seed, q_prime);
  emit(o, out, certificate_to_json(cert).dump(2) + "\n");
  return 0;
}

int cmd_verify(const Options& o, const std::string& path, std::ostream& out) {
  require_json(o);
  const auto error = [&](const char* kind, const std::string& message) {
    json report = header(o, "verify");
    report["error"] = {{"kind", kind}, {"message", message}};
    emit(o, out, report.dump(2) + "\n");
    return kExitError;
  };

  std::ifstream f(path, std::ios::binary);
  if (!f) return error("io", "cannot open '" + path + "'");
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::parse_error& e) {
    return error("parse", e.what());
  }

  std::optional<NonConvexityCertificate> cert;
  try {
    cert = certificate_from_json(doc);
  } catch (const SchemaError& e) {
    return error("schema", e.what());
  }

  const auto result = verify_certificate(*cert, tolerances_of(o), o.seed);
  json report = header(o, "verify");
  report["n"] = cert->witness.n;
  report.update(verification_report_to_json(result));
  emit(o, out, report.dump(2) + "\n");
  return result.passed() ? 0 : 1;
}

// ---- scan ----------------------------------------------------------------

struct ScanArgs {
  int n = 3;
  std::pair<double, double> p_range{0.0, 1.0};
  std::pair<double, double> q_range{0.0, 1.0};
  int p_steps = 100;
  int q_steps = 100;
  double p_phase = 0.0;
  double q_phase = 0.0;
};

double grid_value(const std::pair<double, double>& range, int steps, int i) {
  if (steps == 1) return range.first;
  return range.first + (range.second - range.first) * i / (steps - 1);
}

int cmd_scan(const Options& o, const ScanArgs& a, std::ostream& out) {
  if (a.n != 3 && a.n != 4) throw UsageError("scan supports n = 3 or 4 only (no closed form otherwise)");
  if (a.p_steps < 0 || a.q_steps < 0) throw UsageError("grid steps must be non-negative");
  if (o.format != "csv" && o.format != "json") throw UsageError("--format must be json or csv");
  const Tolerances tol = tolerances_of(o);

  const bool csv = o.format == "csv";
  std::string text;
  json rows = json::array();
  if (csv) text = "re_p,im_p,re_q,im_q,r_or_s,verdict\n";

  for (int i = 0; i < a.p_steps; ++i) {
    const Complex p = std::polar(grid_value(a.p_range, a.p_steps, i), a.p_phase);
    for (int k = 0; k < a.q_steps; ++k) {
      const Complex q = std::polar(grid_value(a.q_range, a.q_steps, k), a.q_phase);
      const double value = a.n == 3 ? r_value(p, q) : s_value(p, q);
      const auto verdict = slice_membership_closed_form(a.n, p, q, tol).verdict;
      if (csv) {
        text += format_double(p.real()) + ',' + format_double(p.imag()) + ',' + format_double(q.real()) + ',' +
                format_double(q.imag()) + ',' + format_double(value) + ',' + std::string(to_string(verdict)) + '\n';
      } else {
        rows.push_back({{"p", json::array({p.real(), p.imag()})},
                        {"q", json::array({q.real(), q.imag()})},
                        {"r_or_s", value},
                        {"verdict", std::string(to_string(verdict))}});
      }
    }
  }

  if (!csv) {
    json report = header(o, "scan");
    report["n"] = a.n;
    report["rows"] = std::move(rows);
    text = report.dump(2) + "\n";
  }
  emit(o, out, text);
  return 0;
}

// ---- probe ---------------------------------------------------------------

int cmd_probe(const Options& o, const std::string& domain, std::int64_t trials, std::ostream& out) {
  require_json(o);
  if (trials < 0) throw UsageError("--trials must be non-negative");
  const Tolerances tol = tolerances_of(o);

  DomainMembership member;
  std::optional<Weights> weights;
  if (domain == "g3-slice") {
    member = slice_membership(3, tol);
    weights = Weights({2, 3});
  } else if (domain == "g4-slice") {
    member = slice_membership(4, tol);
    weights = Weights({3, 4});
  } else if (domain == "example-d") {
    member = sublevel_membership(example_d_function, tol);
    weights = Weights({1, 2});
  } else if (domain == "example-g") {
    member = sublevel_membership(example_g_function, tol);
    weights = Weights({1, 2});
  } else {
    throw UsageError("unknown domain '" + domain + "'");
  }

  const auto sampler = gauge_shell_sampler(member, *weights, 1.5, 1e-3, tol);
  const auto result = midpoint_probe(member, sampler, trials, o.seed);

  json report = header(o, "probe");
  report["domain"] = domain;
  report["trials_requested"] = trials;
  report.update(probe_report_to_json(result));
  emit(o, out, report.dump(2) + "\n");
  return 0;
}

}  // namespace

Complex parse_complex(std::string_view text) {
  const std::string_view s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text), 0.0};

  const std::string_view body = s.substr(0, s.size() - 1);
  // Split at the last sign that is not part of an exponent.
  std::size_t split_at = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split_at = k;
      break;
    }
  }
  const std::string_view re_part = split_at == std::string_view::npos ? std::string_view{} : body.substr(0, split_at);
  std::string_view im_part = split_at == std::string_view::npos ? body : body.substr(split_at);
  im_part = trim(im_part);

  double im = 0.0;
  if (im_part.empty() || im_part == "+") {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else {
    im = parse_real(im_part, text);
  }
  return {re_part.empty() ? 0.0 : parse_real(re_part, text), im};
}

std::vector<Complex> parse_complex_list(std::string_view text) {
  std::vector<Complex> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(parse_complex(part));
  return out;
}

std::vector<Complex> parse_coeff_list(std::string_view text) {
  std::vector<Complex> out;
  if (trim(text).empty()) throw std::invalid_argument("empty coefficient list");
  for (auto entry : split(text, ';')) {
    const auto pair = split(entry, ',');
    if (pair.size() == 2) {
      out.emplace_back(parse_real(pair[0], entry), parse_real(pair[1], entry));
    } else if (pair.size() == 1) {
      out.push_back(parse_complex(entry));
    } else {
      throw std::invalid_argument("malformed coefficient '" + std::string(entry) + "'");
    }
  }
  return out;
}

std::string format_double(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) throw std::runtime_error("cannot format double");
  return std::string(buf, ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unit-disc root location and non-convexity certificates for the symmetrized polydisc", "symdisc"};
  app.require_subcommand(1);

  Options opts;
  app.add_option("--tol-boundary", opts.tol_boundary, "Boundary band of every membership test")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", opts.seed, "Seed for the root oracle and probes");
  app.add_option("--out", opts.out_path, "Write output to this file instead of stdout");
  app.add_option("--format", opts.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "Unit-disc membership of one polynomial, three ways");
  check->add_option("--coeffs", check_args.coeffs, "Descending coefficients: \"re,im;re,im;...\"");
  check->add_option("--sym", check_args.sym, "Symmetric coordinates s_1..s_n as complex literals");
  check->add_option("--slice", check_args.slice_n, "Slice degree n >= 3 (use with --free)");
  check->add_option("--free", check_args.free, "Free slice coefficients a_{m+1}..a_n");

  int cert_n = 0;
  std::optional<double> cert_q;
  auto* certificate = app.add_subcommand("certificate", "Build a non-convexity certificate for G_n");
  certificate->add_option("--n", cert_n, "Dimension n >= 3")->required();
  certificate->add_option("--q-prime", cert_q, "Witness parameter q'");

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-check a certificate file");
  verify->add_option("path", verify_path, "Certificate JSON")->required();

  ScanArgs scan_args;
  auto* scan = app.add_subcommand("scan", "Closed-form defining function over a (|p|, |q|) grid");
  scan->add_option("--n", scan_args.n, "3 or 4");
  scan->add_option("--p-range", scan_args.p_range, "|p| range: lo hi")->delimiter(',');
  scan->add_option("--q-range", scan_args.q_range, "|q| range: lo hi")->delimiter(',');
  scan->add_option("--p-steps", scan_args.p_steps, "Grid points along |p|");
  scan->add_option("--q-steps", scan_args.q_steps, "Grid points along |q|");
  scan->add_option("--p-phase", scan_args.p_phase, "Fixed arg p (radians)");
  scan->add_option("--q-phase", scan_args.q_phase, "Fixed arg q (radians)");

  std::string probe_domain;
  std::int64_t probe_trials = 1000000;
  auto* probe = app.add_subcommand("probe", "Randomized midpoint-convexity probe");
  probe->add_option("--domain", probe_domain, "g3-slice | g4-slice | example-d | example-g")->required();
  probe->add_option("--trials", probe_trials, "Number of sampled pairs");

  for (auto* sub : {check, certificate, verify, scan, probe}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  }

  try {
    if (*check) return cmd_check(opts, check_args, out);
    if (*certificate) return cmd_certificate(opts, cert_n, cert_q, out);
    if (*verify) return cmd_verify(opts, verify_path, out);
    if (*scan) return cmd_scan(opts, scan_args, out);
    if (*probe) return cmd_probe(opts, probe_domain, probe_trials, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace symdisc::cli
