#include "symdisc/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symdisc {

namespace {

void check_coeffs(const std::vector<Complex>& coeffs) {
  if (coeffs.empty()) throw std::invalid_argument("polynomial needs at least one coefficient");
  for (const auto& c : coeffs) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag()))
      throw std::invalid_argument("non-finite polynomial coefficient");
  }
}

}  // namespace

Poly::Poly(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) { check_coeffs(coeffs_); }

Poly::Poly(std::initializer_list<Complex> coeffs) : coeffs_(coeffs) { check_coeffs(coeffs_); }

double Poly::max_coeff_modulus() const {
  double m = 0.0;
  for (const auto& c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Poly::is_normalized() const {
  return leading() != Complex{} && max_coeff_modulus() == 1.0;
}

Poly normalize(const Poly& p) {
  const auto c = p.coeffs();
  const auto first = std::find_if(c.begin(), c.end(), [](const Complex& a) { return a != Complex{}; });
  if (first == c.end()) throw std::domain_error("zero polynomial");

  std::vector<Complex> out(first, c.end());
  double m = 0.0;
  for (const auto& a : out) m = std::max(m, std::abs(a));
  for (auto& a : out) a /= m;
  return Poly(std::move(out));
}

Complex eval(const Poly& p, Complex z) {
  Complex acc{};
  for (const auto& a : p.coeffs()) acc = acc * z + a;
  return acc;
}

Poly reversed_conjugate(const Poly& p) {
  const auto c = p.coeffs();
  std::vector<Complex> out(c.size());
  std::transform(c.rbegin(), c.rend(), out.begin(), [](const Complex& a) { return std::conj(a); });
  return Poly(std::move(out));
}

Poly schur_transform(const Poly& p) {
  const int n = p.degree();
  if (n < 1) throw std::domain_error("cannot transform constant");

  const auto c = p.coeffs();
  const Complex a0_bar = std::conj(c.front());
  const Complex an = c.back();
  std::vector<Complex> out(static_cast<std::size_t>(n));
  out[0] = Complex(std::norm(c.front()) - std::norm(an), 0.0);
  for (int i = 1; i < n; ++i) {
    out[i] = a0_bar * c[i] - an * std::conj(c[n - i]);
  }
  return Poly(std::move(out));
}

double cauchy_bound(const Poly& p) {
  const auto c = p.coeffs();
  if (c.front() == Complex{}) throw std::domain_error("cauchy_bound needs a nonzero leading coefficient");
  const double lead = std::abs(c.front());
  double m = 0.0;
  for (std::size_t j = 1; j < c.size(); ++j) m = std::max(m, std::abs(c[j]) / lead);
  return 1.0 + m;
}

}  // namespace symdisc
