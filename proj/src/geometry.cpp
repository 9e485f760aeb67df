#include "symdisc/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace symdisc {

Weights::Weights(std::vector<int> k) : k_(std::move(k)) {
  if (k_.empty() || k_.front() < 1 || !std::is_sorted(k_.begin(), k_.end()))
    throw std::invalid_argument("weights must satisfy 1 <= k_1 <= ... <= k_n");
}

Weights Weights::symmetric(int n) { return range(1, n); }

Weights Weights::range(int first, int last) {
  std::vector<int> k;
  for (int j = first; j <= last; ++j) k.push_back(j);
  return Weights(std::move(k));
}

SliceCoords::SliceCoords(int n, std::vector<Complex> free) : n_(n), free_(std::move(free)) {
  if (n_ < 3) throw std::invalid_argument("slice dimension n must be >= 3");
  if (static_cast<int>(free_.size()) != n_ - n_ / 2)
    throw std::invalid_argument("slice of degree " + std::to_string(n_) + " needs " +
                                std::to_string(n_ - n_ / 2) + " free coefficients");
}

Complex SliceCoords::coeff(int j) const {
  if (j < 1 || j > n_) throw std::out_of_range("coefficient index out of range");
  return j <= m() ? Complex{} : free_[static_cast<std::size_t>(j - m() - 1)];
}

SymPoint symmetrize(std::span<const Complex> z) {
  // e[k] holds sigma_k of the prefix processed so far.
  std::vector<Complex> e(z.size() + 1);
  e[0] = 1.0;
  for (std::size_t j = 0; j < z.size(); ++j) {
    for (std::size_t k = j + 1; k >= 1; --k) e[k] += z[j] * e[k - 1];
  }
  return SymPoint{std::vector<Complex>(e.begin() + 1, e.end())};
}

Poly poly_from_sym_point(const SymPoint& s) {
  std::vector<Complex> c(s.coords.size() + 1);
  c[0] = 1.0;
  for (std::size_t k = 1; k < c.size(); ++k) c[k] = (k % 2 == 0) ? s.coords[k - 1] : -s.coords[k - 1];
  return Poly(std::move(c));
}

RootLocation in_symmetrized_polydisc(const SymPoint& s, const Tolerances& tol) {
  return cohn_all_roots_in_disc(poly_from_sym_point(s), tol);
}

Poly slice_poly(const SliceCoords& c) {
  std::vector<Complex> coeffs(static_cast<std::size_t>(c.n()) + 1);
  coeffs[0] = 1.0;
  for (int j = 1; j <= c.n(); ++j) coeffs[j] = c.coeff(j);
  return Poly(std::move(coeffs));
}

double r_value(Complex p, Complex q) {
  const double one_minus_q2 = 1.0 - std::norm(q);
  return std::abs(std::conj(p) * q * one_minus_q2 - p * p * std::conj(q)) + std::norm(p) -
         one_minus_q2 * one_minus_q2;
}

double s_value(Complex p, Complex q) {
  const double one_minus_q2 = 1.0 - std::norm(q);
  const double a = one_minus_q2 * one_minus_q2 - std::norm(p);
  const Complex qb = std::conj(q);
  return one_minus_q2 * std::abs(std::conj(p) * q * a - p * p * p * qb * qb) +
         std::norm(p) * std::norm(p) * std::norm(q) - a * a;
}

RootLocation slice_membership_closed_form(int n, Complex p, Complex q, const Tolerances& tol) {
  // Margins are positive inside.
  double first = 0.0;
  double second = 0.0;
  if (n == 3) {
    first = 1.0 - std::abs(q);
    second = -r_value(p, q);
  } else if (n == 4) {
    first = 1.0 - std::abs(p) - std::norm(q);
    second = -s_value(p, q);
  } else {
    throw std::invalid_argument("closed-form slice membership exists only for n = 3, 4");
  }

  const double band = tol.boundary_band;
  RootLocation loc;
  if (first > band && second > band) {
    loc.verdict = Verdict::AllInside;
  } else if (first < -band || second < -band) {
    loc.verdict = Verdict::NotAllInside;
    loc.failing_stage = first < -band ? 0 : 1;
  } else {
    loc.verdict = Verdict::Indeterminate;
    loc.failing_stage = first <= band ? 0 : 1;
  }
  return loc;
}

std::vector<Complex> pi_action(const Weights& w, Complex lambda, std::span<const Complex> z) {
  if (w.size() != z.size()) throw std::invalid_argument("weights and point differ in dimension");
  std::vector<Complex> out(z.size());
  for (std::size_t i = 0; i < z.size(); ++i) {
    Complex scale{1.0, 0.0};
    for (int e = 0; e < w.k()[i]; ++e) scale *= lambda;
    out[i] = scale * z[i];
  }
  return out;
}

DomainMembership symmetrized_polydisc_membership(const Tolerances& tol) {
  return [tol](std::span<const Complex> s) {
    return in_symmetrized_polydisc(SymPoint{{s.begin(), s.end()}}, tol).verdict;
  };
}

DomainMembership slice_membership(int n, const Tolerances& tol) {
  if (n < 3) throw std::invalid_argument("slice dimension n must be >= 3");
  return [n, tol](std::span<const Complex> free) {
    return cohn_all_roots_in_disc(slice_poly(SliceCoords(n, {free.begin(), free.end()})), tol).verdict;
  };
}

DomainMembership sublevel_membership(std::function<double(std::span<const Complex>)> phi,
                                     const Tolerances& tol) {
  return [phi = std::move(phi), band = tol.boundary_band](std::span<const Complex> z) {
    const double v = phi(z);
    if (v < 1.0 - band) return Verdict::AllInside;
    if (v > 1.0 + band) return Verdict::NotAllInside;
    return Verdict::Indeterminate;
  };
}

}  // namespace symdisc
