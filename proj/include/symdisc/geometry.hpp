#pragma once

#include <functional>
#include <span>
#include <vector>

#include "symdisc/poly.hpp"
#include "symdisc/root_location.hpp"

namespace symdisc {

/// Point of C^n in elementary-symmetric coordinates (s_1, ..., s_n).
struct SymPoint {
  std::vector<Complex> coords;

  friend bool operator==(const SymPoint&, const SymPoint&) = default;
};

/// Exponents k_1 <= ... <= k_n of a quasi-balanced action.
class Weights {
 public:
  /// Throws std::invalid_argument unless 1 <= k_1 <= ... <= k_n.
  explicit Weights(std::vector<int> k);

  /// (1, 2, ..., n): the action on symmetric coordinates.
  static Weights symmetric(int n);
  /// (first, first+1, ..., last).
  static Weights range(int first, int last);

  [[nodiscard]] std::span<const int> k() const { return k_; }
  [[nodiscard]] std::size_t size() const { return k_.size(); }

 private:
  std::vector<int> k_;
};

/// Coordinates on the slice {a_1 = ... = a_m = 0}, m = floor(n/2), of monic
/// degree-n polynomials: the free coefficients (a_{m+1}, ..., a_n).
class SliceCoords {
 public:
  /// Throws std::invalid_argument unless n >= 3 and free.size() == n - n/2.
  SliceCoords(int n, std::vector<Complex> free);

  [[nodiscard]] int n() const { return n_; }
  [[nodiscard]] int m() const { return n_ / 2; }
  [[nodiscard]] std::span<const Complex> free() const { return free_; }
  /// Raw coefficient a_j, 1 <= j <= n (zero for j <= m).
  [[nodiscard]] Complex coeff(int j) const;
  /// Slice weights (m+1, ..., n): coefficient a_j scales like lambda^j.
  [[nodiscard]] Weights weights() const { return Weights::range(m() + 1, n_); }

  friend bool operator==(const SliceCoords&, const SliceCoords&) = default;

 private:
  int n_;
  std::vector<Complex> free_;
};

/// Membership oracle for a domain in C^n. Must be effect-free.
using DomainMembership = std::function<Verdict(std::span<const Complex>)>;

/// Elementary symmetric functions of z, by multiplying out prod (1 + z_j t).
SymPoint symmetrize(std::span<const Complex> z);

/// Vieta bridge: zeta^n + sum_k (-1)^k s_k zeta^(n-k), whose roots are the
/// fibre of s under symmetrize.
Poly poly_from_sym_point(const SymPoint& s);

RootLocation in_symmetrized_polydisc(const SymPoint& s, const Tolerances& tol = {});

/// zeta^n + sum_{j>m} a_j zeta^(n-j).
Poly slice_poly(const SliceCoords& c);

/// |conj(p) q (1-|q|^2) - p^2 conj(q)| + |p|^2 - (1-|q|^2)^2.
double r_value(Complex p, Complex q);

/// (1-|q|^2) |conj(p) q A - p^3 conj(q)^2| + |p|^4 |q|^2 - A^2,
/// A = (1-|q|^2)^2 - |p|^2.
double s_value(Complex p, Complex q);

/// Membership of (p, q) in the n = 3 slice {|q| < 1, r < 0} or the n = 4
/// slice {|p| + |q|^2 < 1, s < 0}, each inequality taken with margin
/// boundary_band. Throws std::invalid_argument for other n.
RootLocation slice_membership_closed_form(int n, Complex p, Complex q, const Tolerances& tol = {});

/// (lambda^k_1 z_1, ..., lambda^k_n z_n).
std::vector<Complex> pi_action(const Weights& w, Complex lambda, std::span<const Complex> z);

/// Cohn-test membership of the symmetrized n-disc, in symmetric coordinates.
DomainMembership symmetrized_polydisc_membership(const Tolerances& tol = {});

/// Cohn-test membership of the degree-n slice, in free coordinates.
DomainMembership slice_membership(int n, const Tolerances& tol = {});

/// Membership via a defining function: AllInside when phi < 1 - band,
/// NotAllInside when phi > 1 + band.
DomainMembership sublevel_membership(std::function<double(std::span<const Complex>)> phi,
                                     const Tolerances& tol = {});

}  // namespace symdisc
