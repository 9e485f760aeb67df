#pragma once

#include <complex>
#include <span>
#include <vector>

namespace symdisc {

using Complex = std::complex<double>;

/// Complex polynomial stored in descending powers: coeffs()[j] multiplies
/// zeta^(degree - j).
///
/// The constructor only enforces a nonempty, finite coefficient vector. A
/// zero leading coefficient is representable because some intermediate
/// results (reversed_conjugate) are deliberately left untrimmed; use
/// normalize() before any root-location query.
class Poly {
 public:
  explicit Poly(std::vector<Complex> coeffs);
  Poly(std::initializer_list<Complex> coeffs);

  [[nodiscard]] int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] std::span<const Complex> coeffs() const { return coeffs_; }
  [[nodiscard]] const Complex& operator[](std::size_t j) const { return coeffs_[j]; }
  [[nodiscard]] const Complex& leading() const { return coeffs_.front(); }
  [[nodiscard]] const Complex& constant() const { return coeffs_.back(); }

  /// Largest coefficient modulus.
  [[nodiscard]] double max_coeff_modulus() const;

  /// True when the leading coefficient is nonzero and the largest
  /// coefficient modulus is exactly 1.
  [[nodiscard]] bool is_normalized() const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  std::vector<Complex> coeffs_;
};

/// Trims leading zeros and divides by the largest coefficient modulus.
/// Throws std::domain_error("zero polynomial") when every coefficient is 0.
Poly normalize(const Poly& p);

/// Horner evaluation.
Complex eval(const Poly& p, Complex z);

/// The degree-n polynomial zeta^n * conj(p(1/conj(zeta))): coefficients are
/// conj(a_{n-j}). Not trimmed.
Poly reversed_conjugate(const Poly& p);

/// Schur transform (conj(a0) p - a_n reversed_conjugate(p)) / zeta.
///
/// The constant term of the numerator is conj(a0) a_n - a_n conj(a0) == 0, so
/// the division is done by dropping it. The leading coefficient is stored as
/// the real number |a0|^2 - |a_n|^2.
/// Throws std::domain_error for constant input.
Poly schur_transform(const Poly& p);

/// 1 + max_{j>=1} |a_j / a_0|. Requires a nonzero leading coefficient.
double cauchy_bound(const Poly& p);

}  // namespace symdisc
