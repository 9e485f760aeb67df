#include "symdisc/root_location.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace symdisc {

void Tolerances::validate() const {
  if (!(boundary_band > 0.0) || !(root_iter_tol > 0.0) || root_iter_max <= 0 || !(bisect_tol > 0.0))
    throw std::invalid_argument("tolerances must be strictly positive");
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::AllInside: return "AllInside";
    case Verdict::NotAllInside: return "NotAllInside";
    case Verdict::Indeterminate: return "Indeterminate";
  }
  return "Indeterminate";
}

Verdict verdict_from_string(std::string_view name) {
  if (name == "AllInside") return Verdict::AllInside;
  if (name == "NotAllInside") return Verdict::NotAllInside;
  if (name == "Indeterminate") return Verdict::Indeterminate;
  throw std::invalid_argument("unknown verdict '" + std::string(name) + "'");
}

RootLocation cohn_all_roots_in_disc(const Poly& p, const Tolerances& tol) {
  Poly q = normalize(p);
  for (int stage = 0;; ++stage) {
    const int n = q.degree();
    if (n == 0) return {Verdict::AllInside, std::nullopt, std::nullopt};

    const double margin = std::abs(q.leading()) - std::abs(q.constant());
    if (margin < -tol.boundary_band) return {Verdict::NotAllInside, std::nullopt, stage};
    if (margin <= tol.boundary_band) return {Verdict::Indeterminate, std::nullopt, stage};
    if (n == 1) return {Verdict::AllInside, std::nullopt, std::nullopt};

    q = normalize(schur_transform(q));
  }
}

}  // namespace symdisc
