#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lagcorr/gaussian_rational.hpp"
#include "lagcorr/qlaurent.hpp"

namespace lagcorr {

/// Rational function in q^{1/2}: numerator / denominator, both Laurent
/// polynomials. Normalized so the denominator's lowest term is exactly 1·q^0.
class QRational {
 public:
  QRational(QLaurent numerator, QLaurent denominator);
  QRational(const QLaurent& value) : QRational(value, QLaurent(1)) {}  // NOLINT(google-explicit-constructor)

  const QLaurent& numerator() const noexcept { return num_; }
  const QLaurent& denominator() const noexcept { return den_; }

  /// Laurent expansion in ascending powers of q^{1/2}, through half-exponent `order`.
  /// A polynomial denominator (single term) gives a certified finite series.
  QSeries expand(long order) const;

  QRational apply_symmetry(SymmetryMode mode) const;
  QRational operator-() const { return {-num_, den_}; }
  friend QRational operator*(const GaussianRational& c, const QRational& r) { return {r.num_ * c, r.den_}; }

  /// Equality as rational functions (cross-multiplication).
  friend bool operator==(const QRational& a, const QRational& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  std::string to_string() const;

 private:
  QLaurent num_;
  QLaurent den_;
};

/// Solve A x = b over Q[i] by Gaussian elimination. Free variables are set
/// to zero; returns nullopt when the system is inconsistent.
std::optional<std::vector<GaussianRational>> solve_linear(std::vector<std::vector<GaussianRational>> a,
                                                          std::vector<GaussianRational> b);

/// Pade candidate with numerator degree <= num_deg and denominator degree
/// <= den_deg (in q^{1/2}, after factoring out the leading power). Only the
/// defining equations are imposed; nothing past them is checked.
std::optional<QRational> pade(const QSeries& s, long num_deg, long den_deg);

/// Find numerator/denominator Laurent polynomials of degree <= max_deg whose
/// expansion reproduces every supplied coefficient. Candidates are tried in
/// order of increasing total degree, so the returned form is the smallest one.
/// Throws InsufficientTerms when fewer than 2*max_deg+2 consecutive
/// coefficients are known; returns nullopt when no candidate fits.
std::optional<QRational> rational_reconstruct(const QSeries& s, long max_deg);

}  // namespace lagcorr
