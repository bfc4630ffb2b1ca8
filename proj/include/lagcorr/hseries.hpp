#pragma once

#include <limits>
#include <map>
#include <string>

#include "lagcorr/gaussian_rational.hpp"
#include "lagcorr/qlaurent.hpp"

namespace lagcorr {

/// Truncated Laurent series in hbar over Q[i]: coefficients are exact for
/// every exponent <= order(); higher terms are unknown. Finitely many
/// negative exponents are allowed.
///
/// Products only claim the precision the operands' lowest exponents permit:
/// (A + O(h^{Na+1})) (B + O(h^{Nb+1})) is known through
/// min(val(A) + Nb, val(B) + Na, Na + Nb + 1).
class HSeries {
 public:
  using Coeffs = std::map<long, GaussianRational>;

  explicit HSeries(long order = 0) : order_(order) {}
  HSeries(const GaussianRational& constant, long order);
  HSeries(Coeffs coeffs, long order);

  static HSeries monomial(const GaussianRational& c, long exponent, long order);

  const Coeffs& coeffs() const noexcept { return coeffs_; }
  long order() const noexcept { return order_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  GaussianRational coefficient(long exponent) const;
  /// Lowest stored exponent, or order()+1 for the zero series.
  long valuation() const;

  /// Drop knowledge beyond `order` (no-op if already lower).
  HSeries truncated(long order) const;
  /// Multiply by hbar^k; the known range moves with it.
  HSeries shifted(long k) const;

  HSeries& operator+=(const HSeries& o);
  HSeries& operator-=(const HSeries& o);
  HSeries& operator*=(const HSeries& o);
  HSeries& operator*=(const GaussianRational& c);

  friend HSeries operator+(HSeries a, const HSeries& b) { return a += b; }
  friend HSeries operator-(HSeries a, const HSeries& b) { return a -= b; }
  friend HSeries operator*(HSeries a, const HSeries& b) { return a *= b; }
  friend HSeries operator*(HSeries a, const GaussianRational& c) { return a *= c; }
  friend HSeries operator*(const GaussianRational& c, HSeries a) { return a *= c; }
  HSeries operator-() const;

  /// Multiplicative inverse; the result is known through order() - 2*valuation().
  HSeries inverse() const;

  /// Exact equality of coefficients and of the known range.
  friend bool operator==(const HSeries& a, const HSeries& b) {
    return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
  }
  /// Equality of all coefficients with exponent <= order.
  bool agrees_with(const HSeries& o, long order) const;

  std::string to_string() const;

 private:
  void add_term(long exponent, const GaussianRational& c);

  Coeffs coeffs_;
  long order_;
};

inline bool is_zero(const HSeries& x) { return x.is_zero(); }

/// Substitute q^{1/2} = i e^{i hbar/2} into a Laurent polynomial, expanding
/// every exponential exactly through hbar^order.
HSeries q_substitute_hbar(const QLaurent& f, long order);

}  // namespace lagcorr
