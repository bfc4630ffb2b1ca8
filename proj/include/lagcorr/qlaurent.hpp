#pragma once

#include <map>
#include <string>

#include "lagcorr/gaussian_rational.hpp"

namespace lagcorr {

/// Laurent polynomial in q^{1/2} over Q[i]. Exponents are stored as integer
/// multiples of 1/2, so the key 3 means q^{3/2}. Zero coefficients are never stored.
class QLaurent {
 public:
  using Terms = std::map<long, GaussianRational>;

  QLaurent() = default;
  QLaurent(const GaussianRational& constant);  // NOLINT(google-explicit-constructor)
  QLaurent(int constant) : QLaurent(GaussianRational(constant)) {}  // NOLINT(google-explicit-constructor)
  explicit QLaurent(Terms terms);

  /// c * q^{half_exponent/2}
  static QLaurent monomial(const GaussianRational& c, long half_exponent);
  /// q^{1/2}
  static QLaurent q_half() { return monomial(1, 1); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  GaussianRational coefficient(long half_exponent) const;
  long min_exponent() const;
  long max_exponent() const;

  QLaurent& operator+=(const QLaurent& o);
  QLaurent& operator-=(const QLaurent& o);
  QLaurent& operator*=(const QLaurent& o);
  QLaurent& operator*=(const GaussianRational& c);

  friend QLaurent operator+(QLaurent a, const QLaurent& b) { return a += b; }
  friend QLaurent operator-(QLaurent a, const QLaurent& b) { return a -= b; }
  friend QLaurent operator*(QLaurent a, const QLaurent& b) { return a *= b; }
  friend QLaurent operator*(QLaurent a, const GaussianRational& c) { return a *= c; }
  friend QLaurent operator*(const GaussianRational& c, QLaurent a) { return a *= c; }
  QLaurent operator-() const;

  friend bool operator==(const QLaurent& a, const QLaurent& b) { return a.terms_ == b.terms_; }

  /// Multiply by q^{half_exponent/2}.
  QLaurent shifted(long half_exponent) const;
  /// Substitute q^{1/2} -> sign * q^{-1/2} (sign = +1 or -1).
  QLaurent reflected(int sign) const;
  /// Substitute q^{1/2} -> -q^{1/2}.
  QLaurent negated_variable() const;

  bool all_gaussian_integers() const;

  /// Human-readable form such as "-q^(1/2)+3/2*q-i*q^(-1)".
  std::string to_string() const;

 private:
  void add_term(long exponent, const GaussianRational& c);

  Terms terms_;
};

inline bool is_zero(const QLaurent& x) { return x.is_zero(); }

/// One-sided q^{1/2}-series known through the half-exponent `order`
/// (inclusive). Coefficients above `order` are unknown unless
/// `certified_finite` is set, in which case they are known to vanish.
struct QSeries {
  QLaurent terms;
  long order = 0;
  bool certified_finite = false;

  GaussianRational coefficient(long half_exponent) const { return terms.coefficient(half_exponent); }
  /// Lowest stored exponent; throws InsufficientTerms when no term is stored.
  long leading_exponent() const;
  /// Number of consecutive half-exponent slots known from the leading exponent on.
  long known_span() const;

  friend bool operator==(const QSeries& a, const QSeries& b) {
    return a.order == b.order && a.terms == b.terms;
  }
};

QSeries operator*(const GaussianRational& c, const QSeries& s);

enum class SymmetryMode { invert, negate_invert };

/// q^{1/2} -> q^{-1/2} (invert) or q^{1/2} -> -q^{-1/2} (negate_invert).
QLaurent q_symmetry_apply(const QLaurent& f, SymmetryMode mode);
/// Same, for a series; only valid when the series carries a certified finite tail.
QLaurent q_symmetry_apply(const QSeries& f, SymmetryMode mode);

}  // namespace lagcorr
