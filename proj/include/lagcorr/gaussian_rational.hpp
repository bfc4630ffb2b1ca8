#pragma once

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace lagcorr {

/// Exact element of Q[i]. Both parts are kept canonical (lowest terms,
/// positive denominator), so structural equality is value equality.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(long value) : re_(value) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int value) : re_(value) {}   // NOLINT(google-explicit-constructor)
  GaussianRational(mpq_class re, mpq_class im = 0);

  static GaussianRational i() { return {mpq_class(0), mpq_class(1)}; }
  static GaussianRational fraction(long num, long den);
  /// i^k for any integer k.
  static GaussianRational i_pow(long k);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const noexcept { return sgn(im_) == 0; }
  bool is_imaginary() const noexcept { return sgn(re_) == 0; }
  /// True iff the value lies in Z[i].
  bool is_gaussian_integer() const;

  GaussianRational conj() const { return {re_, -im_}; }
  GaussianRational inverse() const;

  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  GaussianRational operator-() const { return {-re_, -im_}; }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

  /// Text form: "a/b", "c/d*i", "a/b+c/d*i", with "i" and "-i" for unit imaginary parts.
  std::string to_string() const;
  static GaussianRational parse(std::string_view text);

 private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline bool is_zero(const GaussianRational& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const GaussianRational& x);

enum class ArithOp { add, sub, mul, div };

/// Dispatching form of the field operations; div by zero throws DivisionByZero.
GaussianRational gr_arith(const GaussianRational& a, const GaussianRational& b, ArithOp op);

}  // namespace lagcorr
