#include "lagcorr/qrational.hpp"

#include <algorithm>

#include "lagcorr/error.hpp"

namespace lagcorr {

QRational::QRational(QLaurent numerator, QLaurent denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero()) throw Error(ErrorCode::DivisionByZero, "zero denominator");
  const long shift = -den_.min_exponent();
  const GaussianRational scale = den_.coefficient(den_.min_exponent()).inverse();
  den_ = den_.shifted(shift) * scale;
  num_ = num_.shifted(shift) * scale;
}

QSeries QRational::expand(long order) const {
  QSeries out;
  out.order = order;
  out.certified_finite = den_.terms().size() == 1;
  if (num_.is_zero()) return out;
  // den = 1 + d_1 x + ... ; invert as a power series through the span the
  // numerator needs.
  const long lowest = num_.min_exponent();
  const long span = order - lowest;
  if (span < 0) return out;
  std::vector<GaussianRational> inv(static_cast<std::size_t>(span + 1));
  inv[0] = 1;
  for (long k = 1; k <= span; ++k) {
    GaussianRational acc;
    for (const auto& [e, c] : den_.terms()) {
      if (e == 0) continue;
      if (e > k) break;
      acc += c * inv[static_cast<std::size_t>(k - e)];
    }
    inv[static_cast<std::size_t>(k)] = -acc;
  }
  QLaurent::Terms terms;
  for (const auto& [e, c] : num_.terms()) {
    for (long k = 0; e + k <= order; ++k) {
      const auto& d = inv[static_cast<std::size_t>(k)];
      if (d.is_zero()) continue;
      terms[e + k] += c * d;
    }
  }
  out.terms = QLaurent(std::move(terms));
  return out;
}

QRational QRational::apply_symmetry(SymmetryMode mode) const {
  return {q_symmetry_apply(num_, mode), q_symmetry_apply(den_, mode)};
}

std::string QRational::to_string() const {
  if (den_ == QLaurent(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::optional<std::vector<GaussianRational>> solve_linear(std::vector<std::vector<GaussianRational>> a,
                                                          std::vector<GaussianRational> b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    std::swap(b[p], b[r]);
    const GaussianRational inv = a[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) a[r][k] *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const GaussianRational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (!b[i].is_zero()) return std::nullopt;
  }
  std::vector<GaussianRational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

std::optional<QRational> pade(const QSeries& s, long num_deg, long den_deg) {
  const long lead = s.leading_exponent();
  const long needed = num_deg + den_deg + 1;
  if (s.known_span() < needed) {
    throw Error(ErrorCode::InsufficientTerms, "Pade [" + std::to_string(num_deg) + "/" +
                                                  std::to_string(den_deg) + "] needs " + std::to_string(needed) +
                                                  " coefficients");
  }
  auto c = [&](long k) { return k < 0 ? GaussianRational() : s.coefficient(lead + k); };
  // Denominator 1 + d_1 x + ... + d_M x^M; for k in (L, L+M]:
  //   c_k + sum_j d_j c_{k-j} = 0.
  std::vector<std::vector<GaussianRational>> a;
  std::vector<GaussianRational> rhs;
  for (long k = num_deg + 1; k <= num_deg + den_deg; ++k) {
    std::vector<GaussianRational> row;
    for (long j = 1; j <= den_deg; ++j) row.push_back(c(k - j));
    a.push_back(std::move(row));
    rhs.push_back(-c(k));
  }
  std::vector<GaussianRational> d;
  if (den_deg > 0) {
    auto sol = solve_linear(std::move(a), std::move(rhs));
    if (!sol) return std::nullopt;
    d = std::move(*sol);
  }
  QLaurent::Terms den{{0, GaussianRational(1)}};
  for (long j = 1; j <= den_deg; ++j) den[j] = d[static_cast<std::size_t>(j - 1)];
  QLaurent::Terms num;
  for (long k = 0; k <= num_deg; ++k) {
    GaussianRational acc = c(k);
    for (long j = 1; j <= std::min(k, den_deg); ++j) acc += d[static_cast<std::size_t>(j - 1)] * c(k - j);
    num[k] = acc;
  }
  return QRational(QLaurent(std::move(num)).shifted(lead), QLaurent(std::move(den)));
}

std::optional<QRational> rational_reconstruct(const QSeries& s, long max_deg) {
  const long span = s.terms.is_zero() ? 0 : s.known_span();
  if (span < 2 * max_deg + 2) {
    throw Error(ErrorCode::InsufficientTerms, "need " + std::to_string(2 * max_deg + 2) +
                                                  " consecutive coefficients, have " + std::to_string(span));
  }
  for (long total = 0; total <= 2 * max_deg; ++total) {
    for (long den_deg = std::min(total, max_deg); den_deg >= 0 && total - den_deg <= max_deg; --den_deg) {
      const long num_deg = total - den_deg;
      auto candidate = pade(s, num_deg, den_deg);
      if (!candidate) continue;
      if (candidate->expand(s.order).terms == s.terms) return candidate;
    }
  }
  return std::nullopt;
}

}  // namespace lagcorr
