#include "lagcorr/hseries.hpp"

#include <algorithm>
#include <vector>

#include "lagcorr/error.hpp"

namespace lagcorr {

HSeries::HSeries(const GaussianRational& constant, long order) : order_(order) {
  if (!constant.is_zero() && order >= 0) coeffs_.emplace(0, constant);
}

HSeries::HSeries(Coeffs coeffs, long order) : order_(order) {
  for (auto& [e, c] : coeffs) {
    if (e <= order && !c.is_zero()) coeffs_.emplace(e, std::move(c));
  }
}

HSeries HSeries::monomial(const GaussianRational& c, long exponent, long order) {
  HSeries out(order);
  out.add_term(exponent, c);
  return out;
}

GaussianRational HSeries::coefficient(long exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? GaussianRational() : it->second;
}

long HSeries::valuation() const { return coeffs_.empty() ? order_ + 1 : coeffs_.begin()->first; }

void HSeries::add_term(long exponent, const GaussianRational& c) {
  if (exponent > order_ || c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

HSeries HSeries::truncated(long order) const {
  if (order >= order_) return *this;
  HSeries out(order);
  for (const auto& [e, c] : coeffs_) {
    if (e > order) break;
    out.coeffs_.emplace(e, c);
  }
  return out;
}

HSeries HSeries::shifted(long k) const {
  HSeries out(order_ + k);
  for (const auto& [e, c] : coeffs_) out.coeffs_.emplace(e + k, c);
  return out;
}

HSeries& HSeries::operator+=(const HSeries& o) {
  *this = truncated(std::min(order_, o.order_));
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

HSeries& HSeries::operator-=(const HSeries& o) {
  *this = truncated(std::min(order_, o.order_));
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

HSeries& HSeries::operator*=(const HSeries& o) {
  constexpr long kInf = std::numeric_limits<long>::max() / 4;
  const long va = is_zero() ? kInf : valuation();
  const long vb = o.is_zero() ? kInf : o.valuation();
  const long order = std::min({va + o.order_, vb + order_, order_ + o.order_ + 1});
  HSeries out(order);
  for (const auto& [ea, ca] : coeffs_) {
    for (const auto& [eb, cb] : o.coeffs_) {
      if (ea + eb > order) break;
      out.add_term(ea + eb, ca * cb);
    }
  }
  *this = std::move(out);
  return *this;
}

HSeries& HSeries::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [e, x] : coeffs_) x *= c;
  return *this;
}

HSeries HSeries::operator-() const {
  HSeries out = *this;
  for (auto& [e, c] : out.coeffs_) c = -c;
  return out;
}

HSeries HSeries::inverse() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of a series with no known nonzero term");
  const long v = valuation();
  const long span = order_ - v;  // unit part known through h^span
  const GaussianRational lead_inv = coeffs_.begin()->second.inverse();
  // u = a / (lead h^v) = 1 + sum_{k>=1} u_k h^k; solve b * u = 1 term by term.
  std::vector<GaussianRational> u(static_cast<std::size_t>(span + 1));
  for (const auto& [e, c] : coeffs_) u[static_cast<std::size_t>(e - v)] = c * lead_inv;
  std::vector<GaussianRational> b(static_cast<std::size_t>(span + 1));
  b[0] = 1;
  for (long k = 1; k <= span; ++k) {
    GaussianRational acc;
    for (long j = 1; j <= k; ++j) {
      if (!u[static_cast<std::size_t>(j)].is_zero()) {
        acc += u[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(k - j)];
      }
    }
    b[static_cast<std::size_t>(k)] = -acc;
  }
  HSeries out(span - v);
  for (long k = 0; k <= span; ++k) out.add_term(k - v, b[static_cast<std::size_t>(k)] * lead_inv);
  return out;
}

bool HSeries::agrees_with(const HSeries& o, long order) const {
  return truncated(order).coeffs_ == o.truncated(order).coeffs_;
}

std::string HSeries::to_string() const {
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    std::string coeff = c.to_string();
    if (!c.is_real() && !c.is_imaginary()) coeff = "(" + coeff + ")";
    std::string mono = e == 0 ? "" : (e == 1 ? "h" : "h^" + (e < 0 ? "(" + std::to_string(e) + ")" : std::to_string(e)));
    std::string piece;
    if (mono.empty()) {
      piece = coeff;
    } else if (coeff == "1") {
      piece = mono;
    } else if (coeff == "-1") {
      piece = "-" + mono;
    } else {
      piece = coeff + "*" + mono;
    }
    if (!out.empty() && piece.front() != '-') out += " + ";
    else if (!out.empty()) {
      out += " - ";
      piece.erase(0, 1);
    }
    out += piece;
  }
  if (out.empty()) out = "0";
  const long next = order_ + 1;
  out += " + O(h^" + (next < 0 ? "(" + std::to_string(next) + ")" : std::to_string(next)) + ")";
  return out;
}

HSeries q_substitute_hbar(const QLaurent& f, long order) {
  HSeries out(order);
  if (order < 0) return out;
  // (q^{1/2})^e -> i^e exp(i e h / 2) = i^e sum_k (i e / 2)^k h^k / k!
  for (const auto& [e, c] : f.terms()) {
    const GaussianRational step = GaussianRational::i() * GaussianRational::fraction(e, 2);
    GaussianRational term = c * GaussianRational::i_pow(e);
    HSeries::Coeffs coeffs;
    for (long k = 0; k <= order; ++k) {
      if (k > 0) term = term * step / GaussianRational(k);
      coeffs.emplace(k, term);
      if (term.is_zero()) break;
    }
    out += HSeries(std::move(coeffs), order);
  }
  return out;
}

}  // namespace lagcorr
