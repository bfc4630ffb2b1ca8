#include "lagcorr/qlaurent.hpp"

#include "lagcorr/error.hpp"

namespace lagcorr {

QLaurent::QLaurent(const GaussianRational& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

QLaurent::QLaurent(Terms terms) {
  for (auto& [e, c] : terms) {
    if (!c.is_zero()) terms_.emplace(e, std::move(c));
  }
}

QLaurent QLaurent::monomial(const GaussianRational& c, long half_exponent) {
  QLaurent out;
  if (!c.is_zero()) out.terms_.emplace(half_exponent, c);
  return out;
}

GaussianRational QLaurent::coefficient(long half_exponent) const {
  auto it = terms_.find(half_exponent);
  return it == terms_.end() ? GaussianRational() : it->second;
}

long QLaurent::min_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InsufficientTerms, "min_exponent of zero Laurent polynomial");
  return terms_.begin()->first;
}

long QLaurent::max_exponent() const {
  if (terms_.empty()) throw Error(ErrorCode::InsufficientTerms, "max_exponent of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

void QLaurent::add_term(long exponent, const GaussianRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

QLaurent& QLaurent::operator*=(const QLaurent& o) {
  QLaurent out;
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, ca * cb);
  }
  terms_ = std::move(out.terms_);
  return *this;
}

QLaurent& QLaurent::operator*=(const GaussianRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, x] : terms_) x *= c;
  return *this;
}

QLaurent QLaurent::operator-() const {
  QLaurent out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

QLaurent QLaurent::shifted(long half_exponent) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + half_exponent, c);
  return out;
}

QLaurent QLaurent::reflected(int sign) const {
  QLaurent out;
  for (const auto& [e, c] : terms_) {
    // (sign * q^{-1/2})^e = sign^e q^{-e/2}
    const bool flip = sign < 0 && (e % 2 != 0);
    out.terms_.emplace(-e, flip ? -c : c);
  }
  return out;
}

QLaurent QLaurent::negated_variable() const {
  QLaurent out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, (e % 2 != 0) ? -c : c);
  return out;
}

bool QLaurent::all_gaussian_integers() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_gaussian_integer()) return false;
  }
  return true;
}

std::string QLaurent::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string coeff = c.to_string();
    const bool compound = !c.is_real() && !c.is_imaginary();
    if (compound) coeff = "(" + coeff + ")";
    std::string mono;
    if (e != 0) {
      if (e == 2) {
        mono = "q";
      } else if (e % 2 == 0) {
        mono = "q^" + std::to_string(e / 2);
        if (e < 0) mono = "q^(" + std::to_string(e / 2) + ")";
      } else {
        mono = "q^(" + std::to_string(e) + "/2)";
      }
    }
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
    if (!out.empty() && piece.front() != '-') out += '+';
    out += piece;
  }
  return out;
}

long QSeries::leading_exponent() const {
  if (terms.is_zero()) throw Error(ErrorCode::InsufficientTerms, "series has no nonzero coefficient");
  return terms.min_exponent();
}

long QSeries::known_span() const { return order - leading_exponent() + 1; }

QSeries operator*(const GaussianRational& c, const QSeries& s) {
  return {s.terms * c, s.order, s.certified_finite};
}

QLaurent q_symmetry_apply(const QLaurent& f, SymmetryMode mode) {
  return f.reflected(mode == SymmetryMode::invert ? 1 : -1);
}

QLaurent q_symmetry_apply(const QSeries& f, SymmetryMode mode) {
  if (!f.certified_finite) {
    throw Error(ErrorCode::InfiniteSupport, "series through q^(" + std::to_string(f.order) +
                                                "/2) has no certified finite tail");
  }
  return q_symmetry_apply(f.terms, mode);
}

}  // namespace lagcorr
