#include "lagcorr/tropical.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "lagcorr/error.hpp"

namespace lagcorr {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::Overflow, "contact statistic overflows int64");
  return out;
}

std::int64_t abs64(std::int64_t x) { return x < 0 ? -x : x; }

}  // namespace

bool IntVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](std::int64_t c) { return c == 0; });
}

IntVector IntVector::operator+(const IntVector& o) const {
  if (o.dim() != dim()) throw Error(ErrorCode::ObjectMismatch, "dimension mismatch in vector sum");
  IntVector out = *this;
  for (std::size_t k = 0; k < coords_.size(); ++k) out.coords_[k] += o.coords_[k];
  return out;
}

IntVector IntVector::operator-() const { return scaled(-1); }

IntVector IntVector::scaled(std::int64_t k) const {
  IntVector out = *this;
  for (auto& c : out.coords_) c *= k;
  return out;
}

IntVector IntVector::primitive() const {
  const std::int64_t g = divisibility(*this);
  IntVector out = *this;
  for (auto& c : out.coords_) c /= g;
  return out;
}

std::string IntVector::to_string() const {
  std::string out = "(";
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ',';
    out += std::to_string(coords_[k]);
  }
  return out + ")";
}

std::int64_t divisibility(const IntVector& v) {
  std::int64_t g = 0;
  for (auto c : v.coords()) g = std::gcd(g, abs64(c));
  if (g == 0) throw Error(ErrorCode::ZeroVector, "divisibility of the zero vector");
  return g;
}

std::int64_t vertex_multiplicity(const IntVector& v1, const IntVector& v2) {
  if (v1.dim() != v2.dim()) throw Error(ErrorCode::ObjectMismatch, "dimension mismatch");
  const auto& a = v1.coords();
  const auto& b = v2.coords();
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) g = std::gcd(g, abs64(a[i] * b[j] - a[j] * b[i]));
  }
  if (g == 0) throw Error(ErrorCode::DegeneratePair, v1.to_string() + " ^ " + v2.to_string() + " = 0");
  return g;
}

ContactData::ContactData(Support support) : support_(std::move(support)) {
  for (const auto& [v, m] : support_) {
    if (v.is_zero()) throw Error(ErrorCode::ZeroVector, "zero contact vector");
    if (m < 1) throw Error(ErrorCode::IncompatibleContact, "multiplicity " + std::to_string(m) + " < 1");
  }
}

ContactData ContactData::indicator(const std::vector<IntVector>& vectors) {
  Support support;
  for (const auto& v : vectors) {
    if (!support.emplace(v, 1).second) {
      throw Error(ErrorCode::IncompatibleContact, "repeated vector " + v.to_string() + " in indicator");
    }
  }
  return ContactData(std::move(support));
}

int ContactData::multiplicity(const IntVector& v) const {
  auto it = support_.find(v);
  return it == support_.end() ? 0 : it->second;
}

ContactData ContactData::operator+(const ContactData& o) const {
  ContactData out = *this;
  for (const auto& [v, m] : o.support_) out.support_[v] += m;
  return out;
}

std::string ContactData::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, m] : support_) {
    if (!first) out += ',';
    first = false;
    out += v.to_string() + ":" + std::to_string(m);
  }
  return out + "}";
}

std::int64_t aut_p_order(const ContactData& p) {
  std::int64_t out = 1;
  for (const auto& [v, m] : p.support()) {
    for (int k = 2; k <= m; ++k) out = checked_mul(out, k);
  }
  return out;
}

std::int64_t stack_factor(const ContactData& p) {
  std::int64_t out = 1;
  for (const auto& [v, m] : p.support()) {
    const std::int64_t d = divisibility(v);
    for (int k = 0; k < m; ++k) out = checked_mul(out, d);
  }
  return out;
}

std::int64_t size(const ContactData& p) {
  std::int64_t out = 0;
  for (const auto& [v, m] : p.support()) out += m;
  return out;
}

CurveClass::CurveClass(Intersections dots) {
  for (auto& [v, d] : dots) {
    if (d != 0) dots_.emplace(v, d);
  }
  for (const auto& [v, d] : dots_) energy_ += std::max<std::int64_t>(d, 0);
  validate();
}

CurveClass::CurveClass(Intersections dots, mpq_class energy) : energy_(std::move(energy)) {
  for (auto& [v, d] : dots) {
    if (d != 0) dots_.emplace(v, d);
  }
  energy_.canonicalize();
  validate();
}

void CurveClass::validate() const {
  for (const auto& [v, d] : dots_) {
    if (v.is_zero() || divisibility(v) != 1) {
      throw Error(ErrorCode::InvalidCurveClass, "divisor label " + v.to_string() + " is not primitive");
    }
  }
  if (!is_zero() && energy_ < 1) {
    throw Error(ErrorCode::InvalidCurveClass, "nonzero class with energy " + energy_.get_str() + " < 1");
  }
}

std::int64_t CurveClass::dot(const IntVector& primitive) const {
  auto it = dots_.find(primitive);
  return it == dots_.end() ? 0 : it->second;
}

CurveClass CurveClass::operator+(const CurveClass& o) const {
  Intersections dots = dots_;
  for (const auto& [v, d] : o.dots_) dots[v] += d;
  return CurveClass(std::move(dots), energy_ + o.energy_);
}

std::string CurveClass::to_string() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [v, d] : dots_) {
    if (!first) out += ',';
    first = false;
    out += "D" + v.to_string() + "=" + std::to_string(d);
  }
  return out + ";E=" + energy_.get_str() + "]";
}

bool compatible(const CurveClass& beta, const ContactData& p, ContactSum convention) {
  std::map<IntVector, std::int64_t> sums;
  for (const auto& [v, d] : beta.dots()) sums.emplace(v, 0);
  for (const auto& [w, m] : p.support()) {
    const std::int64_t k = divisibility(w);
    sums[w.primitive()] += convention == ContactSum::weighted ? k * m : m;
  }
  return std::all_of(sums.begin(), sums.end(), [&](const auto& entry) { return entry.second == beta.dot(entry.first); });
}

}  // namespace lagcorr
