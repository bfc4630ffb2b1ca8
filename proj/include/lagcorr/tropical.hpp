#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace lagcorr {

/// Integral vector in Z^d.
class IntVector {
 public:
  IntVector() = default;
  explicit IntVector(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {}
  IntVector(std::initializer_list<std::int64_t> coords) : coords_(coords) {}

  const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
  std::size_t dim() const noexcept { return coords_.size(); }
  bool is_zero() const;

  IntVector operator+(const IntVector& o) const;
  IntVector operator-() const;
  IntVector scaled(std::int64_t k) const;
  /// v / |v|; throws ZeroVector for 0.
  IntVector primitive() const;

  std::string to_string() const;

  friend bool operator==(const IntVector&, const IntVector&) = default;
  friend auto operator<=>(const IntVector& a, const IntVector& b) { return a.coords_ <=> b.coords_; }

 private:
  std::vector<std::int64_t> coords_;
};

/// |v|: the gcd of the coordinates. Throws ZeroVector for 0.
std::int64_t divisibility(const IntVector& v);

/// |v1 ^ v2|: index of the lattice spanned by v1, v2 inside its saturation,
/// computed as the gcd of all 2x2 minors. Throws DegeneratePair if every minor vanishes.
std::int64_t vertex_multiplicity(const IntVector& v1, const IntVector& v2);

/// Contact data: finitely many nonzero vectors with positive multiplicities.
class ContactData {
 public:
  using Support = std::map<IntVector, int>;

  ContactData() = default;
  /// Throws ZeroVector / IncompatibleContact on a zero vector or a multiplicity < 1.
  explicit ContactData(Support support);
  /// Indicator function of a set of distinct vectors.
  static ContactData indicator(const std::vector<IntVector>& vectors);

  const Support& support() const noexcept { return support_; }
  bool empty() const noexcept { return support_.empty(); }
  int multiplicity(const IntVector& v) const;

  ContactData operator+(const ContactData& o) const;

  std::string to_string() const;

  friend bool operator==(const ContactData&, const ContactData&) = default;
  friend auto operator<=>(const ContactData& a, const ContactData& b) { return a.support_ <=> b.support_; }

 private:
  Support support_;
};

/// |Aut p| = prod_v p(v)!
std::int64_t aut_p_order(const ContactData& p);
/// prod_v |v|^{p(v)}
std::int64_t stack_factor(const ContactData& p);
/// |p| = sum_v p(v)
std::int64_t size(const ContactData& p);

/// Curve class: intersection numbers with the divisors D_v (keyed by
/// primitive v) together with the energy E. Energies add under the monoid
/// sum. The zero class has no intersections and energy 0; any other class
/// must have energy >= 1.
class CurveClass {
 public:
  using Intersections = std::map<IntVector, std::int64_t>;

  CurveClass() = default;
  /// Energy defaults to sum_v max(beta.D_v, 0).
  explicit CurveClass(Intersections dots);
  CurveClass(Intersections dots, mpq_class energy);

  const Intersections& dots() const noexcept { return dots_; }
  const mpq_class& energy() const noexcept { return energy_; }
  std::int64_t dot(const IntVector& primitive) const;
  bool is_zero() const { return dots_.empty() && sgn(energy_) == 0; }

  CurveClass operator+(const CurveClass& o) const;

  std::string to_string() const;

  friend bool operator==(const CurveClass& a, const CurveClass& b) {
    return a.dots_ == b.dots_ && a.energy_ == b.energy_;
  }
  friend bool operator<(const CurveClass& a, const CurveClass& b) {
    if (a.energy_ != b.energy_) return a.energy_ < b.energy_;
    return a.dots_ < b.dots_;
  }

 private:
  void validate() const;

  Intersections dots_;
  mpq_class energy_{0};
};

/// How contact orders enter sum_k p(k v) = beta . D_v.
enum class ContactSum {
  verbatim,  ///< sum_k p(k v)
  weighted,  ///< sum_k k p(k v)
};

/// True iff for every primitive v in beta or in the support of p, the
/// contact sum at v equals beta . D_v (missing entries read as 0).
bool compatible(const CurveClass& beta, const ContactData& p, ContactSum convention = ContactSum::verbatim);

}  // namespace lagcorr
