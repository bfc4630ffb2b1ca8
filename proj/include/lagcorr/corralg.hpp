#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagcorr/error.hpp"
#include "lagcorr/gaussian_rational.hpp"
#include "lagcorr/hseries.hpp"
#include "lagcorr/partitions.hpp"
#include "lagcorr/qlaurent.hpp"

namespace lagcorr {

/// Symbolic objects of the correspondence category: a point, the Hilbert
/// scheme Y^[n], the evaluation stack Y^mu, its etale cover Y^mu (power),
/// and the coproduct of all stacks Y^mu with |mu| = n.
struct ObjectId {
  enum class Kind { Point, Hilb, StackY, YPower, StackCoproduct };

  Kind kind = Kind::Point;
  int n = 0;
  Partition mu;

  static ObjectId point() { return {}; }
  static ObjectId hilb(int n);
  static ObjectId stack(const Partition& mu) { return {Kind::StackY, mu.n(), mu}; }
  static ObjectId ypower(const Partition& mu) { return {Kind::YPower, mu.n(), mu}; }
  static ObjectId stack_coproduct(int n);

  /// True if `summand` is this object or one of its coproduct summands.
  bool contains(const ObjectId& summand) const;
  std::string to_string() const;

  friend bool operator==(const ObjectId&, const ObjectId&) = default;
  friend auto operator<=>(const ObjectId&, const ObjectId&) = default;
};

enum class GenKind { Delta, DeltaDagger, IdHilb, IdStack, Ell, LSigma, SigmaMu, E };

/// A named lagrangian correspondence between two objects.
///
///   Delta(mu)       : StackY(mu) -> Hilb(n)
///   DeltaDagger(mu) : Hilb(n)    -> StackY(mu)
///   IdHilb(n), Ell(mu), E(mu) : Hilb(n) -> Hilb(n)
///   IdStack(mu)     : StackY(mu) -> StackY(mu)
///   SigmaMu(mu)     : Point -> StackY(mu)
///   LSigma(mu)      : Point -> Hilb(n)
///
/// E(mu) stands for the composite DeltaDagger(mu) then Delta(mu) over the
/// stack; its expansion in the Ell basis is only partially known.
struct Generator {
  GenKind kind = GenKind::IdHilb;
  Partition mu;
  int n = 0;

  static Generator delta(const Partition& mu) { return {GenKind::Delta, mu, mu.n()}; }
  static Generator delta_dagger(const Partition& mu) { return {GenKind::DeltaDagger, mu, mu.n()}; }
  static Generator id_hilb(int n) { return {GenKind::IdHilb, Partition(), n}; }
  static Generator id_stack(const Partition& mu) { return {GenKind::IdStack, mu, mu.n()}; }
  static Generator ell(const Partition& mu) { return {GenKind::Ell, mu, mu.n()}; }
  static Generator l_sigma(const Partition& mu) { return {GenKind::LSigma, mu, mu.n()}; }
  static Generator sigma_mu(const Partition& mu) { return {GenKind::SigmaMu, mu, mu.n()}; }
  static Generator e(const Partition& mu) { return {GenKind::E, mu, mu.n()}; }

  ObjectId domain() const;
  ObjectId codomain() const;
  bool is_identity() const { return kind == GenKind::IdHilb || kind == GenKind::IdStack; }
  /// Multiplicity of the lift to Y^mu relative to the primitive cycle; only
  /// meaningful for generators with a StackY codomain.
  std::int64_t lift_multiplicity() const;
  /// Adjoint generator, or nullopt when none is declared.
  std::optional<Generator> adjoint() const;

  std::string name() const;
  std::string to_string() const;

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using LinearCombination = std::map<Generator, GaussianRational>;

/// One composition rule: left then right equals `result`. When `via` is a
/// YPower object, the result is the product over the cover Y^mu and the
/// stack composite is result / z_mu.
struct Rule {
  Generator left;
  Generator right;
  ObjectId via;
  LinearCombination result;
  std::string source;
};

/// Linear relation used as a rewrite: target -> replacement.
struct Rewrite {
  Generator target;
  LinearCombination replacement;
  std::string source;
};

/// Immutable-after-construction table of composition rules and rewrites.
/// Identities act as two-sided units without table entries; every other
/// composition must be listed, and missing ones raise UnknownComposition.
class RelationTable {
 public:
  /// Base relations for all n <= n_max: orthogonality of Delta against
  /// DeltaDagger, the cover composite E(mu), SigmaMu then Delta, and the
  /// rewrite eliminating E(1^n). With `derived`, also the rules that follow
  /// from these by associativity (Delta then E, E then DeltaDagger, E then E,
  /// LSigma then DeltaDagger, LSigma then E).
  static RelationTable standard(int n_max, bool derived = false);

  void add_rule(Rule rule);
  void add_rewrite(Rewrite rewrite);

  const Rule* find(const Generator& left, const Generator& right) const;
  const std::map<std::pair<Generator, Generator>, Rule>& rules() const noexcept { return rules_; }
  const std::map<Generator, Rewrite>& rewrites() const noexcept { return rewrites_; }
  Rule* mutable_rule(const Generator& left, const Generator& right);

  /// left then right, as a combination over Q[i] (stack factor applied).
  LinearCombination compose(const Generator& left, const Generator& right) const;
  /// True iff compose(left, right) is defined.
  bool defines(const Generator& left, const Generator& right) const;
  /// Apply rewrites until no target remains.
  LinearCombination normalize(const LinearCombination& x) const;

 private:
  std::map<std::pair<Generator, Generator>, Rule> rules_;
  std::map<Generator, Rewrite> rewrites_;
};

namespace detail {

inline bool is_integral(const GaussianRational& c) { return c.is_gaussian_integer(); }
inline bool is_integral(const QLaurent& c) { return c.all_gaussian_integers(); }
inline bool is_integral(const HSeries& c) {
  for (const auto& [e, x] : c.coeffs()) {
    if (!x.is_gaussian_integer()) return false;
  }
  return true;
}

template <class Scalar>
bool divisible_by(const Scalar& c, std::int64_t lift, std::int64_t m) {
  return is_integral(c * GaussianRational(mpq_class(lift, m)));
}

}  // namespace detail

/// Finite linear combination of generators, all sharing the element's
/// domain and codomain (or a coproduct summand of them).
///
/// A strict element into StackY(mu) has every lift coefficient divisible by
/// prod_k mu_k; strictness is checked when set and propagated by star.
template <class Scalar>
class CorrElement {
 public:
  using Terms = std::map<Generator, Scalar>;

  CorrElement(ObjectId domain, ObjectId codomain) : domain_(std::move(domain)), codomain_(std::move(codomain)) {}

  static CorrElement single(const Generator& g, const Scalar& coeff) {
    CorrElement out(g.domain(), g.codomain());
    out.add(g, coeff);
    return out;
  }

  const ObjectId& domain() const noexcept { return domain_; }
  const ObjectId& codomain() const noexcept { return codomain_; }
  const Terms& terms() const noexcept { return terms_; }
  bool strict() const noexcept { return strict_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const Generator& g, const Scalar& coeff) {
    if (!domain_.contains(g.domain()) || !codomain_.contains(g.codomain())) {
      throw Error(ErrorCode::ObjectMismatch, g.to_string() + " is not a morphism " + domain_.to_string() + " -> " +
                                                 codomain_.to_string());
    }
    if (lagcorr::is_zero(coeff)) return;
    auto it = terms_.find(g);
    if (it == terms_.end()) {
      terms_.emplace(g, coeff);
      return;
    }
    it->second += coeff;
    if (lagcorr::is_zero(it->second)) terms_.erase(it);
  }

  /// Mark as strict; throws NotDivisible if a coefficient violates the
  /// divisibility requirement.
  void set_strict() {
    for (const auto& [g, c] : terms_) {
      if (g.codomain().kind != ObjectId::Kind::StackY) {
        throw Error(ErrorCode::NotDivisible, g.to_string() + " does not map into a stack");
      }
      if (!detail::divisible_by(c, g.lift_multiplicity(), g.codomain().mu.part_product())) {
        throw Error(ErrorCode::NotDivisible, "coefficient of " + g.to_string() + " not divisible by " +
                                                 std::to_string(g.codomain().mu.part_product()));
      }
    }
    strict_ = true;
  }

  friend bool operator==(const CorrElement& a, const CorrElement& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.terms_ == b.terms_;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [g, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + scalar_text(c) + ")*" + g.to_string();
    }
    return out;
  }

 private:
  static std::string scalar_text(const Scalar& c) { return c.to_string(); }

  ObjectId domain_;
  ObjectId codomain_;
  Terms terms_;
  bool strict_ = false;
};

using Corr = CorrElement<GaussianRational>;

/// f then g: the bilinear extension of the table. Terms passing through
/// different coproduct summands compose to zero.
template <class Scalar>
CorrElement<Scalar> star(const CorrElement<Scalar>& f, const CorrElement<Scalar>& g, const RelationTable& table) {
  if (!(f.codomain() == g.domain())) {
    throw Error(ErrorCode::ObjectMismatch, "codomain " + f.codomain().to_string() + " != domain " +
                                               g.domain().to_string());
  }
  CorrElement<Scalar> out(f.domain(), g.codomain());
  for (const auto& [a, ca] : f.terms()) {
    for (const auto& [b, cb] : g.terms()) {
      if (!(a.codomain() == b.domain())) continue;
      const LinearCombination composite = table.compose(a, b);
      if (composite.empty()) continue;
      const Scalar product = ca * cb;
      for (const auto& [gen, c] : composite) out.add(gen, product * c);
    }
  }
  if (g.strict() && !out.is_zero()) {
    bool integral = true;
    for (const auto& [a, ca] : f.terms()) integral = integral && detail::is_integral(ca);
    if (integral) out.set_strict();
  }
  return out;
}

/// Swap domain and codomain and replace each generator by its adjoint.
/// Coefficients are not conjugated. Throws NoAdjoint.
template <class Scalar>
CorrElement<Scalar> dagger(const CorrElement<Scalar>& f) {
  CorrElement<Scalar> out(f.codomain(), f.domain());
  for (const auto& [g, c] : f.terms()) {
    auto adj = g.adjoint();
    if (!adj) throw Error(ErrorCode::NoAdjoint, g.to_string() + " has no declared adjoint");
    out.add(*adj, c);
  }
  return out;
}

/// Rewrite every generator that is the target of a table rewrite.
template <class Scalar>
CorrElement<Scalar> normalize(const CorrElement<Scalar>& f, const RelationTable& table) {
  CorrElement<Scalar> out(f.domain(), f.codomain());
  for (const auto& [g, c] : f.terms()) {
    const LinearCombination replaced = table.normalize(LinearCombination{{g, GaussianRational(1)}});
    for (const auto& [h, k] : replaced) out.add(h, c * k);
  }
  return out;
}

/// Equality modulo the table's linear relations.
template <class Scalar>
bool equivalent(const CorrElement<Scalar>& a, const CorrElement<Scalar>& b, const RelationTable& table) {
  return normalize(a, table) == normalize(b, table);
}

/// L = sum_mu (prod_k i^{mu_k - 1}) Delta(mu), from the coproduct of stacks to Hilb(n).
Corr build_L(int n);
/// L^dagger = sum_mu (prod_k i^{mu_k - 1}) DeltaDagger(mu).
Corr build_L_dagger(int n);
/// sum_mu IdStack(mu) on the coproduct of stacks.
Corr block_identity(int n);
/// prod_k i^{mu_k - 1}
GaussianRational l_coefficient(const Partition& mu);

struct UnitarityReport {
  int n = 0;
  bool forward_ok = false;   ///< L then L^dagger = block identity
  bool backward_ok = false;  ///< L^dagger then L = IdHilb(n)
  std::vector<Partition> failing_blocks;
  std::size_t partitions_checked = 0;
  std::string forward_result;
  std::string backward_result;

  bool ok() const { return forward_ok && backward_ok; }
};

/// Compute both composites of L with its adjoint and compare them exactly
/// against the identities. Propagates UnknownComposition.
UnitarityReport verify_unitarity(int n, const RelationTable& table);

/// Expansion of the cover composite DeltaDagger(mu) then Delta(mu) over Y^mu:
/// |Aut mu| Ell(mu) + sum over strictly coarser mu' of unknown integers
/// c_{mu',mu} Ell(mu'). The stack composite E(mu) is this divided by z_mu.
struct EllDecomposition {
  Partition mu;
  std::int64_t leading = 0;
  std::vector<Partition> unknown_lower;
  GaussianRational stack_normalization;

  std::string to_string() const;
};

EllDecomposition decompose(const Generator& e);

}  // namespace lagcorr
