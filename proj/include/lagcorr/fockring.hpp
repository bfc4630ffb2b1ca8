#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "lagcorr/gaussian_rational.hpp"
#include "lagcorr/hseries.hpp"
#include "lagcorr/tropical.hpp"

namespace lagcorr {

/// Grading key of a Fock-ring term. `labels` is the sorted multiset of
/// opaque lagrangian-cycle names; distinct names never merge.
struct FockKey {
  CurveClass beta;
  ContactData p;
  std::vector<std::string> labels;

  friend bool operator==(const FockKey& a, const FockKey& b) {
    return a.beta == b.beta && a.p == b.p && a.labels == b.labels;
  }
  friend bool operator<(const FockKey& a, const FockKey& b);
  std::string to_string() const;
};

/// Truncated element of the Fock ring.
///
/// Truncation is by energy and by hbar-order. A term of energy E is kept
/// exactly through hbar^floor(N + 2(cutoff - E)); since every term obeys
/// hbar-exponent >= -2E, products of known terms are then known exactly to
/// the same bound, and each term of energy <= cutoff is known at least
/// through hbar^N.
class FockElement {
 public:
  using Terms = std::map<FockKey, HSeries>;

  FockElement(mpq_class energy_cutoff, long hbar_order);
  static FockElement unit(const mpq_class& energy_cutoff, long hbar_order);

  const mpq_class& energy_cutoff() const noexcept { return cutoff_; }
  long hbar_order() const noexcept { return order_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  /// hbar-order through which a term of class beta is tracked.
  long term_order(const CurveClass& beta) const;

  /// Add a term. Classes above the cutoff are dropped; beta = 0 is only
  /// allowed for the unit key. Throws ValuationBound, InvalidCurveClass.
  void add(const FockKey& key, const HSeries& coeff);
  void add(const CurveClass& beta, const ContactData& p, std::vector<std::string> labels, const HSeries& coeff);

  HSeries coefficient(const FockKey& key) const;

  FockElement& operator+=(const FockElement& o);
  FockElement& operator-=(const FockElement& o);
  friend FockElement operator+(FockElement a, const FockElement& b) { return a += b; }
  friend FockElement operator-(FockElement a, const FockElement& b) { return a -= b; }
  FockElement scaled(const GaussianRational& c) const;

  friend bool operator==(const FockElement& a, const FockElement& b) {
    return a.cutoff_ == b.cutoff_ && a.order_ == b.order_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  void check_compatible(const FockElement& o) const;

  mpq_class cutoff_;
  long order_;
  Terms terms_;
};

/// prod_v C(p(v)+q(v), p(v))
mpq_class symmetrization_factor(const ContactData& p, const ContactData& q);
/// The same factor by summing over Aut(p+q) literally and dividing by
/// |Aut p||Aut q|. Exponential in |p+q|; for cross-checks only.
mpq_class symmetrization_orbit_sum(const ContactData& p, const ContactData& q);

/// Product with symmetrization factors. Throws CutoffMismatch.
FockElement fock_mul(const FockElement& a, const FockElement& b);
/// sum_n eta^n / n!. Throws ConstantTermInExp if eta has a beta = 0 term.
FockElement fock_exp(const FockElement& eta);
/// sum_n (-1)^{n+1} (Z - 1)^n / n. Throws NonUnitalLog unless the beta = 0
/// part of Z is exactly 1.
FockElement fock_log(const FockElement& z);

/// One connected contribution eta_{g,beta} on the cycle `label`.
struct Contribution {
  int genus = 0;
  CurveClass beta;
  ContactData p;
  std::string label;
  GaussianRational coeff;
};

/// sum of stack_factor(p) * coeff * hbar^{2g-2+|p|} t^beta.
/// Throws IncompatibleContact.
FockElement assemble_eta(const std::vector<Contribution>& contributions, const mpq_class& energy_cutoff,
                         long hbar_order, ContactSum convention = ContactSum::verbatim);

}  // namespace lagcorr
