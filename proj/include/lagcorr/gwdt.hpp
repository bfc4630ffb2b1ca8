#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lagcorr/gaussian_rational.hpp"
#include "lagcorr/hseries.hpp"
#include "lagcorr/qlaurent.hpp"
#include "lagcorr/qrational.hpp"
#include "lagcorr/tropical.hpp"

namespace lagcorr {

/// sum_v p(v)(|v| - 1)
long phase_exponent(const ContactData& p);
/// prod_v i^{p(v)(|v|-1)}
GaussianRational phase(const ContactData& p);

/// ((i^{-1} q^{1/2})^n - (i^{-1} q^{1/2})^{-n}) / i for any integer n.
QLaurent quantum_integer_laurent(long n);
/// Taylor series of 2 sin(n hbar / 2) through hbar^order.
HSeries sine_series(long n, long order);

struct QInteger {
  QLaurent laurent;
  HSeries hbar;
};

/// Both forms of [n]_q; n >= 1.
QInteger q_integer(long n, long order = 20);

/// An invariant attached to one lagrangian label and contact data.
struct LabeledInvariant {
  QLaurent value;
  std::string label;
  ContactData p;
  long n = 0;
};

/// [n]_q V with n = |v1 ^ v2| and p the indicator of {v1, v2, -v1-v2}.
/// Throws DegeneratePair.
LabeledInvariant vertex_invariant(const IntVector& v1, const IntVector& v2);

struct WallInvariant {
  QSeries series;  ///< known through q^{max_half_exponent / 2}
  QRational closed_form;
  std::string label;
  ContactData p;
};

/// (-1)^{n+1} / [n]_q = i^{n+1} q^{n/2} sum_k (-q)^{kn}, label "z3=0",
/// p = {(n,0):1, (-n,0):1}.
WallInvariant wall_invariant(long n, long max_half_exponent);

struct MulticoverSeries {
  long d = 1;
  HSeries hbar;  ///< 1/(d (2 sin(d hbar/2))^2) through hbar^order
  QRational closed_form;
  QSeries q_series;
  /// The q-expansion is sign * (1/d)(q^d + 2 q^{2d} + 3 q^{3d} + ...) with
  /// alternating signs for even d; sign is the sign of the q^d coefficient.
  int sign = 1;
};

/// 1/(d [d]_q^2); q_terms counts nonzero terms of the q-series.
MulticoverSeries multicover_series(long d, long order, long q_terms);

struct IntegralityReport {
  long phase_exponent = 0;
  GaussianRational phase;
  bool rational = false;
  /// f(q^{-1/2}) = (-1)^s f(q^{1/2}) for the phase-adjusted function, with
  /// s the phase exponent.
  bool symmetric = false;
  /// Invariance under q^{1/2} -> (-1)^{1+s} q^{-1/2} read literally.
  bool literal_symmetric = false;
  bool gaussian_integral = false;
  std::optional<QRational> reconstruction;
};

/// Phase-adjust s, reconstruct a rational function of degree <= max_deg,
/// and test symmetry and integrality. Throws InsufficientTerms.
IntegralityReport integrality_check(const QSeries& s, const ContactData& p, long max_deg);

/// Coefficient bookkeeping for the star product with Delta_p.
struct PairingEntry {
  ContactData p;
  std::string pt_label;
  std::string gw_label;
  GaussianRational coeff;
};

using PairingTable = std::vector<PairingEntry>;
using PtSide = std::map<CurveClass, std::map<std::string, QLaurent>>;

struct GwKey {
  CurveClass beta;
  ContactData p;

  friend bool operator<(const GwKey& a, const GwKey& b) {
    if (a.beta < b.beta) return true;
    if (b.beta < a.beta) return false;
    return a.p < b.p;
  }
  friend bool operator==(const GwKey& a, const GwKey& b) { return a.beta == b.beta && a.p == b.p; }
};

using GwSide = std::map<GwKey, std::map<std::string, QLaurent>>;

/// Per (beta, p): phase(p) times the pairing image of Z_pt(beta).
/// Throws MissingPairing if a PT label has no entry.
GwSide l_transform(const PtSide& z_pt, const PairingTable& pairing);
/// Substitute q^{1/2} = i e^{i hbar/2} in every coefficient.
std::map<GwKey, std::map<std::string, HSeries>> substitute_hbar(const GwSide& side, long order);

/// Wall operator W_{v, level} or the central element.
struct SineGenerator {
  bool central = false;
  IntVector v;
  std::string level;
  IntVector n_level;

  static SineGenerator wall(IntVector v, std::string level, IntVector n_level);
  static SineGenerator central_element() { return SineGenerator{true, {}, {}, {}}; }

  std::string to_string() const;

  friend bool operator==(const SineGenerator&, const SineGenerator&) = default;
  friend auto operator<=>(const SineGenerator&, const SineGenerator&) = default;
};

using SineCombination = std::map<SineGenerator, QLaurent>;

/// 2x2 determinant.
std::int64_t wedge(const IntVector& a, const IntVector& b);

/// [W_a, W_b] = [a ^ b]_q W_{a+b} + (n ^ a) delta_{a+b,0} C; the central
/// element C brackets to zero. Throws LevelMismatch.
SineCombination sine_bracket(const SineGenerator& a, const SineGenerator& b);
/// Bilinear extension.
SineCombination sine_bracket(const SineCombination& a, const SineCombination& b);

void accumulate(SineCombination& into, const SineCombination& x, const QLaurent& scale = QLaurent(1));
std::string to_string(const SineCombination& x);

}  // namespace lagcorr
