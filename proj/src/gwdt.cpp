#include "lagcorr/gwdt.hpp"

#include "lagcorr/error.hpp"

namespace lagcorr {

long phase_exponent(const ContactData& p) {
  long out = 0;
  for (const auto& [v, m] : p.support()) out += static_cast<long>(m) * (divisibility(v) - 1);
  return out;
}

GaussianRational phase(const ContactData& p) { return GaussianRational::i_pow(phase_exponent(p)); }

QLaurent quantum_integer_laurent(long n) {
  // (i^{-1} x)^n = i^{-n} x^n, divided by i.
  QLaurent out = QLaurent::monomial(GaussianRational::i_pow(-n - 1), n);
  out -= QLaurent::monomial(GaussianRational::i_pow(n - 1), -n);
  return out;
}

HSeries sine_series(long n, long order) {
  HSeries::Coeffs coeffs;
  // 2 sin(n h / 2) = sum_{k odd} 2 (-1)^{(k-1)/2} (n/2)^k / k! h^k
  mpq_class term(n);  // 2 * (n/2)^1 / 1!
  for (long k = 1; k <= order; k += 2) {
    if (k > 1) term *= -mpq_class(n * n, 4) / mpq_class((k - 1) * k);
    coeffs.emplace(k, GaussianRational(term));
  }
  return HSeries(std::move(coeffs), order);
}

QInteger q_integer(long n, long order) {
  if (n < 1) throw Error(ErrorCode::InvalidPartition, "[n]_q needs n >= 1");
  return {quantum_integer_laurent(n), sine_series(n, order)};
}

LabeledInvariant vertex_invariant(const IntVector& v1, const IntVector& v2) {
  const std::int64_t n = vertex_multiplicity(v1, v2);
  LabeledInvariant out;
  out.n = static_cast<long>(n);
  out.value = quantum_integer_laurent(out.n);
  out.label = "V";
  out.p = ContactData::indicator({v1, v2, -(v1 + v2)});
  return out;
}

WallInvariant wall_invariant(long n, long max_half_exponent) {
  if (n < 1) throw Error(ErrorCode::InvalidPartition, "wall invariant needs n >= 1");
  QLaurent terms;
  const GaussianRational lead = GaussianRational::i_pow(n + 1);
  for (long k = 0; n + 2 * k * n <= max_half_exponent; ++k) {
    const GaussianRational sign((k * n) % 2 == 0 ? 1 : -1);
    terms += QLaurent::monomial(lead * sign, n + 2 * k * n);
  }
  const GaussianRational numerator(n % 2 == 1 ? 1 : -1);
  WallInvariant out{QSeries{terms, max_half_exponent, false},
                    QRational(QLaurent(numerator), quantum_integer_laurent(n)),
                    "z3=0",
                    ContactData({{IntVector{n, 0}, 1}, {IntVector{-n, 0}, 1}})};
  return out;
}

MulticoverSeries multicover_series(long d, long order, long q_terms) {
  if (d < 1) throw Error(ErrorCode::InvalidPartition, "multicover needs d >= 1");
  MulticoverSeries out{d, HSeries(order), QRational(QLaurent(1)), QSeries{}, 1};
  // 1/s^2 loses 4 orders against s = d h + ..., so work three orders higher.
  const HSeries s = sine_series(d, order + 3);
  out.hbar = ((s * s).inverse() * GaussianRational(mpq_class(1, d))).truncated(order);
  const QLaurent qd = quantum_integer_laurent(d);
  out.closed_form = QRational(QLaurent(GaussianRational(mpq_class(1, d))), qd * qd);
  out.q_series = out.closed_form.expand(2 * d * q_terms);
  const GaussianRational lead = out.q_series.coefficient(2 * d);
  out.sign = lead.re() > 0 ? 1 : -1;
  return out;
}

IntegralityReport integrality_check(const QSeries& s, const ContactData& p, long max_deg) {
  IntegralityReport out;
  out.phase_exponent = phase_exponent(p);
  out.phase = phase(p);
  const QSeries adjusted = out.phase * s;
  out.gaussian_integral = adjusted.terms.all_gaussian_integers();
  if (adjusted.certified_finite) {
    out.reconstruction = QRational(adjusted.terms);
  } else {
    out.reconstruction = rational_reconstruct(adjusted, max_deg);
  }
  out.rational = out.reconstruction.has_value();
  if (!out.rational) return out;
  const QRational& f = *out.reconstruction;
  const GaussianRational sign(out.phase_exponent % 2 == 0 ? 1 : -1);
  out.symmetric = f.apply_symmetry(SymmetryMode::invert) == sign * f;
  const SymmetryMode literal = (1 + out.phase_exponent) % 2 == 0 ? SymmetryMode::invert : SymmetryMode::negate_invert;
  out.literal_symmetric = f.apply_symmetry(literal) == f;
  return out;
}

GwSide l_transform(const PtSide& z_pt, const PairingTable& pairing) {
  GwSide out;
  for (const auto& [beta, labels] : z_pt) {
    for (const auto& [pt_label, f] : labels) {
      bool found = false;
      for (const auto& entry : pairing) {
        if (entry.pt_label != pt_label) continue;
        found = true;
        const QLaurent image = f * (phase(entry.p) * entry.coeff);
        if (image.is_zero()) continue;
        auto& slot = out[GwKey{beta, entry.p}][entry.gw_label];
        slot += image;
      }
      if (!found) throw Error(ErrorCode::MissingPairing, "no pairing for PT label '" + pt_label + "'");
    }
  }
  // Drop entries that cancelled.
  for (auto it = out.begin(); it != out.end();) {
    std::erase_if(it->second, [](const auto& entry) { return entry.second.is_zero(); });
    it = it->second.empty() ? out.erase(it) : std::next(it);
  }
  return out;
}

std::map<GwKey, std::map<std::string, HSeries>> substitute_hbar(const GwSide& side, long order) {
  std::map<GwKey, std::map<std::string, HSeries>> out;
  for (const auto& [key, labels] : side) {
    for (const auto& [label, f] : labels) out[key].emplace(label, q_substitute_hbar(f, order));
  }
  return out;
}

SineGenerator SineGenerator::wall(IntVector v, std::string level, IntVector n_level) {
  if (v.dim() != 2 || n_level.dim() != 2) throw Error(ErrorCode::ObjectMismatch, "wall operators live in Z^2");
  return SineGenerator{false, std::move(v), std::move(level), std::move(n_level)};
}

std::string SineGenerator::to_string() const {
  if (central) return "C";
  return "W" + v.to_string() + "[" + level + "]";
}

std::int64_t wedge(const IntVector& a, const IntVector& b) {
  if (a.dim() != 2 || b.dim() != 2) throw Error(ErrorCode::ObjectMismatch, "wedge needs two vectors in Z^2");
  return a.coords()[0] * b.coords()[1] - a.coords()[1] * b.coords()[0];
}

void accumulate(SineCombination& into, const SineCombination& x, const QLaurent& scale) {
  for (const auto& [g, c] : x) {
    auto& slot = into[g];
    slot += c * scale;
    if (slot.is_zero()) into.erase(g);
  }
}

SineCombination sine_bracket(const SineGenerator& a, const SineGenerator& b) {
  SineCombination out;
  if (a.central || b.central) return out;
  if (a.level != b.level || a.n_level != b.n_level) {
    throw Error(ErrorCode::LevelMismatch, "levels " + a.level + " and " + b.level + " differ");
  }
  const std::int64_t k = wedge(a.v, b.v);
  const IntVector sum = a.v + b.v;
  if (k != 0) out.emplace(SineGenerator::wall(sum, a.level, a.n_level), quantum_integer_laurent(k));
  if (sum.is_zero()) {
    const std::int64_t c = wedge(a.n_level, a.v);
    if (c != 0) out.emplace(SineGenerator::central_element(), QLaurent(GaussianRational(c)));
  }
  return out;
}

SineCombination sine_bracket(const SineCombination& a, const SineCombination& b) {
  SineCombination out;
  for (const auto& [ga, ca] : a) {
    for (const auto& [gb, cb] : b) accumulate(out, sine_bracket(ga, gb), ca * cb);
  }
  return out;
}

std::string to_string(const SineCombination& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [g, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*" + g.to_string();
  }
  return out;
}

}  // namespace lagcorr
