#include "lagcorr/fockring.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "lagcorr/error.hpp"

namespace lagcorr {

bool operator<(const FockKey& a, const FockKey& b) {
  if (a.beta < b.beta) return true;
  if (b.beta < a.beta) return false;
  return std::tie(a.p, a.labels) < std::tie(b.p, b.labels);
}

std::string FockKey::to_string() const {
  std::string out = "t^" + beta.to_string() + " p=" + p.to_string() + " {";
  for (std::size_t k = 0; k < labels.size(); ++k) out += (k ? "," : "") + labels[k];
  return out + "}";
}

FockElement::FockElement(mpq_class energy_cutoff, long hbar_order)
    : cutoff_(std::move(energy_cutoff)), order_(hbar_order) {
  cutoff_.canonicalize();
}

FockElement FockElement::unit(const mpq_class& energy_cutoff, long hbar_order) {
  FockElement out(energy_cutoff, hbar_order);
  out.add(FockKey{}, HSeries(GaussianRational(1), out.term_order(CurveClass())));
  return out;
}

long FockElement::term_order(const CurveClass& beta) const {
  const mpq_class bound = order_ + 2 * (cutoff_ - beta.energy());
  mpz_class floor;
  mpz_fdiv_q(floor.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return floor.get_si();
}

void FockElement::add(const FockKey& key, const HSeries& coeff) {
  if (key.beta.energy() > cutoff_) return;
  if (key.beta.is_zero() && (!key.p.empty() || !key.labels.empty())) {
    throw Error(ErrorCode::InvalidCurveClass, "beta = 0 is reserved for the unit");
  }
  if (!std::is_sorted(key.labels.begin(), key.labels.end())) {
    FockKey sorted = key;
    std::sort(sorted.labels.begin(), sorted.labels.end());
    add(sorted, coeff);
    return;
  }
  HSeries c = coeff.truncated(term_order(key.beta));
  if (c.is_zero()) {
    // Still record the reduced precision if the key exists.
    auto it = terms_.find(key);
    if (it != terms_.end()) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
    return;
  }
  if (mpq_class(c.valuation()) < -2 * key.beta.energy()) {
    throw Error(ErrorCode::ValuationBound, "hbar^" + std::to_string(c.valuation()) + " below -2E at " +
                                               key.to_string());
  }
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, std::move(c));
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void FockElement::add(const CurveClass& beta, const ContactData& p, std::vector<std::string> labels,
                      const HSeries& coeff) {
  std::sort(labels.begin(), labels.end());
  add(FockKey{beta, p, std::move(labels)}, coeff);
}

HSeries FockElement::coefficient(const FockKey& key) const {
  auto it = terms_.find(key);
  if (it != terms_.end()) return it->second;
  return HSeries(term_order(key.beta));
}

void FockElement::check_compatible(const FockElement& o) const {
  if (cutoff_ != o.cutoff_ || order_ != o.order_) {
    throw Error(ErrorCode::CutoffMismatch, "cutoffs (" + cutoff_.get_str() + "," + std::to_string(order_) +
                                               ") and (" + o.cutoff_.get_str() + "," + std::to_string(o.order_) + ")");
  }
}

FockElement& FockElement::operator+=(const FockElement& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key, c);
  return *this;
}

FockElement& FockElement::operator-=(const FockElement& o) {
  check_compatible(o);
  for (const auto& [key, c] : o.terms_) add(key, -c);
  return *this;
}

FockElement FockElement::scaled(const GaussianRational& c) const {
  FockElement out(cutoff_, order_);
  if (c.is_zero()) return out;
  for (const auto& [key, x] : terms_) out.terms_.emplace(key, x * c);
  return out;
}

std::string FockElement::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [key, c] : terms_) out += key.to_string() + ": " + c.to_string() + "\n";
  return out;
}

namespace {

mpq_class binomial(int n, int k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return mpq_class(out);
}

}  // namespace

mpq_class symmetrization_factor(const ContactData& p, const ContactData& q) {
  mpq_class out = 1;
  for (const auto& [v, m] : p.support()) out *= binomial(m + q.multiplicity(v), m);
  return out;
}

mpq_class symmetrization_orbit_sum(const ContactData& p, const ContactData& q) {
  // Slots of r grouped by vector; slot k of vector v belongs to the first
  // factor iff k < p(v). Aut r permutes slots within each vector.
  const ContactData r = p + q;
  std::vector<std::vector<int>> perms;
  std::vector<int> first;
  for (const auto& [v, m] : r.support()) {
    std::vector<int> id(static_cast<std::size_t>(m));
    std::iota(id.begin(), id.end(), 0);
    perms.push_back(id);
    first.push_back(p.multiplicity(v));
  }
  std::map<std::vector<std::vector<bool>>, long> images;
  long total = 0;
  while (true) {
    std::vector<std::vector<bool>> image;
    for (std::size_t b = 0; b < perms.size(); ++b) {
      std::vector<bool> in_first(perms[b].size(), false);
      for (std::size_t k = 0; k < perms[b].size(); ++k) {
        if (static_cast<int>(k) < first[b]) in_first[static_cast<std::size_t>(perms[b][k])] = true;
      }
      image.push_back(in_first);
    }
    ++images[image];
    ++total;
    std::size_t b = 0;
    for (; b < perms.size(); ++b) {
      if (std::next_permutation(perms[b].begin(), perms[b].end())) break;
    }
    if (b == perms.size()) break;
  }
  // Each distinct image of the symmetric class appears |Aut p||Aut q| times.
  const mpq_class out = mpq_class(total) / mpq_class(aut_p_order(p) * aut_p_order(q));
  if (out != mpq_class(static_cast<long>(images.size()))) {
    throw Error(ErrorCode::Overflow, "orbit sum disagrees with the number of distinct images");
  }
  return out;
}

FockElement fock_mul(const FockElement& a, const FockElement& b) {
  if (a.energy_cutoff() != b.energy_cutoff() || a.hbar_order() != b.hbar_order()) {
    throw Error(ErrorCode::CutoffMismatch, "fock_mul operands have different truncations");
  }
  FockElement out(a.energy_cutoff(), a.hbar_order());
  for (const auto& [ka, ca] : a.terms()) {
    for (const auto& [kb, cb] : b.terms()) {
      if (ka.beta.energy() + kb.beta.energy() > a.energy_cutoff()) continue;
      FockKey key{ka.beta + kb.beta, ka.p + kb.p, {}};
      key.labels.reserve(ka.labels.size() + kb.labels.size());
      std::merge(ka.labels.begin(), ka.labels.end(), kb.labels.begin(), kb.labels.end(),
                 std::back_inserter(key.labels));
      const GaussianRational factor(symmetrization_factor(ka.p, kb.p));
      out.add(key, (ca * cb) * factor);
    }
  }
  return out;
}

FockElement fock_exp(const FockElement& eta) {
  for (const auto& [key, c] : eta.terms()) {
    if (key.beta.is_zero()) throw Error(ErrorCode::ConstantTermInExp, "exp of an element with a beta = 0 term");
  }
  FockElement result = FockElement::unit(eta.energy_cutoff(), eta.hbar_order());
  FockElement power = result;
  // Every term has energy >= 1, so eta^n vanishes once n exceeds the cutoff.
  for (long n = 1; mpq_class(n) <= eta.energy_cutoff(); ++n) {
    power = fock_mul(power, eta).scaled(GaussianRational(mpq_class(1, n)));
    if (power.is_zero()) break;
    result += power;
  }
  return result;
}

FockElement fock_log(const FockElement& z) {
  const FockElement one = FockElement::unit(z.energy_cutoff(), z.hbar_order());
  FockElement w = z - one;
  for (const auto& [key, c] : w.terms()) {
    if (key.beta.is_zero()) throw Error(ErrorCode::NonUnitalLog, "constant term is not 1: " + c.to_string());
  }
  if (z.terms().find(FockKey{}) == z.terms().end()) throw Error(ErrorCode::NonUnitalLog, "constant term is 0");
  FockElement result(z.energy_cutoff(), z.hbar_order());
  FockElement power = one;
  for (long n = 1; mpq_class(n) <= z.energy_cutoff(); ++n) {
    power = fock_mul(power, w);
    if (power.is_zero()) break;
    result += power.scaled(GaussianRational(mpq_class(n % 2 == 1 ? 1 : -1, n)));
  }
  return result;
}

FockElement assemble_eta(const std::vector<Contribution>& contributions, const mpq_class& energy_cutoff,
                         long hbar_order, ContactSum convention) {
  FockElement out(energy_cutoff, hbar_order);
  for (const auto& c : contributions) {
    if (!compatible(c.beta, c.p, convention)) {
      throw Error(ErrorCode::IncompatibleContact, "p=" + c.p.to_string() + " is not compatible with " +
                                                      c.beta.to_string());
    }
    if (c.beta.is_zero()) throw Error(ErrorCode::InvalidCurveClass, "connected contribution with beta = 0");
    const long exponent = 2L * c.genus - 2 + static_cast<long>(size(c.p));
    const GaussianRational coeff = c.coeff * GaussianRational(stack_factor(c.p));
    out.add(c.beta, c.p, {c.label}, HSeries::monomial(coeff, exponent, out.term_order(c.beta)));
  }
  return out;
}

}  // namespace lagcorr
