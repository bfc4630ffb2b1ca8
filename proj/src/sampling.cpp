#include "lagcorr/sampling.hpp"

namespace lagcorr::sampling {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

GaussianRational scalar(Rng& rng) {
  const mpq_class re(uniform(rng, -4, 4), uniform(rng, 1, 3));
  const mpq_class im(uniform(rng, -4, 4), uniform(rng, 1, 3));
  GaussianRational x(re, im);
  return x.is_zero() ? GaussianRational(1) : x;
}

IntVector vector(Rng& rng, std::size_t dim, long bound) {
  std::vector<std::int64_t> coords(dim);
  for (auto& c : coords) c = uniform(rng, -bound, bound);
  return IntVector(std::move(coords));
}

IntVector nonzero_vector(Rng& rng, std::size_t dim, long bound) {
  while (true) {
    IntVector v = vector(rng, dim, bound);
    if (!v.is_zero()) return v;
  }
}

Contribution contribution(Rng& rng, long max_energy, int max_slots, bool nonempty_p) {
  Contribution c;
  const int slots = static_cast<int>(uniform(rng, nonempty_p ? 1 : 0, max_slots));
  ContactData::Support support;
  for (int k = 0; k < slots; ++k) support[nonzero_vector(rng, 2, 2)] += 1;
  c.p = ContactData(support);
  CurveClass::Intersections dots;
  for (const auto& [v, m] : c.p.support()) dots[v.primitive()] += m;
  c.beta = CurveClass(dots, mpq_class(uniform(rng, 1, max_energy)));
  c.genus = static_cast<int>(uniform(rng, 0, 2));
  static const char* const names[] = {"A", "B", "C"};
  c.label = names[uniform(rng, 0, 2)];
  c.coeff = scalar(rng);
  return c;
}

std::vector<Contribution> contributions(Rng& rng, long energy_cutoff, int max_terms, bool nonempty_p) {
  std::vector<Contribution> out;
  const int count = static_cast<int>(uniform(rng, 1, max_terms));
  for (int k = 0; k < count; ++k) out.push_back(contribution(rng, energy_cutoff, 3, nonempty_p));
  return out;
}

FockElement eta(Rng& rng, long energy_cutoff, long hbar_order, int max_terms, bool nonempty_p) {
  return assemble_eta(contributions(rng, energy_cutoff, max_terms, nonempty_p), mpq_class(energy_cutoff), hbar_order);
}

SineGenerator sine_generator(Rng& rng, long bound, const IntVector& n_level) {
  return SineGenerator::wall(vector(rng, 2, bound), "l", n_level);
}

}  // namespace lagcorr::sampling
