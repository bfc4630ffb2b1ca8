#pragma once

#include <random>
#include <string>
#include <vector>

#include "lagcorr/fockring.hpp"
#include "lagcorr/gwdt.hpp"

// Seeded random inputs for property checks.
namespace lagcorr::sampling {

using Rng = std::mt19937_64;

long uniform(Rng& rng, long lo, long hi);

/// a/b + c/d i with small numerators and denominators.
GaussianRational scalar(Rng& rng);
/// Vector in [-bound, bound]^dim, possibly zero.
IntVector vector(Rng& rng, std::size_t dim, long bound);
/// Nonzero vector in [-bound, bound]^dim.
IntVector nonzero_vector(Rng& rng, std::size_t dim, long bound);

/// Random connected contribution with |p| <= max_slots, energy in
/// [1, max_energy], and beta compatible with p.
Contribution contribution(Rng& rng, long max_energy, int max_slots, bool nonempty_p);

/// Random eta with at most max_terms connected terms.
FockElement eta(Rng& rng, long energy_cutoff, long hbar_order, int max_terms, bool nonempty_p = false);
std::vector<Contribution> contributions(Rng& rng, long energy_cutoff, int max_terms, bool nonempty_p);

/// Wall operator on a fixed level with |entries| <= bound.
SineGenerator sine_generator(Rng& rng, long bound, const IntVector& n_level);

}  // namespace lagcorr::sampling
