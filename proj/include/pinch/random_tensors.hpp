#pragma once

// Reproducible random exact data for the property suites. Entries are
// p/q with |p| <= 20 and 1 <= q <= 10; the mapping from generator output to
// (p, q) is fixed here so streams do not depend on the standard library's
// distribution implementations.

#include <cstdint>
#include <random>

#include "pinch/spectral.hpp"

namespace pinch {

using TrialRng = std::mt19937_64;

/// splitmix64 finalizer over (master, stream, index).
std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index);

/// Uniform integer in [lo, hi].
long uniform_int(TrialRng& rng, long lo, long hi);

Rational random_entry(TrialRng& rng);
/// Nonzero entry.
Rational random_nonzero_entry(TrialRng& rng);
EigenSpectrum random_spectrum(TrialRng& rng, std::size_t n);
/// Fully symmetric, S3-averaged.
Grad3 random_grad3(TrialRng& rng, std::size_t n);
/// Symmetric in the first three indices.
Hess4 random_hess4(TrialRng& rng, std::size_t n);

}  // namespace pinch
