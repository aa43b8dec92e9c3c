#include "pinch/random_tensors.hpp"

#include <stdexcept>

namespace pinch {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t index) {
  return splitmix(splitmix(splitmix(master) ^ stream) ^ index);
}

long uniform_int(TrialRng& rng, long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

Rational random_entry(TrialRng& rng) {
  long p = uniform_int(rng, -20, 20);
  long q = uniform_int(rng, 1, 10);
  return Rational(BigInt(p), BigInt(q));
}

Rational random_nonzero_entry(TrialRng& rng) {
  for (;;) {
    Rational r = random_entry(rng);
    if (!r.is_zero()) return r;
  }
}

EigenSpectrum random_spectrum(TrialRng& rng, std::size_t n) {
  EigenSpectrum s;
  s.mu.reserve(n);
  for (std::size_t i = 0; i < n; ++i) s.mu.push_back(random_entry(rng));
  return s;
}

Grad3 random_grad3(TrialRng& rng, std::size_t n) {
  Grad3 raw(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) raw.at(i, j, k) = random_entry(rng);
  return Grad3::symmetrized(raw);
}

Hess4 random_hess4(TrialRng& rng, std::size_t n) {
  Hess4 raw(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) raw.at(i, j, k, l) = random_entry(rng);
  return Hess4::symmetrized(raw);
}

}  // namespace pinch
