#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace lf {

// Deterministic RNG used everywhere randomness is specified as "seeded".
// mt19937_64 is fully specified by the standard; the bounded draw below is
// hand-rolled because std::uniform_int_distribution is implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Unbiased draw in [0, n) via rejection sampling. n must be > 0.
  std::uint64_t bounded(std::uint64_t n);

  // Uniform double in [0, 1) with 53-bit resolution.
  double uniform01() { return double(next() >> 11) * 0x1.0p-53; }

  bool coin() { return (next() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

std::uint64_t splitmix64(std::uint64_t x);

// Stable seed derivation for per-record generators: mixes the parts so that
// parallel rendering order cannot affect the stream a record sees.
std::uint64_t derive_seed(std::uint64_t base, const std::string& salt);
std::uint64_t derive_seed(std::uint64_t base, const std::string& salt,
                          std::uint64_t index);

// In-place Fisher-Yates shuffle.
template <typename T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = std::size_t(rng.bounded(i));
    std::swap(v[i - 1], v[j]);
  }
}

// k distinct indices from [0, n), ascending. k must be <= n.
std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                    std::size_t k, Rng& rng);

}  // namespace lf
