#include "listingforge/rng.hpp"

namespace lf {

std::uint64_t Rng::bounded(std::uint64_t n) {
  // Reject the tail of the 2^64 range that would bias small residues.
  std::uint64_t threshold = (0 - n) % n;
  for (;;) {
    std::uint64_t r = next();
    if (r >= threshold) return r % n;
  }
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& salt) {
  std::uint64_t h = splitmix64(base);
  for (unsigned char c : salt) h = splitmix64(h ^ c);
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, const std::string& salt,
                          std::uint64_t index) {
  return splitmix64(derive_seed(base, salt) ^ index);
}

std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                    std::size_t k, Rng& rng) {
  // Partial Fisher-Yates over an index array; fine at pipeline scales.
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i + std::size_t(rng.bounded(n - i));
    std::swap(idx[i], idx[j]);
  }
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  return idx;
}

}  // namespace lf
