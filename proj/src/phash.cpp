#include "listingforge/phash.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>

#include "listingforge/errors.hpp"
#include "listingforge/parallel.hpp"

namespace lf::phash {

namespace {

constexpr int kSize = 32;  // resize target
constexpr int kBlock = 8;  // low-frequency block

// Orthonormal DCT-II basis: C[u][x] = a(u) cos((2x+1) u pi / (2N)),
// a(0) = sqrt(1/N), a(u>0) = sqrt(2/N).
const std::array<std::array<double, kSize>, kSize>& dct_matrix() {
  static const auto m = [] {
    std::array<std::array<double, kSize>, kSize> c{};
    const double pi = std::acos(-1.0);
    for (int u = 0; u < kSize; ++u) {
      const double a =
          u == 0 ? std::sqrt(1.0 / kSize) : std::sqrt(2.0 / kSize);
      for (int x = 0; x < kSize; ++x) {
        c[u][x] = a * std::cos((2 * x + 1) * u * pi / (2.0 * kSize));
      }
    }
    return c;
  }();
  return m;
}

PerceptualHash from_small_luma(const img::Plane& luma) {
  // Offset by the first sample: only the DC term (discarded below) depends
  // on a constant shift, and flat inputs become exact zeros.
  std::array<double, kSize * kSize> f{};
  const double offset = luma.values[0];
  for (int i = 0; i < kSize * kSize; ++i) f[i] = luma.values[i] - offset;

  const auto& c = dct_matrix();
  // Separable transform, restricted to the kBlock x kBlock low band:
  // tmp[u][x] = sum_y C[u][y] f[y][x]; F[u][v] = sum_x tmp[u][x] C[v][x].
  std::array<std::array<double, kSize>, kBlock> tmp{};
  for (int u = 0; u < kBlock; ++u) {
    for (int x = 0; x < kSize; ++x) {
      double acc = 0.0;
      for (int y = 0; y < kSize; ++y) acc += c[u][y] * f[y * kSize + x];
      tmp[u][x] = acc;
    }
  }
  std::array<double, kBlock * kBlock> coeff{};
  for (int u = 0; u < kBlock; ++u) {
    for (int v = 0; v < kBlock; ++v) {
      double acc = 0.0;
      for (int x = 0; x < kSize; ++x) acc += tmp[u][x] * c[v][x];
      coeff[u * kBlock + v] = acc;
    }
  }

  // 63 AC coefficients in row-major order; median is the 32nd smallest.
  std::array<double, 63> ac{};
  std::copy(coeff.begin() + 1, coeff.end(), ac.begin());
  std::array<double, 63> sorted = ac;
  std::nth_element(sorted.begin(), sorted.begin() + 31, sorted.end());
  const double median = sorted[31];

  PerceptualHash h;
  for (int i = 0; i < 63; ++i) {
    if (ac[i] > median) h.bits |= (std::uint64_t(1) << i);
  }
  return h;  // bit 63 stays 0
}

}  // namespace

PerceptualHash compute_channels(std::span<const img::Plane> channels) {
  if (channels.empty()) throw InputError("no channels to hash");
  for (const auto& p : channels) {
    if (p.empty()) throw InputError("empty channel");
  }
  std::vector<img::Plane> small;
  small.reserve(channels.size());
  for (const auto& p : channels) small.push_back(img::resize_area(p, kSize, kSize));
  img::Plane luma = img::to_luma(small);
  return from_small_luma(luma);
}

PerceptualHash compute(const img::ImageU8& im) {
  if (im.empty()) throw InputError("cannot hash empty image");
  auto channels = img::split_channels(im);
  return compute_channels(channels);
}

int hamming(PerceptualHash a, PerceptualHash b) {
  return std::popcount(a.bits ^ b.bits);
}

std::vector<std::size_t> dedup_keep_indices(
    std::span<const PerceptualHash> hashes, int threshold) {
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < hashes.size(); ++i) {
    if (i == 0) {
      kept.push_back(i);  // primary always survives
      continue;
    }
    bool distinct = true;
    for (std::size_t k : kept) {
      if (hamming(hashes[i], hashes[k]) <= threshold) {
        distinct = false;
        break;
      }
    }
    if (distinct) kept.push_back(i);
  }
  return kept;
}

std::vector<RefHash> dedup(std::span<const RefHash> entries, int threshold) {
  std::vector<PerceptualHash> hashes;
  hashes.reserve(entries.size());
  for (const auto& e : entries) hashes.push_back(e.second);
  std::vector<RefHash> out;
  for (std::size_t i : dedup_keep_indices(hashes, threshold)) {
    out.push_back(entries[i]);
  }
  return out;
}

std::vector<PerceptualHash> hash_batch_serial(
    std::span<const img::ImageU8> images) {
  std::vector<PerceptualHash> out(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) out[i] = compute(images[i]);
  return out;
}

std::vector<PerceptualHash> hash_batch(std::span<const img::ImageU8> images,
                                       int threads) {
  std::vector<PerceptualHash> out(images.size());
  parallel_for(images.size(), effective_threads(threads),
               [&](std::size_t i) { out[i] = compute(images[i]); });
  return out;
}

}  // namespace lf::phash
