#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "listingforge/image.hpp"

namespace lf::phash {

// 64-bit DCT perceptual hash. Bit i (i in [0,63)) corresponds to the i-th
// AC coefficient of the top-left 8x8 block in row-major order; bit 63 is a
// fixed zero pad.
struct PerceptualHash {
  std::uint64_t bits = 0;
  friend bool operator==(const PerceptualHash&, const PerceptualHash&) =
      default;
};

// Hash pipeline, pinned:
//   1. area-average resize of each channel to 32x32
//   2. BT.601 luma
//   3. mean-centering (shifts only the discarded DC term, and makes flat
//      images hash to exactly zero)
//   4. orthonormal 2-D DCT-II
//   5. bit i set iff AC coefficient i > median of the 63 AC coefficients
PerceptualHash compute(const img::ImageU8& im);

// Same pipeline entered with full-resolution double-precision channels
// (1 or 3). Lets callers apply photometric transforms without quantizing.
PerceptualHash compute_channels(std::span<const img::Plane> channels);

int hamming(PerceptualHash a, PerceptualHash b);

// Greedy scan: entry kept iff its distance to every kept entry is strictly
// greater than `threshold`. The first entry (the primary image) is always
// kept; relative order is preserved.
std::vector<std::size_t> dedup_keep_indices(
    std::span<const PerceptualHash> hashes, int threshold);

using RefHash = std::pair<std::string, PerceptualHash>;
std::vector<RefHash> dedup(std::span<const RefHash> entries, int threshold);

// Batch hashing. The serial variant is the reference implementation the
// tests compare against; the parallel variant fans out across an OpenMP
// team.
std::vector<PerceptualHash> hash_batch_serial(
    std::span<const img::ImageU8> images);
std::vector<PerceptualHash> hash_batch(std::span<const img::ImageU8> images,
                                       int threads);

}  // namespace lf::phash
