#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace lf::img {

// Interleaved 8-bit raster, 1 (gray) or 3 (RGB) channels, row-major.
struct ImageU8 {
  int width = 0;
  int height = 0;
  int channels = 0;
  std::vector<std::uint8_t> pixels;

  bool empty() const { return width <= 0 || height <= 0 || pixels.empty(); }
  std::uint8_t at(int y, int x, int c) const {
    return pixels[std::size_t(y) * width * channels +
                  std::size_t(x) * channels + c];
  }
  std::uint8_t& at(int y, int x, int c) {
    return pixels[std::size_t(y) * width * channels +
                  std::size_t(x) * channels + c];
  }
};

// Single-channel double-precision plane; the working type of the hash path.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  bool empty() const { return width <= 0 || height <= 0 || values.empty(); }
  double at(int y, int x) const {
    return values[std::size_t(y) * width + x];
  }
  double& at(int y, int x) { return values[std::size_t(y) * width + x]; }
};

std::vector<Plane> split_channels(const ImageU8& im);

// Exact fractional box filter: every output cell averages the source region
// it covers, with partial pixels weighted by covered area. Works for both
// down- and up-scaling.
Plane resize_area(const Plane& src, int out_w, int out_h);

// BT.601 luma from 1 or 3 channel planes of equal size.
Plane to_luma(std::span<const Plane> channels);

// Clamped sub-image copy; throws InputError when the clamped rect is empty.
ImageU8 crop(const ImageU8& im, int x0, int y0, int x1, int y1);

// Codecs (OpenCV-backed, see image_io.cpp). Decoded images come out as
// 1- or 3-channel RGB; encode_png is lossless so hashes survive a
// write/read round trip.
ImageU8 decode(std::span<const std::uint8_t> bytes);
ImageU8 load(const std::string& path);
std::vector<std::uint8_t> encode_png(const ImageU8& im);
void save_png(const ImageU8& im, const std::string& path);

// Deterministic synthetic rasters for tests and the bundled demo data.
ImageU8 synth_noise(int w, int h, std::uint64_t seed);
ImageU8 synth_gradient(int w, int h, bool horizontal);
// Product-photo-like composition: flat background plus a few colored
// rectangles placed by the seed.
ImageU8 synth_product(int w, int h, std::uint64_t seed);

}  // namespace lf::img
