#include "listingforge/image.hpp"

#include <algorithm>
#include <cmath>

#include "listingforge/errors.hpp"
#include "listingforge/rng.hpp"

namespace lf::img {

std::vector<Plane> split_channels(const ImageU8& im) {
  if (im.empty()) throw InputError("cannot split empty image");
  std::vector<Plane> out(std::size_t(im.channels));
  for (int c = 0; c < im.channels; ++c) {
    Plane& p = out[std::size_t(c)];
    p.width = im.width;
    p.height = im.height;
    p.values.resize(std::size_t(im.width) * im.height);
    for (int y = 0; y < im.height; ++y)
      for (int x = 0; x < im.width; ++x)
        p.at(y, x) = double(im.at(y, x, c));
  }
  return out;
}

Plane resize_area(const Plane& src, int out_w, int out_h) {
  if (src.empty()) throw InputError("cannot resize empty plane");
  if (out_w < 1 || out_h < 1) throw InputError("bad resize target");
  Plane dst;
  dst.width = out_w;
  dst.height = out_h;
  dst.values.resize(std::size_t(out_w) * out_h);

  const double sx = double(src.width) / out_w;
  const double sy = double(src.height) / out_h;
  for (int oy = 0; oy < out_h; ++oy) {
    const double y0 = oy * sy, y1 = (oy + 1) * sy;
    const int iy0 = int(std::floor(y0));
    const int iy1 = std::min(src.height, int(std::ceil(y1)));
    for (int ox = 0; ox < out_w; ++ox) {
      const double x0 = ox * sx, x1 = (ox + 1) * sx;
      const int ix0 = int(std::floor(x0));
      const int ix1 = std::min(src.width, int(std::ceil(x1)));
      double acc = 0.0;
      for (int iy = iy0; iy < iy1; ++iy) {
        const double wy = std::min(y1, double(iy + 1)) - std::max(y0, double(iy));
        for (int ix = ix0; ix < ix1; ++ix) {
          const double wx =
              std::min(x1, double(ix + 1)) - std::max(x0, double(ix));
          acc += src.at(iy, ix) * (wx * wy);
        }
      }
      dst.at(oy, ox) = acc / (sx * sy);
    }
  }
  return dst;
}

Plane to_luma(std::span<const Plane> channels) {
  if (channels.empty()) throw InputError("no channels");
  if (channels.size() == 1) return channels[0];
  if (channels.size() != 3) throw InputError("expected 1 or 3 channels");
  const Plane& r = channels[0];
  const Plane& g = channels[1];
  const Plane& b = channels[2];
  Plane out;
  out.width = r.width;
  out.height = r.height;
  out.values.resize(r.values.size());
  for (std::size_t i = 0; i < out.values.size(); ++i) {
    out.values[i] =
        0.299 * r.values[i] + 0.587 * g.values[i] + 0.114 * b.values[i];
  }
  return out;
}

ImageU8 crop(const ImageU8& im, int x0, int y0, int x1, int y1) {
  if (im.empty()) throw InputError("cannot crop empty image");
  x0 = std::clamp(x0, 0, im.width);
  x1 = std::clamp(x1, 0, im.width);
  y0 = std::clamp(y0, 0, im.height);
  y1 = std::clamp(y1, 0, im.height);
  if (x1 <= x0 || y1 <= y0) throw InputError("empty crop rect");
  ImageU8 out;
  out.width = x1 - x0;
  out.height = y1 - y0;
  out.channels = im.channels;
  out.pixels.resize(std::size_t(out.width) * out.height * out.channels);
  for (int y = y0; y < y1; ++y) {
    const std::uint8_t* srow =
        im.pixels.data() +
        (std::size_t(y) * im.width + x0) * std::size_t(im.channels);
    std::uint8_t* drow =
        out.pixels.data() +
        std::size_t(y - y0) * out.width * std::size_t(out.channels);
    std::copy(srow, srow + std::size_t(out.width) * out.channels, drow);
  }
  return out;
}

ImageU8 synth_noise(int w, int h, std::uint64_t seed) {
  ImageU8 im;
  im.width = w;
  im.height = h;
  im.channels = 3;
  im.pixels.resize(std::size_t(w) * h * 3);
  Rng rng(seed);
  for (auto& p : im.pixels) p = std::uint8_t(rng.bounded(256));
  return im;
}

ImageU8 synth_gradient(int w, int h, bool horizontal) {
  ImageU8 im;
  im.width = w;
  im.height = h;
  im.channels = 3;
  im.pixels.resize(std::size_t(w) * h * 3);
  for (int y = 0; y < h; ++y)
    for (int x = 0; x < w; ++x) {
      int v = horizontal ? (255 * x / std::max(1, w - 1))
                         : (255 * y / std::max(1, h - 1));
      im.at(y, x, 0) = std::uint8_t(v);
      im.at(y, x, 1) = std::uint8_t(255 - v);
      im.at(y, x, 2) = std::uint8_t(v / 2);
    }
  return im;
}

ImageU8 synth_product(int w, int h, std::uint64_t seed) {
  Rng rng(seed);
  ImageU8 im;
  im.width = w;
  im.height = h;
  im.channels = 3;
  std::uint8_t bg = std::uint8_t(200 + rng.bounded(40));
  im.pixels.assign(std::size_t(w) * h * 3, bg);
  int n_rects = 2 + int(rng.bounded(4));
  for (int k = 0; k < n_rects; ++k) {
    int rw = std::max(2, int(rng.bounded(std::uint64_t(w / 2)) + 2));
    int rh = std::max(2, int(rng.bounded(std::uint64_t(h / 2)) + 2));
    int rx = int(rng.bounded(std::uint64_t(std::max(1, w - rw))));
    int ry = int(rng.bounded(std::uint64_t(std::max(1, h - rh))));
    std::uint8_t col[3] = {std::uint8_t(rng.bounded(256)),
                           std::uint8_t(rng.bounded(256)),
                           std::uint8_t(rng.bounded(256))};
    for (int y = ry; y < std::min(h, ry + rh); ++y)
      for (int x = rx; x < std::min(w, rx + rw); ++x)
        for (int c = 0; c < 3; ++c) im.at(y, x, c) = col[c];
  }
  return im;
}

}  // namespace lf::img
