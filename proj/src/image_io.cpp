// OpenCV-backed codecs. OpenCV is confined to this translation unit; the
// rest of the library works on plain rasters.

#include <filesystem>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "listingforge/errors.hpp"
#include "listingforge/image.hpp"

namespace lf::img {

namespace {

ImageU8 from_mat(const cv::Mat& src) {
  if (src.empty()) throw InputError("undecodable image");
  if (src.depth() != CV_8U) throw InputError("unsupported image bit depth");
  const int in_ch = src.channels();
  if (in_ch != 1 && in_ch != 3 && in_ch != 4) {
    throw InputError("unsupported channel count");
  }
  ImageU8 out;
  out.width = src.cols;
  out.height = src.rows;
  out.channels = in_ch == 1 ? 1 : 3;
  out.pixels.resize(std::size_t(out.width) * out.height * out.channels);
  for (int y = 0; y < src.rows; ++y) {
    const std::uint8_t* row = src.ptr<std::uint8_t>(y);
    for (int x = 0; x < src.cols; ++x) {
      const std::uint8_t* px = row + std::size_t(x) * in_ch;
      if (out.channels == 1) {
        out.at(y, x, 0) = px[0];
      } else {
        // OpenCV stores BGR(A); the library raster is RGB, alpha dropped.
        out.at(y, x, 0) = px[2];
        out.at(y, x, 1) = px[1];
        out.at(y, x, 2) = px[0];
      }
    }
  }
  return out;
}

cv::Mat to_mat(const ImageU8& im) {
  if (im.empty()) throw InputError("cannot encode empty image");
  cv::Mat m(im.height, im.width, im.channels == 1 ? CV_8UC1 : CV_8UC3);
  for (int y = 0; y < im.height; ++y) {
    for (int x = 0; x < im.width; ++x) {
      if (im.channels == 1) {
        m.at<std::uint8_t>(y, x) = im.at(y, x, 0);
      } else {
        m.at<cv::Vec3b>(y, x) =
            cv::Vec3b(im.at(y, x, 2), im.at(y, x, 1), im.at(y, x, 0));
      }
    }
  }
  return m;
}

}  // namespace

ImageU8 decode(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) throw InputError("empty image payload");
  cv::Mat raw(1, int(bytes.size()), CV_8UC1,
              const_cast<std::uint8_t*>(bytes.data()));
  cv::Mat m = cv::imdecode(raw, cv::IMREAD_UNCHANGED);
  return from_mat(m);
}

ImageU8 load(const std::string& path) {
  if (!std::filesystem::exists(path)) {
    throw InputError("image file not found: " + path);
  }
  cv::Mat m = cv::imread(path, cv::IMREAD_UNCHANGED);
  if (m.empty()) throw InputError("undecodable image: " + path);
  return from_mat(m);
}

std::vector<std::uint8_t> encode_png(const ImageU8& im) {
  std::vector<std::uint8_t> buf;
  if (!cv::imencode(".png", to_mat(im), buf)) {
    throw InputError("png encode failed");
  }
  return buf;
}

void save_png(const ImageU8& im, const std::string& path) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  auto buf = encode_png(im);
  FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw InputError("cannot open for write: " + path);
  std::size_t n = std::fwrite(buf.data(), 1, buf.size(), f);
  std::fclose(f);
  if (n != buf.size()) throw InputError("short write: " + path);
}

}  // namespace lf::img
