#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace lf {

// FNV-1a 64-bit. Not cryptographic; used for content fingerprints in run
// manifests and reports, where the requirement is determinism.
class Fnv64 {
 public:
  void update(std::string_view bytes);
  void update(const void* data, std::size_t n);
  std::uint64_t value() const { return h_; }
  std::string hex() const;

 private:
  std::uint64_t h_ = 1469598103934665603ULL;
};

std::string digest_string(std::string_view bytes);
std::string digest_file(const std::string& path);  // throws InputError if unreadable

}  // namespace lf
