#include "listingforge/digest.hpp"

#include <cstdio>
#include <vector>

#include "listingforge/errors.hpp"

namespace lf {

void Fnv64::update(std::string_view bytes) {
  update(bytes.data(), bytes.size());
}

void Fnv64::update(const void* data, std::size_t n) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < n; ++i) {
    h_ ^= p[i];
    h_ *= 1099511628211ULL;
  }
}

std::string Fnv64::hex() const {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", (unsigned long long)h_);
  return std::string(buf);
}

std::string digest_string(std::string_view bytes) {
  Fnv64 f;
  f.update(bytes);
  return f.hex();
}

std::string digest_file(const std::string& path) {
  FILE* f = std::fopen(path.c_str(), "rb");
  if (!f) throw InputError("cannot open file for digest: " + path);
  Fnv64 d;
  std::vector<char> buf(1 << 16);
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), f)) > 0) {
    d.update(buf.data(), n);
  }
  std::fclose(f);
  return d.hex();
}

}  // namespace lf
