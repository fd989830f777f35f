#include "listingforge/jsonl.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "listingforge/errors.hpp"

namespace lf::jsonl {

void for_each_line(const std::string& path,
                   const std::function<void(std::size_t,
                                            const std::string&)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open input file: " + path);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(line_no, line);
  }
}

std::vector<std::string> read_lines(const std::string& path) {
  std::vector<std::string> out;
  for_each_line(path, [&](std::size_t, const std::string& l) {
    out.push_back(l);
  });
  return out;
}

std::vector<json> read_records(const std::string& path) {
  std::vector<json> out;
  for_each_line(path, [&](std::size_t line_no, const std::string& l) {
    json j = json::parse(l, nullptr, false);
    if (j.is_discarded()) {
      throw ParseError(path + ":" + std::to_string(line_no) +
                       ": malformed JSON record");
    }
    out.push_back(std::move(j));
  });
  return out;
}

Writer::Writer(std::string path) : path_(std::move(path)) {
  std::filesystem::path p(path_);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  tmp_path_ = path_ + ".tmp";
  f_ = std::fopen(tmp_path_.c_str(), "wb");
  if (!f_) throw InputError("cannot open output file: " + tmp_path_);
}

Writer::~Writer() {
  if (!closed_) {
    try {
      close();
    } catch (...) {
      // destructor must not throw; the temp file is left behind
    }
  }
}

void Writer::write_line(const std::string& line) {
  if (std::fwrite(line.data(), 1, line.size(), f_) != line.size() ||
      std::fputc('\n', f_) == EOF) {
    throw InputError("write failed: " + tmp_path_);
  }
}

void Writer::write_record(const json& j) { write_line(j.dump()); }

void Writer::close() {
  if (closed_) return;
  closed_ = true;
  if (std::fclose(f_) != 0) throw InputError("close failed: " + tmp_path_);
  f_ = nullptr;
  std::error_code ec;
  std::filesystem::rename(tmp_path_, path_, ec);
  if (ec) throw InputError("rename failed: " + tmp_path_ + " -> " + path_);
}

void write_file_atomic(const std::string& path, const std::string& content) {
  std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw InputError("cannot open output file: " + tmp);
    out.write(content.data(), std::streamsize(content.size()));
    if (!out) throw InputError("write failed: " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("rename failed: " + tmp + " -> " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace lf::jsonl
