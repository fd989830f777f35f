#pragma once

#include <functional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace lf::jsonl {

using json = nlohmann::ordered_json;

// Reads every non-empty line of a JSONL file. Throws InputError when the
// file cannot be opened; line content errors are the callback's business.
void for_each_line(const std::string& path,
                   const std::function<void(std::size_t line_no,
                                            const std::string& line)>& fn);

std::vector<std::string> read_lines(const std::string& path);

// Collects the whole file as parsed records. Throws ParseError (with the
// 1-based line number in the message) on the first malformed line.
std::vector<json> read_records(const std::string& path);

// Writes lines to `path` atomically: a temp file in the same directory is
// renamed over the target once fully written.
class Writer {
 public:
  explicit Writer(std::string path);
  ~Writer();
  Writer(const Writer&) = delete;
  Writer& operator=(const Writer&) = delete;

  void write_line(const std::string& line);
  void write_record(const json& j);
  void close();  // flush + rename; called by destructor if needed

 private:
  std::string path_;
  std::string tmp_path_;
  FILE* f_ = nullptr;
  bool closed_ = false;
};

// Atomic whole-file write for reports and manifests.
void write_file_atomic(const std::string& path, const std::string& content);

std::string read_file(const std::string& path);  // throws InputError

}  // namespace lf::jsonl
