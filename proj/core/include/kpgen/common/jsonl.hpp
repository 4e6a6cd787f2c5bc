#pragma once

#include <functional>
#include <string>
#include <string_view>

namespace kpgen {

// Streams a newline-delimited file, invoking fn for every non-empty line.
// Line numbers are 1-based.
void for_each_line(const std::string& path,
                   const std::function<void(size_t, std::string_view)>& fn);

// Writes a file through a temporary sibling and renames on commit, so that
// readers never observe a half-written artifact. Destruction without
// commit() discards the temporary.
class AtomicFileWriter {
 public:
  explicit AtomicFileWriter(std::string path);
  ~AtomicFileWriter();

  AtomicFileWriter(const AtomicFileWriter&) = delete;
  AtomicFileWriter& operator=(const AtomicFileWriter&) = delete;

  void write(std::string_view data);
  void write_line(std::string_view line);
  void commit();

 private:
  std::string path_;
  std::string tmp_path_;
  void* stream_;  // std::ofstream, kept out of the header
  bool committed_ = false;
};

// Reads an entire file into a string. Throws DataError on failure.
std::string read_file(const std::string& path);

void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace kpgen
