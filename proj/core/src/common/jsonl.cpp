#include "kpgen/common/jsonl.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kpgen/common/error.hpp"

namespace kpgen {

void for_each_line(const std::string& path,
                   const std::function<void(size_t, std::string_view)>& fn) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    fn(lineno, line);
  }
}

AtomicFileWriter::AtomicFileWriter(std::string path)
    : path_(std::move(path)), tmp_path_(path_ + ".tmp") {
  auto parent = std::filesystem::path(path_).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  auto* out = new std::ofstream(tmp_path_, std::ios::binary | std::ios::trunc);
  if (!*out) {
    delete out;
    throw DataError("cannot open " + tmp_path_ + " for writing");
  }
  stream_ = out;
}

AtomicFileWriter::~AtomicFileWriter() {
  auto* out = static_cast<std::ofstream*>(stream_);
  if (!committed_) {
    out->close();
    std::error_code ec;
    std::filesystem::remove(tmp_path_, ec);
  }
  delete out;
}

void AtomicFileWriter::write(std::string_view data) {
  auto* out = static_cast<std::ofstream*>(stream_);
  out->write(data.data(), static_cast<std::streamsize>(data.size()));
}

void AtomicFileWriter::write_line(std::string_view line) {
  write(line);
  write("\n");
}

void AtomicFileWriter::commit() {
  auto* out = static_cast<std::ofstream*>(stream_);
  out->flush();
  if (!*out) throw DataError("write failed for " + tmp_path_);
  out->close();
  std::filesystem::rename(tmp_path_, path_);
  committed_ = true;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::string& path, std::string_view content) {
  AtomicFileWriter w(path);
  w.write(content);
  w.commit();
}

}  // namespace kpgen
