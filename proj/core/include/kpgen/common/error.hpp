#pragma once

#include <stdexcept>
#include <string>

namespace kpgen {

// Base class for all errors raised by the toolkit.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Bad user-supplied configuration (rates out of range, fractions not
// summing to one, ...).
class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error(what) {}
};

// Malformed on-disk data (JSONL records, plan files, checkpoints).
class DataError : public Error {
 public:
  explicit DataError(const std::string& what) : Error(what) {}
};

}  // namespace kpgen
