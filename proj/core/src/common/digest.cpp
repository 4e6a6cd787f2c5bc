#include "kpgen/common/digest.hpp"

#include <cstdio>
#include <fstream>

#include "kpgen/common/error.hpp"

namespace kpgen {

static constexpr uint64_t kFnvOffset = 0xcbf29ce484222325ULL;
static constexpr uint64_t kFnvPrime = 0x100000001b3ULL;

uint64_t fnv1a64_update(uint64_t state, std::string_view data) {
  for (unsigned char c : data) {
    state ^= c;
    state *= kFnvPrime;
  }
  return state;
}

uint64_t fnv1a64(std::string_view data) { return fnv1a64_update(kFnvOffset, data); }

std::string digest_hex(uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(digest));
  return std::string(buf);
}

uint64_t digest_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("digest_file: cannot open " + path);
  uint64_t state = kFnvOffset;
  char buf[1 << 16];
  while (in) {
    in.read(buf, sizeof(buf));
    state = fnv1a64_update(state, std::string_view(buf, static_cast<size_t>(in.gcount())));
  }
  return state;
}

}  // namespace kpgen
