#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace kpgen {

// FNV-1a 64-bit digest. Used for regression fingerprints of config blocks
// and artifact files, not for anything adversarial.
uint64_t fnv1a64(std::string_view data);
uint64_t fnv1a64_update(uint64_t state, std::string_view data);

std::string digest_hex(uint64_t digest);

// Digest of an entire file's bytes. Throws DataError if unreadable.
uint64_t digest_file(const std::string& path);

}  // namespace kpgen
