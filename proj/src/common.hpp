#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace a2ck {

enum class Errc {
  invalid_argument,  // malformed input or config
  parse,             // unreadable document
  budget,            // completion/closure budget exhausted
  length_overflow,   // word outside the certified reduction zone
  truncated,         // requested data crosses the ball boundary
  count_mismatch,    // an exact combinatorial count failed (hard failure)
  io,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, std::string msg) : std::runtime_error(std::move(msg)), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

// FNV-1a, used for cache keys and export checksums.
inline std::uint64_t fnv1a64(std::string_view s, std::uint64_t h = 0xcbf29ce484222325ull) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

}  // namespace a2ck
