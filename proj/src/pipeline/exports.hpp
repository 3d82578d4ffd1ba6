#pragma once

#include <iosfwd>
#include <string>

#include "shift/transition.hpp"

namespace a2ck::pipeline {

using shift::Alphabet;
using shift::ZeroOneMatrix;

// Alphabet file: header, then one "<type> <key>" line per letter in sorted
// order, then a checksum line over the payload.
void write_alphabet(std::ostream& out, const Alphabet& a, const group::SymbolTable& syms);

// Matrix file: header (name, alphabet kind, q, block sizes), then sorted
// triplets "<row key>\t<col key>\t1", then a checksum line.
void write_matrix(std::ostream& out, const std::string& name, const ZeroOneMatrix& m,
                  const Alphabet& a, const group::SymbolTable& syms);

// Reload of a matrix export against a live alphabet; verifies the checksum.
ZeroOneMatrix read_matrix(std::istream& in, const Alphabet& a);

// Reload of an alphabet export (keys and block sizes; representatives are
// not part of the file format).
struct AlphabetFile {
  std::string kind;
  int q = 0;
  std::vector<std::pair<int, std::string>> keys;  // (type, key string)
  std::array<std::uint32_t, 3> block_sizes{};
};
AlphabetFile read_alphabet(std::istream& in);

}  // namespace a2ck::pipeline
