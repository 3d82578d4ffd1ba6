#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "common.hpp"

namespace a2ck::group {

// A symbol is an index into the symbol table. Generator k occupies id 2k and
// its formal inverse id 2k+1, so inversion is a bit flip. A word is a byte
// string of symbol ids; the empty string is the identity.
using Symbol = unsigned char;
using Word = std::string;

inline Symbol inverse_symbol(Symbol s) { return static_cast<Symbol>(s ^ 1u); }

inline Word inverse_word(std::string_view w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out.push_back(static_cast<char>(inverse_symbol(static_cast<Symbol>(*it))));
  return out;
}

// Shortlex: length first, then lexicographic on symbol ids. Declaration order
// of the generators fixes the id order, inverses directly after their base.
inline bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

class SymbolTable {
 public:
  SymbolTable() = default;
  explicit SymbolTable(const std::vector<std::string>& generator_names);

  int num_symbols() const { return static_cast<int>(names_.size()); }
  int num_generators() const { return num_symbols() / 2; }
  const std::string& name(Symbol s) const { return names_.at(s); }

  // Token syntax: a generator name, or the name followed by ' for its inverse.
  Symbol parse_token(std::string_view tok) const;
  // Whitespace-separated tokens; "e" (alone) denotes the empty word.
  Word parse_word(std::string_view text) const;
  std::string render(std::string_view word) const;

 private:
  std::vector<std::string> names_;  // id -> printable name
};

}  // namespace a2ck::group
