#pragma once

#include <array>
#include <string>
#include <vector>

#include "group/word.hpp"

namespace a2ck::group {

// Panel type pairs in the fixed order {0,1}, {1,2}, {2,0}. pair_index(t,t+1)=t.
inline int pair_index(int a, int b) {
  for (int p = 0; p < 3; ++p)
    if ((p == a && (p + 1) % 3 == b) || (p == b && (p + 1) % 3 == a)) return p;
  throw Error(Errc::invalid_argument, "not a type pair");
}

struct PanelDecl {
  int type_pair;                  // index into {0,1},{1,2},{2,0}
  std::vector<Symbol> generators; // base symbols generating the panel subgroup
};

// A chamber-regular group datum: presentation plus the three designated
// panel subgroups and the building order q.
struct GroupDatum {
  std::string name;
  SymbolTable symbols;
  std::vector<Word> relators;
  std::array<PanelDecl, 3> panels;  // indexed by type pair
  int q = 0;

  std::string canonical_json() const;  // normalized form, used for cache keys
};

// Parses and validates the JSON config document. Errors: missing panel type
// pair, duplicate generator, empty relator, bad q.
GroupDatum parse_group_datum(const std::string& json_text);

// Built-in presets by name ("paper-q2").
const std::string& preset_json(const std::string& name);
GroupDatum preset_datum(const std::string& name);

}  // namespace a2ck::group
