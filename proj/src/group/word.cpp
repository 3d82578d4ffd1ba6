#include "group/word.hpp"

#include <sstream>

namespace a2ck::group {

SymbolTable::SymbolTable(const std::vector<std::string>& generator_names) {
  names_.reserve(generator_names.size() * 2);
  for (const auto& g : generator_names) {
    if (g.empty() || g == "e" || g.back() == '\'')
      throw Error(Errc::invalid_argument, "bad generator name: '" + g + "'");
    for (const auto& seen : names_)
      if (seen == g) throw Error(Errc::invalid_argument, "duplicate generator: " + g);
    names_.push_back(g);
    names_.push_back(g + "'");
  }
}

Symbol SymbolTable::parse_token(std::string_view tok) const {
  for (int s = 0; s < num_symbols(); ++s)
    if (names_[s] == tok) return static_cast<Symbol>(s);
  throw Error(Errc::parse, "unknown symbol token: '" + std::string(tok) + "'");
}

Word SymbolTable::parse_word(std::string_view text) const {
  Word out;
  std::istringstream in{std::string(text)};
  std::string tok;
  bool saw_e = false;
  while (in >> tok) {
    if (tok == "e") {
      saw_e = true;
      continue;
    }
    out.push_back(static_cast<char>(parse_token(tok)));
  }
  if (saw_e && !out.empty())
    throw Error(Errc::parse, "identity token 'e' mixed with symbols");
  return out;
}

std::string SymbolTable::render(std::string_view word) const {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < word.size(); ++k) {
    if (k) out += ' ';
    out += name(static_cast<Symbol>(word[k]));
  }
  return out;
}

}  // namespace a2ck::group
