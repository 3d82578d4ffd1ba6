#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "group/word.hpp"

namespace a2ck::group {

struct Rule {
  Word lhs, rhs;  // lhs > rhs in shortlex
};

// A terminating shortlex rewriting system together with its confluence
// certificate. `complete` means every critical pair resolves, so normal
// forms are unique for words of any length. `bounded_confluent` means all
// critical pairs whose overlap word has length <= overlap_bound resolve;
// normal forms are then certified only for inputs of length <= overlap_bound,
// and pipeline elements are capped at half that so products stay certified.
class RewriteSystem {
 public:
  enum class Status { complete, bounded_confluent };

  Status status() const { return status_; }
  int overlap_bound() const { return overlap_bound_; }
  const std::vector<Rule>& rules() const { return rules_; }
  int num_symbols() const { return nsym_; }

  // Length cap for stored group elements (spec: floor(L/2) when bounded).
  std::size_t safe_element_length() const {
    if (status_ == Status::complete) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(overlap_bound_) / 2;
  }
  // Length cap for reduction inputs (concatenations of two elements).
  std::size_t certified_input_length() const {
    if (status_ == Status::complete) return std::numeric_limits<std::size_t>::max();
    return static_cast<std::size_t>(overlap_bound_);
  }

  // Leftmost reduction to the irreducible form. Throws length_overflow if the
  // input exceeds the certified zone.
  Word reduce(std::string_view w) const;

  bool is_irreducible(std::string_view w) const;

  // Exhaustively resolves every critical pair whose overlap word has length
  // <= bound. Returns description of the first unresolved pair, if any.
  std::optional<std::string> find_unresolved_overlap(int bound, const SymbolTable& syms) const;

  // Knuth-Bendix completion under shortlex. Converges -> status complete.
  // Otherwise stops after max_rules rule additions and certifies bounded
  // confluence at max_overlap; throws Errc::budget if an overlap of length
  // <= max_overlap is left unresolved by the truncated system.
  static RewriteSystem complete(int num_symbols, const std::vector<Word>& relators,
                                int max_rules, int max_overlap, const SymbolTable& syms);

 private:
  void rebuild_index();
  // Trie over reversed left-hand sides: child(node, symbol) walks one symbol
  // deeper into a suffix of the output stack.
  int trie_child(int node, Symbol s) const { return trie_[node * nsym_ + s]; }

  std::vector<Rule> rules_;
  std::vector<int> trie_;       // nodes * nsym, -1 = absent
  std::vector<int> trie_rule_;  // node -> rule index or -1
  int nsym_ = 0;
  std::size_t max_lhs_ = 0;
  Status status_ = Status::complete;
  int overlap_bound_ = 0;
};

}  // namespace a2ck::group
