#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "group/datum.hpp"
#include "group/rewrite.hpp"

namespace a2ck::group {

// Group elements are words in normal form under the engine's rewriting
// system; the identity is the empty word.
using GroupElement = Word;

// Bounded word problem for a group datum: normal forms, products, inverses
// and finite subgroup closures. Immutable after construction; all queries
// are pure and safe to call concurrently.
class GroupEngine {
 public:
  // Runs Knuth-Bendix completion and enumerates the panel subgroups (each
  // must close with exactly q+1 elements) and the three vertex subgroups
  // H_t = <panels containing type t>.
  static GroupEngine build(GroupDatum datum, int max_rules = 4000, int max_overlap = 20);

  const GroupDatum& datum() const { return datum_; }
  const RewriteSystem& rewrite_system() const { return rs_; }
  const SymbolTable& symbols() const { return datum_.symbols; }
  int q() const { return datum_.q; }

  // Irreducible form; rejects inputs longer than the safe element length.
  GroupElement normal_form(std::string_view w) const;
  GroupElement mul(std::string_view a, std::string_view b) const;
  GroupElement inv(std::string_view a) const;

  // Closure under mul/inv, shortlex-sorted. Throws Errc::budget past cap.
  std::vector<GroupElement> subgroup_closure(const std::vector<GroupElement>& gens,
                                             std::size_t cap) const;

  // Panel subgroup for type pair index p (shortlex-sorted, q+1 elements).
  const std::vector<GroupElement>& panel(int p) const { return panels_[p]; }
  // Vertex subgroup H_t for vertex type t (shortlex-sorted).
  const std::vector<GroupElement>& vertex_group(int t) const { return vertex_groups_[t]; }
  // Longest panel element; bounds the gallery-step word growth.
  std::size_t max_panel_element_length() const { return max_panel_len_; }

 private:
  GroupDatum datum_;
  RewriteSystem rs_;
  std::array<std::vector<GroupElement>, 3> panels_;
  std::array<std::vector<GroupElement>, 3> vertex_groups_;
  std::size_t max_panel_len_ = 0;
};

}  // namespace a2ck::group
