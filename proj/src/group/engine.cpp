#include "group/engine.hpp"

#include <algorithm>
#include <set>

namespace a2ck::group {

GroupEngine GroupEngine::build(GroupDatum datum, int max_rules, int max_overlap) {
  GroupEngine e;
  e.rs_ = RewriteSystem::complete(datum.symbols.num_symbols(), datum.relators, max_rules,
                                  max_overlap, datum.symbols);
  e.datum_ = std::move(datum);

  const std::size_t panel_cap = 4 * static_cast<std::size_t>(e.q() + 1);
  for (int p = 0; p < 3; ++p) {
    std::vector<GroupElement> gens;
    for (Symbol s : e.datum_.panels[p].generators) gens.push_back(Word(1, static_cast<char>(s)));
    e.panels_[p] = e.subgroup_closure(gens, panel_cap);
    if (e.panels_[p].size() != static_cast<std::size_t>(e.q() + 1))
      throw Error(Errc::count_mismatch,
                  "panel {" + std::to_string(p) + "," + std::to_string((p + 1) % 3) +
                      "} closes with " + std::to_string(e.panels_[p].size()) +
                      " elements, expected q+1 = " + std::to_string(e.q() + 1));
    for (const auto& w : e.panels_[p]) e.max_panel_len_ = std::max(e.max_panel_len_, w.size());
  }
  // H_t is generated by the two panels whose type pairs contain t, i.e.
  // pairs {t-1,t} and {t,t+1}.
  const std::size_t k = static_cast<std::size_t>(e.q() + 1) *
                        (static_cast<std::size_t>(e.q()) * e.q() + e.q() + 1);
  for (int t = 0; t < 3; ++t) {
    std::vector<GroupElement> gens;
    for (int p : {(t + 2) % 3, t}) {
      for (Symbol s : e.datum_.panels[p].generators) gens.push_back(Word(1, static_cast<char>(s)));
    }
    e.vertex_groups_[t] = e.subgroup_closure(gens, 2 * k);
    if (e.vertex_groups_[t].size() != k)
      throw Error(Errc::count_mismatch,
                  "vertex subgroup H_" + std::to_string(t) + " closes with " +
                      std::to_string(e.vertex_groups_[t].size()) +
                      " elements, expected (q+1)(q^2+q+1) = " + std::to_string(k));
  }
  return e;
}

GroupElement GroupEngine::normal_form(std::string_view w) const {
  if (w.size() > rs_.safe_element_length())
    throw Error(Errc::length_overflow, "word of length " + std::to_string(w.size()) +
                                           " exceeds the certified safe length");
  return rs_.reduce(w);
}

GroupElement GroupEngine::mul(std::string_view a, std::string_view b) const {
  if (a.size() + b.size() > rs_.certified_input_length())
    throw Error(Errc::length_overflow, "product leaves the certified reduction zone");
  Word w;
  w.reserve(a.size() + b.size());
  w.append(a);
  w.append(b);
  return rs_.reduce(w);
}

GroupElement GroupEngine::inv(std::string_view a) const { return rs_.reduce(inverse_word(a)); }

std::vector<GroupElement> GroupEngine::subgroup_closure(const std::vector<GroupElement>& gens,
                                                        std::size_t cap) const {
  std::vector<GroupElement> step;
  for (const auto& g : gens) {
    step.push_back(rs_.reduce(g));
    step.push_back(inv(g));
  }
  std::set<GroupElement> seen{Word{}};
  std::vector<GroupElement> frontier{Word{}};
  while (!frontier.empty()) {
    std::vector<GroupElement> next;
    for (const auto& e : frontier) {
      for (const auto& g : step) {
        Word x = mul(e, g);
        if (seen.insert(x).second) {
          if (seen.size() > cap)
            throw Error(Errc::budget, "subgroup closure exceeds cap " + std::to_string(cap));
          next.push_back(std::move(x));
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<GroupElement> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) { return shortlex_less(a, b); });
  return out;
}

}  // namespace a2ck::group
