#include "group/rewrite.hpp"

#include <algorithm>
#include <queue>
#include <tuple>

namespace a2ck::group {

namespace {

bool contains_factor(std::string_view hay, std::string_view needle) {
  return hay.find(needle) != std::string_view::npos;
}

}  // namespace

void RewriteSystem::rebuild_index() {
  trie_.assign(nsym_, -1);
  trie_rule_.assign(1, -1);
  max_lhs_ = 0;
  for (int r = 0; r < static_cast<int>(rules_.size()); ++r) {
    const Word& l = rules_[r].lhs;
    max_lhs_ = std::max(max_lhs_, l.size());
    int node = 0;
    for (auto it = l.rbegin(); it != l.rend(); ++it) {
      Symbol s = static_cast<Symbol>(*it);
      int next = trie_[node * nsym_ + s];
      if (next < 0) {
        next = static_cast<int>(trie_rule_.size());
        trie_[node * nsym_ + s] = next;
        trie_.insert(trie_.end(), nsym_, -1);
        trie_rule_.push_back(-1);
      }
      node = next;
    }
    trie_rule_[node] = r;
  }
}

Word RewriteSystem::reduce(std::string_view w) const {
  if (w.size() > certified_input_length())
    throw Error(Errc::length_overflow,
                "word of length " + std::to_string(w.size()) +
                    " exceeds the certified reduction zone (" +
                    std::to_string(certified_input_length()) + ")");
  Word out;
  out.reserve(w.size());
  Word pending(w.rbegin(), w.rend());  // consumed from the back
  while (!pending.empty()) {
    out.push_back(pending.back());
    pending.pop_back();
    // Match the shortest reducible suffix of `out`; its replacement is pushed
    // back onto the input so the freed positions get rescanned.
    for (;;) {
      int node = 0;
      std::size_t depth = 0;
      const std::size_t limit = std::min(out.size(), max_lhs_);
      int hit = -1;
      while (depth < limit) {
        node = trie_child(node, static_cast<Symbol>(out[out.size() - 1 - depth]));
        if (node < 0) break;
        ++depth;
        if (trie_rule_[node] >= 0) {
          hit = trie_rule_[node];
          break;
        }
      }
      if (hit < 0) break;
      const Rule& rule = rules_[hit];
      out.resize(out.size() - depth);
      if (!rule.rhs.empty()) {
        pending.append(rule.rhs.rbegin(), rule.rhs.rend());
        break;  // next outer iteration consumes the replacement
      }
      // empty replacement: the new top may complete another lhs
      if (out.empty()) break;
    }
  }
  return out;
}

bool RewriteSystem::is_irreducible(std::string_view w) const {
  for (std::size_t end = 1; end <= w.size(); ++end) {
    int node = 0;
    const std::size_t limit = std::min(end, max_lhs_);
    for (std::size_t depth = 0; depth < limit; ++depth) {
      node = trie_child(node, static_cast<Symbol>(w[end - 1 - depth]));
      if (node < 0) break;
      if (trie_rule_[node] >= 0) return false;
    }
  }
  return true;
}

std::optional<std::string> RewriteSystem::find_unresolved_overlap(
    int bound, const SymbolTable& syms) const {
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      const Word& l1 = rules_[a].lhs;
      const Word& l2 = rules_[b].lhs;
      const std::size_t kmax = std::min(l1.size(), l2.size()) - 1;
      for (std::size_t k = 1; k <= kmax; ++k) {
        if (l1.size() + l2.size() - k > static_cast<std::size_t>(bound)) continue;
        if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
        Word left = rules_[a].rhs + l2.substr(k);
        Word right = l1.substr(0, l1.size() - k) + rules_[b].rhs;
        if (reduce(left) != reduce(right))
          return "overlap of '" + syms.render(l1) + "' and '" + syms.render(l2) +
                 "' (k=" + std::to_string(k) + ") does not resolve";
      }
    }
  }
  return std::nullopt;
}

RewriteSystem RewriteSystem::complete(int num_symbols, const std::vector<Word>& relators,
                                      int max_rules, int max_overlap,
                                      const SymbolTable& syms) {
  RewriteSystem rs;
  rs.nsym_ = num_symbols;
  rs.rebuild_index();

  // Equation queue ordered by overlap-word length, then insertion sequence.
  using Entry = std::tuple<std::size_t, std::uint64_t, Word, Word>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> eqs;
  std::uint64_t seq = 0;
  auto push_eq = [&](Word u, Word v, std::size_t pri) {
    eqs.emplace(pri, seq++, std::move(u), std::move(v));
  };

  for (int x = 0; x < num_symbols; ++x) {
    Word l;
    l.push_back(static_cast<char>(x));
    l.push_back(static_cast<char>(inverse_symbol(static_cast<Symbol>(x))));
    push_eq(l, Word{}, 2);
  }
  for (const Word& r : relators) push_eq(r, Word{}, r.size());

  int added = 0;
  bool exhausted = false;
  while (!eqs.empty()) {
    auto [pri, sq, u0, v0] = eqs.top();
    eqs.pop();
    Word u = rs.reduce(u0);
    Word v = rs.reduce(v0);
    if (u == v) continue;
    if (shortlex_less(u, v)) std::swap(u, v);

    if (++added > max_rules) {
      exhausted = true;
      break;
    }

    // Drop rules whose lhs contains the new lhs; they come back as equations.
    std::vector<Rule> kept, requeue;
    for (auto& r : rs.rules_) {
      (contains_factor(r.lhs, u) ? requeue : kept).push_back(std::move(r));
    }
    rs.rules_ = std::move(kept);
    rs.rules_.push_back(Rule{u, v});
    rs.rebuild_index();
    for (auto& r : rs.rules_) r.rhs = rs.reduce(r.rhs);
    rs.rebuild_index();
    for (auto& r : requeue) push_eq(std::move(r.lhs), std::move(r.rhs), r.lhs.size());

    // Critical pairs of the new rule against every live rule, both orders.
    for (const Rule& other : rs.rules_) {
      const Rule nr{u, v};
      for (auto [ra, rb] : {std::pair<const Rule*, const Rule*>{&nr, &other},
                            std::pair<const Rule*, const Rule*>{&other, &nr}}) {
        const Word& l1 = ra->lhs;
        const Word& l2 = rb->lhs;
        const std::size_t kmax = std::min(l1.size(), l2.size()) - 1;
        for (std::size_t k = 1; k <= kmax; ++k) {
          if (l1.compare(l1.size() - k, k, l2, 0, k) != 0) continue;
          Word left = ra->rhs + l2.substr(k);
          Word right = l1.substr(0, l1.size() - k) + rb->rhs;
          push_eq(std::move(left), std::move(right), l1.size() + l2.size() - k);
        }
      }
    }
  }

  if (!exhausted) {
    rs.status_ = Status::complete;
    rs.overlap_bound_ = 0;
    return rs;
  }
  // Budget exhausted: certify bounded confluence of the truncated system.
  if (auto bad = rs.find_unresolved_overlap(max_overlap, syms)) {
    throw Error(Errc::budget, "completion budget exhausted (" + std::to_string(max_rules) +
                                  " rules) and the system is not confluent at overlap bound " +
                                  std::to_string(max_overlap) + ": " + *bad);
  }
  rs.status_ = Status::bounded_confluent;
  rs.overlap_bound_ = max_overlap;
  return rs;
}

}  // namespace a2ck::group
