#include "ccsf/trees.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace ccsf {

namespace {

using Entry = std::pair<TermPtr, int>;  // tree, prefix count

// All canonical trees of depth <= d with at most `budget` prefixes, each
// sum node limited to `width` pairwise-distinct summands. Distinct results
// are pairwise non-bisimilar.
const std::vector<Entry>& trees_upto(int d, int budget, int width,
                                     std::map<std::pair<int, int>, std::vector<Entry>>& memo) {
  auto key = std::make_pair(d, budget);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  std::vector<Entry> out;
  out.emplace_back(Term::nil(), 0);
  if (d >= 1 && budget >= 1) {
    std::vector<Entry> prefixes;
    for (const auto& [body, c] : trees_upto(d - 1, budget - 1, width, memo)) {
      for (Act a : kAllActs)
        if (c + 1 <= budget) prefixes.emplace_back(Term::pre(a, body), c + 1);
    }
    // iterate cheapest-first so a blown budget cuts the whole tail;
    // summands are re-sorted canonically when a sum is materialised
    std::sort(prefixes.begin(), prefixes.end(),
              [](const Entry& x, const Entry& y) {
                if (x.second != y.second) return x.second < y.second;
                return cmp(x.first, y.first) < 0;
              });
    std::vector<size_t> chosen;
    std::function<void(size_t, int)> combos = [&](size_t from, int cost) {
      if (!chosen.empty()) {
        std::vector<TermPtr> parts;
        parts.reserve(chosen.size());
        for (size_t i : chosen) parts.push_back(prefixes[i].first);
        std::sort(parts.begin(), parts.end(),
                  [](const TermPtr& x, const TermPtr& y) {
                    return cmp(x, y) < 0;
                  });
        out.emplace_back(sum_of(parts), cost);
      }
      if (chosen.size() >= static_cast<size_t>(width)) return;
      for (size_t i = from; i < prefixes.size(); ++i) {
        if (cost + prefixes[i].second > budget) break;
        chosen.push_back(i);
        combos(i + 1, cost + prefixes[i].second);
        chosen.pop_back();
      }
    };
    combos(0, 0);
  }
  return memo.emplace(key, std::move(out)).first->second;
}

}  // namespace

std::vector<TermPtr> SyncTreeEnumerator::all() const {
  std::map<std::pair<int, int>, std::vector<Entry>> memo;
  const auto& entries = trees_upto(max_depth, max_prefixes, max_width, memo);
  std::vector<TermPtr> out;
  out.reserve(entries.size());
  for (const auto& [t, c] : entries) out.push_back(t);
  return out;
}

}  // namespace ccsf
