#include "uzmorph/ending_index.hpp"

#include <algorithm>

namespace uzmorph {

namespace {
constexpr std::uint32_t kNone = 0xFFFFFFFFu;
}

EndingIndex::EndingIndex(const LexiconBundle& bundle)
    : entries_(bundle.cse), variants_(bundle.variants), nodes_(1) {
  for (std::uint32_t vi = 0; vi < variants_.size(); ++vi) {
    const auto& s = variants_[vi].surface;
    std::uint32_t node = 0;
    for (auto it = s.rbegin(); it != s.rend(); ++it) {
      std::uint32_t next = child(node, *it);
      if (next == kNone) {
        next = static_cast<std::uint32_t>(nodes_.size());
        nodes_[node].children.emplace_back(*it, next);
        nodes_.emplace_back();
      }
      node = next;
    }
    nodes_[node].variants.push_back(vi);
  }
}

std::uint32_t EndingIndex::child(std::uint32_t node, char c) const {
  for (const auto& [ch, next] : nodes_[node].children) {
    if (ch == c) return next;
  }
  return kNone;
}

std::vector<const EndingVariant*> EndingIndex::lookup(std::string_view surface) const {
  std::vector<const EndingVariant*> out;
  if (surface.empty()) return out;
  std::uint32_t node = 0;
  for (auto it = surface.rbegin(); it != surface.rend() && node != kNone; ++it) node = child(node, *it);
  if (node == kNone) return out;
  for (auto vi : nodes_[node].variants) out.push_back(&variants_[vi]);
  return out;
}

std::vector<EndingMatch> EndingIndex::match_endings(const Token& token, const AlphabetSpec& spec) const {
  const std::string& text = token.text();
  const auto bounds = grapheme_boundaries(text, spec);
  std::vector<EndingMatch> out;
  std::uint32_t node = 0;
  // Walk right to left; bounds is ascending, so track the next boundary below.
  auto b = bounds.rbegin() + 1;
  for (std::size_t i = text.size(); i-- > 1;) {
    node = child(node, text[i]);
    if (node == kNone) break;
    while (b != bounds.rend() && *b > i) ++b;
    if (b == bounds.rend() || *b != i) continue;
    for (auto vi : nodes_[node].variants) {
      const auto& v = variants_[vi];
      out.push_back({i, &v, &entries_[v.entry_index]});
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const EndingMatch& a, const EndingMatch& b) {
    return a.split < b.split;
  });
  return out;
}

}  // namespace uzmorph
