#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "uzmorph/alphabet.hpp"
#include "uzmorph/lexicon.hpp"

namespace uzmorph {

struct EndingMatch {
  std::size_t split;  // byte offset where the ending starts
  const EndingVariant* variant;
  const EndingEntry* entry;
};

/// Reversed-suffix trie over every variant surface. Owns copies of the
/// entries and variants, so matches stay valid for the index's lifetime.
class EndingIndex {
 public:
  explicit EndingIndex(const LexiconBundle& bundle);

  /// Variants whose surface is exactly `surface`.
  std::vector<const EndingVariant*> lookup(std::string_view surface) const;

  /// Every proper non-empty suffix of the token that is a variant surface,
  /// split at a grapheme boundary with a non-empty stem. Sorted by split
  /// position, then variant order.
  std::vector<EndingMatch> match_endings(const Token& token, const AlphabetSpec& spec) const;

  const EndingEntry& entry_of(const EndingVariant& v) const { return entries_[v.entry_index]; }
  const std::vector<EndingVariant>& variants() const { return variants_; }
  const std::vector<EndingEntry>& entries() const { return entries_; }

 private:
  struct Node {
    std::vector<std::pair<char, std::uint32_t>> children;
    std::vector<std::uint32_t> variants;
  };

  std::uint32_t child(std::uint32_t node, char c) const;

  std::vector<EndingEntry> entries_;
  std::vector<EndingVariant> variants_;
  std::vector<Node> nodes_;
};

inline EndingIndex build_index(const LexiconBundle& bundle) { return EndingIndex(bundle); }

inline std::vector<EndingMatch> match_endings(const EndingIndex& index, const Token& token,
                                              const AlphabetSpec& spec) {
  return index.match_endings(token, spec);
}

}  // namespace uzmorph
