#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace uzmorph {

/// One element of an ending pattern.
///
///   lar        Literal      {"lar"}
///   (i)        Optional     {"i"}       present after consonants, absent after vowels
///   {ga|ka|qa} Alternation  {"ga","ka","qa"}
struct PatternElement {
  enum class Kind { Literal, Optional, Alternation };

  Kind kind;
  std::vector<std::string> branches;

  friend bool operator==(const PatternElement&, const PatternElement&) = default;
};

using Pattern = std::vector<PatternElement>;

/// Throws Error(MalformedPattern) on unbalanced or nested brackets, empty
/// optional groups, empty alternation branches and stray `|`.
Pattern parse_pattern(std::string_view text);

/// True when every element is optional, i.e. the pattern can expand to "".
bool can_be_empty(const Pattern& pattern);

}  // namespace uzmorph
