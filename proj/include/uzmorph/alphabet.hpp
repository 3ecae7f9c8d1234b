#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace uzmorph {

enum class SoundClass { Vowel, Consonant };

std::string_view to_string(SoundClass c);

/// Working alphabet: the grapheme inventory (single letters plus digraphs),
/// the vowel set, the apostrophe look-alikes folded onto U+0027 and the
/// punctuation trimmed from token edges.
///
/// Immutable once constructed. The constructor validates the invariants and
/// throws Error(SchemaError) when they do not hold.
class AlphabetSpec {
 public:
  static constexpr char32_t kCanonicalApostrophe = U'\'';

  AlphabetSpec(std::set<std::string> letters, std::vector<std::string> digraphs,
               std::set<std::string> vowels, std::set<char32_t> apostrophes,
               std::set<char32_t> separators);

  /// Built-in Uzbek Latin alphabet.
  static const AlphabetSpec& uzbek_latin();

  /// Parses the sectioned text format:
  ///
  ///     # comment
  ///     [letters]    a b d ...
  ///     [digraphs]   o' g' sh ch ng
  ///     [vowels]     a e i o u o'
  ///     [apostrophes] U+2018 U+2019 ...
  ///     [separators] . , ; ...
  ///
  /// Items are whitespace separated; `U+XXXX` denotes a single code point.
  static AlphabetSpec parse(std::string_view text);
  static AlphabetSpec load(const std::filesystem::path& path);

  /// All graphemes, single letters and digraphs alike.
  const std::set<std::string>& graphemes() const { return letters_; }
  const std::vector<std::string>& digraphs() const { return digraphs_; }
  const std::set<std::string>& vowels() const { return vowels_; }
  const std::set<char32_t>& apostrophes() const { return apostrophes_; }
  const std::set<char32_t>& separators() const { return separators_; }

  bool is_grapheme(std::string_view g) const { return letters_.find(std::string(g)) != letters_.end(); }
  bool is_vowel(std::string_view g) const { return vowels_.find(std::string(g)) != vowels_.end(); }
  SoundClass sound_class(std::string_view grapheme) const {
    return is_vowel(grapheme) ? SoundClass::Vowel : SoundClass::Consonant;
  }

  char32_t map_apostrophe(char32_t cp) const {
    return apostrophes_.count(cp) != 0 ? kCanonicalApostrophe : cp;
  }
  bool is_separator(char32_t cp) const { return separators_.count(cp) != 0; }

  /// Byte length of the grapheme starting at `pos`: the longest digraph that
  /// matches there, otherwise one UTF-8 code point.
  std::size_t grapheme_size_at(std::string_view text, std::size_t pos) const;

 private:
  std::set<std::string> letters_;
  std::vector<std::string> digraphs_;  // longest first
  std::set<std::string> vowels_;
  std::set<char32_t> apostrophes_;
  std::set<char32_t> separators_;
};

/// A cleaned, alphabet-valid, non-empty word form. Only normalize() creates
/// one, so holding a Token is proof that the text passed validation.
class Token {
 public:
  const std::string& text() const noexcept { return text_; }

  friend bool operator==(const Token&, const Token&) = default;

 private:
  explicit Token(std::string text) : text_(std::move(text)) {}
  friend Token normalize(std::string_view raw, const AlphabetSpec& spec);

  std::string text_;
};

/// Lowercases, folds apostrophe look-alikes onto U+0027, strips edge
/// separators and whitespace, then checks every grapheme against `spec`.
/// Throws Error(EmptyAfterNormalization) or Error(NonAlphabetGrapheme).
Token normalize(std::string_view raw, const AlphabetSpec& spec);

/// Greedy longest-match segmentation; the pieces concatenate back to `text`.
std::vector<std::string> graphemes(std::string_view text, const AlphabetSpec& spec);
inline std::vector<std::string> graphemes(const Token& token, const AlphabetSpec& spec) {
  return graphemes(token.text(), spec);
}

/// Byte offsets of grapheme boundaries, including 0 and text.size().
std::vector<std::size_t> grapheme_boundaries(std::string_view text, const AlphabetSpec& spec);

std::size_t grapheme_length(std::string_view text, const AlphabetSpec& spec);

/// Last grapheme of a non-empty string; empty view for empty input.
std::string_view final_grapheme(std::string_view text, const AlphabetSpec& spec);

SoundClass final_sound_class(const Token& token, const AlphabetSpec& spec);

}  // namespace uzmorph
