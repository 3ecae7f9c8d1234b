#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "uzmorph/alphabet.hpp"

namespace uzmorph {

/// Part of speech. The first six are the classes an inflectional ending can
/// belong to; CONJ, ADP and PART only label uninflected function words from
/// the auxiliary lists.
enum class Pos { Noun, Verb, Adj, Num, Pron, Adv, Conj, Adp, Part, Unknown };

std::string_view to_string(Pos pos);
std::optional<Pos> parse_pos(std::string_view text);
bool is_ending_pos(Pos pos);

/// Closed tag inventory, `Tag -> {values}`. See docs/features.md.
const std::map<std::string, std::set<std::string>, std::less<>>& feature_inventory();
bool is_known_feature(std::string_view tag_value);

/// Applicability of an ending variant, judged on the stem's final grapheme.
struct Condition {
  enum class Kind { Any, StemFinalVowel, StemFinalConsonant, StemFinalIn };

  Kind kind = Kind::Any;
  std::set<std::string> graphemes;  // StemFinalIn only

  static Condition any() { return {}; }
  static Condition vowel() { return {Kind::StemFinalVowel, {}}; }
  static Condition consonant() { return {Kind::StemFinalConsonant, {}}; }
  static Condition in(std::set<std::string> g) { return {Kind::StemFinalIn, std::move(g)}; }

  bool holds(std::string_view stem, const AlphabetSpec& spec) const;

  friend bool operator==(const Condition&, const Condition&) = default;
};

std::string to_string(const Condition& c);

/// Conjunction of two conditions; nullopt when no stem can satisfy both.
std::optional<Condition> conjoin(const Condition& a, const Condition& b, const AlphabetSpec& spec);

struct MorphemeSegment {
  std::string pattern;
  std::string feature;  // Tag=Value
};

struct EndingEntry {
  std::string id;  // "<POS>/<full pattern>", unique in a bundle
  std::vector<MorphemeSegment> segments;
  Pos pos = Pos::Noun;
  /// Per alternation branch conditions from the optional fourth CSE column.
  std::map<std::string, Condition> branch_conditions;

  std::string full_pattern() const;
};

struct SegmentSpan {
  std::size_t begin;
  std::size_t end;
  std::string feature;

  friend bool operator==(const SegmentSpan&, const SegmentSpan&) = default;
};

/// One literal allomorph of an entry.
struct EndingVariant {
  std::string surface;
  std::string entry_id;
  std::size_t entry_index = 0;  // position of the owning entry in the bundle
  Condition condition;
  std::vector<SegmentSpan> segment_spans;  // tile `surface` in order

  std::string_view segment_surface(std::size_t i) const {
    const auto& s = segment_spans.at(i);
    return std::string_view(surface).substr(s.begin, s.end - s.begin);
  }
};

/// Expands optional groups and alternations into literal variants.
///
/// An optional group yields an included form guarded by StemFinalConsonant
/// and an omitted form guarded by StemFinalVowel. Alternation branches take
/// their condition from `entry.branch_conditions` (Any when absent).
/// Conditions along one expansion path are conjoined; contradictory paths
/// are dropped, and an entry with no surviving path throws
/// Error(ConflictingConditions).
std::vector<EndingVariant> expand_allomorphs(const EndingEntry& entry, const AlphabetSpec& spec,
                                             std::size_t entry_index = 0);

struct LemmaException {
  std::string lemma;
  std::string ending;
};

/// The complete-set-of-endings table plus the five auxiliary datasets.
struct LexiconBundle {
  std::vector<EndingEntry> cse;
  std::vector<EndingVariant> variants;  // expansion of `cse`, entry order
  std::map<std::string, Pos> exceptional_stems;
  std::map<std::string, Pos> non_affixed_stems;
  std::set<std::string> number_stems;
  std::set<std::string> short_stems;
  std::map<std::string, LemmaException> lemma_exceptions;

  std::map<Pos, std::size_t> pos_counts() const;
};

/// Raw file contents, one string per dataset.
struct BundleSources {
  std::string cse;
  std::string exceptional_stems;
  std::string non_affixed;
  std::string numbers;
  std::string short_stems;
  std::string lemma_exceptions;
};

struct BundlePaths {
  std::filesystem::path cse;
  std::filesystem::path exceptional_stems;
  std::filesystem::path non_affixed;
  std::filesystem::path numbers;
  std::filesystem::path short_stems;
  std::filesystem::path lemma_exceptions;

  /// Standard file names inside a lexicon directory.
  static BundlePaths in_directory(const std::filesystem::path& dir);
};

/// Parses and validates every dataset. Throws Error with DuplicateEnding,
/// SchemaError, MalformedPattern, ConflictingConditions or
/// InvariantViolation.
LexiconBundle parse_bundle(const BundleSources& sources, const AlphabetSpec& spec);
LexiconBundle load_bundle(const BundlePaths& paths, const AlphabetSpec& spec);
LexiconBundle load_bundle(const std::filesystem::path& dir, const AlphabetSpec& spec);

/// Parses one CSE row (`pattern TAB pos TAB segments [TAB conditions]`).
EndingEntry parse_cse_row(std::string_view row, const AlphabetSpec& spec);

}  // namespace uzmorph
