#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "uzmorph/alphabet.hpp"
#include "uzmorph/lexicon.hpp"

namespace uzmorph {

/// A stem-final alternation.
///
/// Junction rules describe the forward change: a lemma whose final grapheme
/// matches `stem_final`, followed by an ending that matches `ending_initial`,
/// surfaces with that grapheme replaced by `rewrite` (yurak + i -> yuragi).
/// When checking a split, a surface stem that still shows the unchanged
/// grapheme in that context is rejected.
///
/// LemmaRestore rules run the other way: a surface stem whose final grapheme
/// matches gets `rewrite` in the lemma (yurag + i -> yurak).
struct PhonRule {
  enum class Direction { Junction, LemmaRestore };

  std::string id;
  Direction direction = Direction::Junction;
  Condition stem_final;
  Condition ending_initial;          // judged on the ending's first grapheme
  std::string ending_feature;        // optional Tag the first segment must carry
  std::string rewrite;
  std::string note;

  bool matches(std::string_view stem, const EndingVariant& ending, const AlphabetSpec& spec) const;
};

/// Ordered rules, split by direction. The first matching rule wins.
class RuleSet {
 public:
  RuleSet() = default;
  explicit RuleSet(std::vector<PhonRule> rules);

  /// `id TAB direction TAB stem_final TAB ending_initial TAB rewrite TAB note`
  ///
  /// stem_final / ending_initial: `*`, `V`, `C`, or a comma list of
  /// graphemes; ending_initial may add `/Tag` to require that feature on the
  /// ending's first segment.
  static RuleSet parse(std::string_view text, const AlphabetSpec& spec);
  static RuleSet load(const std::filesystem::path& path, const AlphabetSpec& spec);

  const std::vector<PhonRule>& junction() const { return junction_; }
  const std::vector<PhonRule>& lemma_restore() const { return restore_; }

 private:
  std::vector<PhonRule> junction_;
  std::vector<PhonRule> restore_;
};

enum class Rejection { ConditionFailed, RuleForbidden, ShortStemUnknown };

std::string_view to_string(Rejection r);

struct AffixationCheck {
  std::optional<Rejection> rejection;
  const PhonRule* rule = nullptr;  // the forbidding rule, if any

  bool accepted() const { return !rejection.has_value(); }
  explicit operator bool() const { return accepted(); }
};

struct AffixationOptions {
  bool junction_rules = true;
  bool short_stem_check = true;
};

/// Accepts stem + ending when the variant's condition holds on the stem, no
/// junction rule forbids the seam, and a stem of at most two graphemes is a
/// listed short stem.
AffixationCheck check_affixation(std::string_view stem, const EndingVariant& variant,
                                 const LexiconBundle& bundle, const RuleSet& rules,
                                 const AlphabetSpec& spec, AffixationOptions options = {});

/// Dictionary form for an accepted split.
///
/// Order: the whole surface listed in the lemma exceptions; a listed
/// exception sharing this surface stem whose ending begins the current
/// ending (singl + im -> singil); a stem listed as exceptional, number or
/// short stem is its own lemma (tog' + i stays tog'); the first LemmaRestore
/// rule; the stem.
std::string restore_lemma(std::string_view stem, const EndingVariant& variant, const LexiconBundle& bundle,
                          const RuleSet& rules, const AlphabetSpec& spec);

/// Forward direction: the surface stem a lemma takes before `variant`.
std::string apply_junction(std::string_view lemma, const EndingVariant& variant, const RuleSet& rules,
                           const AlphabetSpec& spec);

}  // namespace uzmorph
