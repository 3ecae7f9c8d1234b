#include "uzmorph/morphophonology.hpp"

#include <set>

#include "text_util.hpp"
#include "uzmorph/error.hpp"

namespace uzmorph {

namespace {

Condition parse_class(std::string_view text, const AlphabetSpec& spec, const std::string& where) {
  if (text == "*") return Condition::any();
  if (text == "V") return Condition::vowel();
  if (text == "C") return Condition::consonant();
  std::set<std::string> gs;
  for (const auto& g : detail::split(text, ',')) {
    if (!spec.is_grapheme(g)) {
      throw Error(ErrorCode::SchemaError, where + ": '" + g + "' is not in the alphabet");
    }
    gs.insert(g);
  }
  return Condition::in(std::move(gs));
}

std::string replace_final(std::string_view stem, std::string_view rewrite, const AlphabetSpec& spec) {
  const auto last = final_grapheme(stem, spec);
  return std::string(stem.substr(0, stem.size() - last.size())) + std::string(rewrite);
}

}  // namespace

bool PhonRule::matches(std::string_view stem, const EndingVariant& ending, const AlphabetSpec& spec) const {
  if (stem.empty() || ending.surface.empty()) return false;
  if (!stem_final.holds(stem, spec)) return false;
  const auto first = ending.surface.substr(0, spec.grapheme_size_at(ending.surface, 0));
  if (!ending_initial.holds(first, spec)) return false;
  if (!ending_feature.empty()) {
    if (ending.segment_spans.empty()) return false;
    const auto& f = ending.segment_spans.front().feature;
    if (f.substr(0, f.find('=')) != ending_feature) return false;
  }
  return true;
}

RuleSet::RuleSet(std::vector<PhonRule> rules) {
  std::set<std::string> ids;
  for (auto& r : rules) {
    if (!ids.insert(r.id).second) throw Error(ErrorCode::SchemaError, "duplicate rule id '" + r.id + "'");
    if (r.stem_final.kind == Condition::Kind::Any) {
      throw Error(ErrorCode::SchemaError, "rule " + r.id + ": empty stem-final match");
    }
    if (r.rewrite.empty() ||
        (r.stem_final.kind == Condition::Kind::StemFinalIn && r.stem_final.graphemes.count(r.rewrite) != 0)) {
      throw Error(ErrorCode::SchemaError, "rule " + r.id + ": rewrite does not change the matched grapheme");
    }
    (r.direction == PhonRule::Direction::Junction ? junction_ : restore_).push_back(std::move(r));
  }
}

RuleSet RuleSet::parse(std::string_view text, const AlphabetSpec& spec) {
  std::vector<PhonRule> rules;
  for (const auto& line : detail::content_lines(text)) {
    const std::string where = "rules.tsv:" + std::to_string(line.number);
    const auto cols = detail::split(line.text, '\t');
    if (cols.size() != 6 && cols.size() != 5) {
      throw Error(ErrorCode::SchemaError, where + ": expected 6 tab-separated columns");
    }
    PhonRule r;
    r.id = cols[0];
    if (cols[1] == "Junction") {
      r.direction = PhonRule::Direction::Junction;
    } else if (cols[1] == "LemmaRestore") {
      r.direction = PhonRule::Direction::LemmaRestore;
    } else {
      throw Error(ErrorCode::SchemaError, where + ": unknown direction '" + cols[1] + "'");
    }
    r.stem_final = parse_class(cols[2], spec, where);
    std::string_view initial = cols[3];
    if (const auto slash = initial.find('/'); slash != std::string_view::npos) {
      r.ending_feature = std::string(initial.substr(slash + 1));
      if (feature_inventory().count(r.ending_feature) == 0) {
        throw Error(ErrorCode::SchemaError, where + ": unknown feature tag '" + r.ending_feature + "'");
      }
      initial = initial.substr(0, slash);
    }
    r.ending_initial = parse_class(initial, spec, where);
    r.rewrite = cols[4];
    if (!spec.is_grapheme(r.rewrite)) {
      throw Error(ErrorCode::SchemaError, where + ": rewrite '" + r.rewrite + "' is not a grapheme");
    }
    if (cols.size() == 6) r.note = cols[5];
    rules.push_back(std::move(r));
  }
  return RuleSet(std::move(rules));
}

RuleSet RuleSet::load(const std::filesystem::path& path, const AlphabetSpec& spec) {
  return parse(detail::read_file(path), spec);
}

std::string_view to_string(Rejection r) {
  switch (r) {
    case Rejection::ConditionFailed: return "ConditionFailed";
    case Rejection::RuleForbidden: return "RuleForbidden";
    case Rejection::ShortStemUnknown: return "ShortStemUnknown";
  }
  return "?";
}

AffixationCheck check_affixation(std::string_view stem, const EndingVariant& variant,
                                 const LexiconBundle& bundle, const RuleSet& rules,
                                 const AlphabetSpec& spec, AffixationOptions options) {
  if (!variant.condition.holds(stem, spec)) return {Rejection::ConditionFailed, nullptr};
  if (options.junction_rules) {
    for (const auto& r : rules.junction()) {
      if (r.matches(stem, variant, spec)) return {Rejection::RuleForbidden, &r};
    }
  }
  if (options.short_stem_check && grapheme_length(stem, spec) <= 2 &&
      bundle.short_stems.count(std::string(stem)) == 0) {
    return {Rejection::ShortStemUnknown, nullptr};
  }
  return {};
}

std::string restore_lemma(std::string_view stem, const EndingVariant& variant, const LexiconBundle& bundle,
                          const RuleSet& rules, const AlphabetSpec& spec) {
  const std::string surface = std::string(stem) + variant.surface;
  if (const auto it = bundle.lemma_exceptions.find(surface);
      it != bundle.lemma_exceptions.end() && it->second.ending == variant.surface) {
    return it->second.lemma;
  }
  for (const auto& [word, ex] : bundle.lemma_exceptions) {
    if (word.size() == stem.size() + ex.ending.size() && word.starts_with(stem) &&
        variant.surface.starts_with(ex.ending)) {
      return ex.lemma;
    }
  }
  const std::string listed(stem);
  if (bundle.exceptional_stems.count(listed) || bundle.number_stems.count(listed) || bundle.short_stems.count(listed)) {
    return listed;
  }
  for (const auto& r : rules.lemma_restore()) {
    if (r.matches(stem, variant, spec)) return replace_final(stem, r.rewrite, spec);
  }
  return listed;
}

std::string apply_junction(std::string_view lemma, const EndingVariant& variant, const RuleSet& rules,
                           const AlphabetSpec& spec) {
  for (const auto& r : rules.junction()) {
    if (r.matches(lemma, variant, spec)) return replace_final(lemma, r.rewrite, spec);
  }
  return std::string(lemma);
}

}  // namespace uzmorph
