#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "uzmorph/alphabet.hpp"
#include "uzmorph/ending_index.hpp"
#include "uzmorph/lexicon.hpp"
#include "uzmorph/morphophonology.hpp"

namespace uzmorph {

/// Everything an analysis needs, loaded once and shared read-only.
struct Context {
  Context(AlphabetSpec alphabet, LexiconBundle bundle, RuleSet rules);

  /// Loads a lexicon directory: the six dataset files, `rules.tsv`, and
  /// `alphabet.txt` when present (the built-in alphabet otherwise).
  static std::shared_ptr<const Context> load(const std::filesystem::path& dir);

  AlphabetSpec alphabet;
  LexiconBundle bundle;
  RuleSet rules;
  EndingIndex index;
};

/// Where a reading came from, in priority order.
enum class Source { LemmaException, NonAffixed, ExceptionalStem, NumberStem, EndingMatch, UnknownFallback };

std::string_view to_string(Source s);

struct Candidate {
  std::string stem;
  std::string lemma;
  const EndingVariant* variant = nullptr;  // null for an empty ending
  const EndingEntry* entry = nullptr;
  Pos pos = Pos::Unknown;
  Source source = Source::UnknownFallback;

  std::string_view ending() const { return variant ? std::string_view(variant->surface) : std::string_view{}; }
};

struct Segment {
  std::string surface;
  std::string feature;

  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Analysis {
  Token token;
  std::string stem;
  std::string lemma;
  std::string ending;
  Pos pos = Pos::Unknown;
  std::vector<std::string> features;
  std::vector<Segment> segments;
  Source source = Source::UnknownFallback;
  std::string entry_id;

  friend bool operator==(const Analysis&, const Analysis&) = default;
};

/// Ranked readings of one token; never empty.
struct AnalysisSet {
  std::vector<Analysis> analyses;

  const Analysis& best() const { return analyses.front(); }
};

/// Total order: source priority, then agreement with `pos_hint`, then longer
/// ending, then POS (NOUN VERB NUM ADJ PRON ADV), then entry id, then stem.
/// Throws Error(EmptyCandidateList).
std::vector<Candidate> select_best(std::vector<Candidate> candidates, std::optional<Pos> pos_hint,
                                   const AlphabetSpec& spec);

/// Full pipeline for one raw token. Only normalization errors escape.
AnalysisSet analyze(std::string_view raw, std::optional<Pos> pos_hint, const Context& ctx);

/// `daftar[NOUN] + im[Poss=1Sg] + dan[Case=Abl] | lemma: daftar`, or
/// `<token>[UNK]` for an unknown word.
std::string render(const Analysis& analysis);

std::pair<std::string, std::string> stem_and_lemma(std::string_view raw, const Context& ctx);

}  // namespace uzmorph
