#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "uzmorph/alphabet.hpp"

namespace uzmorph {

struct Context;

struct GoldRecord {
  std::string token;  // normalized
  std::string stem;   // grapheme-boundary prefix of token
  std::string lemma;
};

/// Outcome buckets for one (gold, prediction) pair. The first five mirror the
/// stemming error table; LemmaMismatch holds a right stem with a wrong lemma.
enum class EvalCase {
  Correct,
  NotStripped,
  OverStrippedWithAffixes,
  PartialStripped,
  OverStrippedNoAffixes,
  LemmaMismatch,
};

inline constexpr EvalCase kAllCases[] = {EvalCase::Correct,         EvalCase::NotStripped,
                                         EvalCase::OverStrippedWithAffixes, EvalCase::PartialStripped,
                                         EvalCase::OverStrippedNoAffixes,   EvalCase::LemmaMismatch};

std::string_view to_string(EvalCase c);
std::string_view description(EvalCase c);

/// Throws Error(NotAPrefix) when the predicted stem is not a prefix of the
/// gold token.
EvalCase classify(const GoldRecord& gold, std::string_view predicted_stem, std::string_view predicted_lemma);

struct Prediction {
  std::string stem;
  std::string lemma;
};

struct EvalError {
  GoldRecord gold;
  Prediction predicted;
  EvalCase outcome;
};

struct EvalReport {
  std::map<EvalCase, std::size_t> counts;  // every case present, possibly 0
  std::size_t unique_tokens = 0;
  std::size_t running_tokens = 0;
  std::vector<EvalError> errors;  // sorted by token
  double seconds = 0.0;           // wall time of the analysis pass
  double tokens_per_second = 0.0;

  std::size_t count(EvalCase c) const;
  /// Percentage of unique tokens in tenths, rounded half up (912 = 91.2%).
  long percent_tenths(EvalCase c) const;
  double accuracy() const;
};

/// "91.2" from 912.
std::string format_tenths(long tenths);

/// Scores paired gold records and predictions (no deduplication).
EvalReport score(std::span<const GoldRecord> gold, std::span<const Prediction> predictions);

/// `token TAB stem TAB lemma`, `#` comments. Throws Error(EmptyGoldFile) or
/// Error(MalformedGoldRow).
std::vector<GoldRecord> parse_gold(std::string_view text, const AlphabetSpec& spec);
std::vector<GoldRecord> load_gold(const std::filesystem::path& path, const AlphabetSpec& spec);

/// Collapses repeated tokens, analyzes each unique token without a POS hint
/// and scores the best reading.
EvalReport evaluate(std::span<const GoldRecord> gold, const Context& ctx);

/// Median tokens/second over `repetitions` timed passes after one untimed
/// warm-up pass. Throws Error(CorpusTooSmall) below 1000 tokens.
double bench_throughput(std::span<const std::string> corpus, const Context& ctx, int repetitions);

/// Aligned table; timing is left out so reruns compare byte for byte.
std::string render_report_text(const EvalReport& report);
/// `case TAB count TAB percent` per line.
std::string render_report_tsv(const EvalReport& report);

}  // namespace uzmorph
