#include "uzmorph/evaluation.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <unordered_map>

#include "text_util.hpp"
#include "uzmorph/analyzer.hpp"
#include "uzmorph/error.hpp"

namespace uzmorph {

std::string_view to_string(EvalCase c) {
  switch (c) {
    case EvalCase::Correct: return "Correct";
    case EvalCase::NotStripped: return "NotStripped";
    case EvalCase::OverStrippedWithAffixes: return "OverStrippedWithAffixes";
    case EvalCase::PartialStripped: return "PartialStripped";
    case EvalCase::OverStrippedNoAffixes: return "OverStrippedNoAffixes";
    case EvalCase::LemmaMismatch: return "LemmaMismatch";
  }
  return "?";
}

std::string_view description(EvalCase c) {
  switch (c) {
    case EvalCase::Correct: return "Correct prediction";
    case EvalCase::NotStripped: return "Affixes were not removed despite their presence";
    case EvalCase::OverStrippedWithAffixes: return "Affixes were removed from the stem, stem had affixes";
    case EvalCase::PartialStripped: return "Partial removal of affixes";
    case EvalCase::OverStrippedNoAffixes: return "Affixes were removed from the stem, none were present";
    case EvalCase::LemmaMismatch: return "Stem correct, lemma wrong";
  }
  return "?";
}

EvalCase classify(const GoldRecord& gold, std::string_view p, std::string_view lemma) {
  const std::string_view t = gold.token;
  const std::string_view g = gold.stem;
  if (!t.starts_with(p)) {
    throw Error(ErrorCode::NotAPrefix, "'" + std::string(p) + "' is not a prefix of '" + gold.token + "'");
  }
  if (p == g) return lemma == gold.lemma ? EvalCase::Correct : EvalCase::LemmaMismatch;
  if (p == t) return EvalCase::NotStripped;
  if (g == t) return EvalCase::OverStrippedNoAffixes;
  return p.size() < g.size() ? EvalCase::OverStrippedWithAffixes : EvalCase::PartialStripped;
}

std::size_t EvalReport::count(EvalCase c) const {
  const auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

long EvalReport::percent_tenths(EvalCase c) const {
  if (unique_tokens == 0) return 0;
  return static_cast<long>((count(c) * 1000 * 2 + unique_tokens) / (2 * unique_tokens));
}

double EvalReport::accuracy() const {
  return unique_tokens == 0 ? 0.0 : static_cast<double>(count(EvalCase::Correct)) / unique_tokens;
}

std::string format_tenths(long tenths) {
  return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
}

EvalReport score(std::span<const GoldRecord> gold, std::span<const Prediction> predictions) {
  if (gold.size() != predictions.size()) {
    throw Error(ErrorCode::MalformedGoldRow, "gold and prediction counts differ");
  }
  EvalReport r;
  for (auto c : kAllCases) r.counts[c] = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    const auto outcome = classify(gold[i], predictions[i].stem, predictions[i].lemma);
    ++r.counts[outcome];
    if (outcome != EvalCase::Correct) r.errors.push_back({gold[i], predictions[i], outcome});
  }
  std::sort(r.errors.begin(), r.errors.end(), [](const EvalError& a, const EvalError& b) {
    return std::tie(a.gold.token, a.gold.stem, a.predicted.stem) < std::tie(b.gold.token, b.gold.stem, b.predicted.stem);
  });
  r.unique_tokens = gold.size();
  r.running_tokens = gold.size();
  return r;
}

std::vector<GoldRecord> parse_gold(std::string_view text, const AlphabetSpec& spec) {
  std::vector<GoldRecord> out;
  for (const auto& line : detail::content_lines(text)) {
    const std::string where = "gold:" + std::to_string(line.number);
    const auto cols = detail::split(line.text, '\t');
    if (cols.size() != 3) throw Error(ErrorCode::MalformedGoldRow, where + ": expected token<TAB>stem<TAB>lemma");
    std::string token;
    try {
      token = normalize(cols[0], spec).text();
    } catch (const Error& e) {
      throw Error(ErrorCode::MalformedGoldRow, where + ": " + e.what());
    }
    const auto bounds = grapheme_boundaries(token, spec);
    if (cols[1].empty() || !token.starts_with(cols[1]) ||
        std::find(bounds.begin(), bounds.end(), cols[1].size()) == bounds.end()) {
      throw Error(ErrorCode::MalformedGoldRow, where + ": stem '" + cols[1] + "' is not a prefix of '" + token + "'");
    }
    if (cols[2].empty()) throw Error(ErrorCode::MalformedGoldRow, where + ": empty lemma");
    out.push_back({std::move(token), cols[1], cols[2]});
  }
  if (out.empty()) throw Error(ErrorCode::EmptyGoldFile, "no gold records");
  return out;
}

std::vector<GoldRecord> load_gold(const std::filesystem::path& path, const AlphabetSpec& spec) {
  return parse_gold(detail::read_file(path), spec);
}

EvalReport evaluate(std::span<const GoldRecord> gold, const Context& ctx) {
  if (gold.empty()) throw Error(ErrorCode::EmptyGoldFile, "no gold records");
  std::vector<GoldRecord> unique;
  std::unordered_map<std::string, std::size_t> seen;
  for (const auto& g : gold) {
    const auto [it, inserted] = seen.emplace(g.token, unique.size());
    if (inserted) {
      unique.push_back(g);
    } else if (unique[it->second].stem != g.stem || unique[it->second].lemma != g.lemma) {
      throw Error(ErrorCode::MalformedGoldRow, "conflicting gold for '" + g.token + "'");
    }
  }

  std::vector<Prediction> predictions;
  predictions.reserve(unique.size());
  const auto start = std::chrono::steady_clock::now();
  for (const auto& g : unique) {
    const auto set = analyze(g.token, std::nullopt, ctx);
    predictions.push_back({set.best().stem, set.best().lemma});
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  auto report = score(unique, predictions);
  report.running_tokens = gold.size();
  report.seconds = elapsed.count();
  report.tokens_per_second = elapsed.count() > 0 ? unique.size() / elapsed.count() : 0.0;
  return report;
}

double bench_throughput(std::span<const std::string> corpus, const Context& ctx, int repetitions) {
  if (corpus.size() < 1000) {
    throw Error(ErrorCode::CorpusTooSmall, std::to_string(corpus.size()) + " tokens, need at least 1000");
  }
  repetitions = std::max(repetitions, 1);
  std::size_t sink = 0;
  const auto pass = [&] {
    for (const auto& raw : corpus) {
      try {
        sink += analyze(raw, std::nullopt, ctx).best().stem.size();
      } catch (const Error&) {
        // Tokens outside the alphabet still count as processed.
      }
    }
  };
  pass();
  std::vector<double> rates;
  for (int i = 0; i < repetitions; ++i) {
    const auto start = std::chrono::steady_clock::now();
    pass();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    rates.push_back(corpus.size() / std::max(dt.count(), 1e-9));
  }
  std::sort(rates.begin(), rates.end());
  const auto n = rates.size();
  const double median = n % 2 ? rates[n / 2] : (rates[n / 2 - 1] + rates[n / 2]) / 2;
  return sink == static_cast<std::size_t>(-1) ? 0.0 : median;
}

std::string render_report_text(const EvalReport& r) {
  std::string out;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-56s %8s %7s\n", "Case", "Tokens", "%");
  out += buf;
  for (auto c : kAllCases) {
    std::snprintf(buf, sizeof buf, "%-56s %8zu %7s\n", std::string(description(c)).c_str(), r.count(c),
                  format_tenths(r.percent_tenths(c)).c_str());
    out += buf;
  }
  std::snprintf(buf, sizeof buf, "%-56s %8zu\n", "Unique tokens", r.unique_tokens);
  out += buf;
  std::snprintf(buf, sizeof buf, "%-56s %8zu\n", "Running tokens", r.running_tokens);
  out += buf;
  std::snprintf(buf, sizeof buf, "%-56s %7s%%\n", "Accuracy (stem and lemma)",
                format_tenths(r.percent_tenths(EvalCase::Correct)).c_str());
  out += buf;
  return out;
}

std::string render_report_tsv(const EvalReport& r) {
  std::string out = "case\tcount\tpercent\n";
  for (auto c : kAllCases) {
    out += std::string(to_string(c)) + "\t" + std::to_string(r.count(c)) + "\t" +
           format_tenths(r.percent_tenths(c)) + "\n";
  }
  return out;
}

}  // namespace uzmorph
