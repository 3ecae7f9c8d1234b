#include "uzmorph/analyzer.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "uzmorph/error.hpp"

namespace uzmorph {

namespace {

int pos_rank(Pos p) {
  switch (p) {
    case Pos::Noun: return 0;
    case Pos::Verb: return 1;
    case Pos::Num: return 2;
    case Pos::Adj: return 3;
    case Pos::Pron: return 4;
    case Pos::Adv: return 5;
    case Pos::Conj: return 6;
    case Pos::Adp: return 7;
    case Pos::Part: return 8;
    case Pos::Unknown: return 9;
  }
  return 9;
}

Candidate make(std::string stem, std::string lemma, const EndingVariant* v, const EndingEntry* e, Pos pos,
               Source source) {
  return Candidate{std::move(stem), std::move(lemma), v, e, pos, source};
}

// Listed stem that is a grapheme-boundary prefix of the token, longest first,
// followed by nothing or by a variant whose condition the stem satisfies.
// Only the longest prefix that yields at least one reading is used.
template <typename Listed>
void prefix_readings(const std::string& text, const std::vector<std::size_t>& bounds, const Listed& listed,
                     Source source, const Context& ctx, std::vector<Candidate>& out) {
  for (auto b = bounds.rbegin(); b != bounds.rend(); ++b) {
    if (*b == 0) break;
    const std::string stem = text.substr(0, *b);
    const auto it = listed.find(stem);
    if (it == listed.end()) continue;
    const Pos stem_pos = [&] {
      if constexpr (std::is_same_v<Listed, std::set<std::string>>) {
        return Pos::Num;
      } else {
        return it->second;
      }
    }();
    const std::size_t before = out.size();
    if (*b == text.size()) {
      out.push_back(make(stem, stem, nullptr, nullptr, stem_pos, source));
    } else {
      for (const auto* v : ctx.index.lookup(std::string_view(text).substr(*b))) {
        if (!v->condition.holds(stem, ctx.alphabet)) continue;
        const auto& entry = ctx.index.entry_of(*v);
        const Pos pos = source == Source::NumberStem ? Pos::Num : entry.pos;
        out.push_back(make(stem, stem, v, &entry, pos, source));
      }
    }
    if (out.size() > before) return;
  }
}

Analysis to_analysis(const Token& token, const Candidate& c) {
  Analysis a{token, c.stem, c.lemma, std::string(c.ending()), c.pos, {}, {}, c.source, {}};
  if (c.variant) {
    a.entry_id = c.variant->entry_id;
    for (std::size_t i = 0; i < c.variant->segment_spans.size(); ++i) {
      const auto& f = c.variant->segment_spans[i].feature;
      a.features.push_back(f);
      a.segments.push_back({std::string(c.variant->segment_surface(i)), f});
    }
  }
  return a;
}

}  // namespace

Context::Context(AlphabetSpec alphabet_, LexiconBundle bundle_, RuleSet rules_)
    : alphabet(std::move(alphabet_)), bundle(std::move(bundle_)), rules(std::move(rules_)), index(bundle) {}

std::shared_ptr<const Context> Context::load(const std::filesystem::path& dir) {
  auto alphabet = std::filesystem::exists(dir / "alphabet.txt") ? AlphabetSpec::load(dir / "alphabet.txt")
                                                                 : AlphabetSpec::uzbek_latin();
  auto bundle = load_bundle(dir, alphabet);
  auto rules = std::filesystem::exists(dir / "rules.tsv") ? RuleSet::load(dir / "rules.tsv", alphabet)
                                                          : RuleSet{};
  return std::make_shared<const Context>(std::move(alphabet), std::move(bundle), std::move(rules));
}

std::string_view to_string(Source s) {
  switch (s) {
    case Source::LemmaException: return "LemmaException";
    case Source::NonAffixed: return "NonAffixed";
    case Source::ExceptionalStem: return "ExceptionalStem";
    case Source::NumberStem: return "NumberStem";
    case Source::EndingMatch: return "EndingMatch";
    case Source::UnknownFallback: return "UnknownFallback";
  }
  return "?";
}

std::vector<Candidate> select_best(std::vector<Candidate> candidates, std::optional<Pos> pos_hint,
                                   const AlphabetSpec& spec) {
  if (candidates.empty()) throw Error(ErrorCode::EmptyCandidateList, "nothing to rank");
  const auto key = [&](const Candidate& c) {
    const bool hint_mismatch = pos_hint.has_value() && c.pos != *pos_hint;
    const auto ending_len = grapheme_length(c.ending(), spec);
    return std::make_tuple(static_cast<int>(c.source), hint_mismatch, -static_cast<long>(ending_len),
                           pos_rank(c.pos), c.entry ? std::string_view(c.entry->id) : std::string_view{},
                           std::string_view(c.stem), std::string_view(c.lemma));
  };
  std::stable_sort(candidates.begin(), candidates.end(),
                   [&](const Candidate& a, const Candidate& b) { return key(a) < key(b); });
  return candidates;
}

AnalysisSet analyze(std::string_view raw, std::optional<Pos> pos_hint, const Context& ctx) {
  const Token token = normalize(raw, ctx.alphabet);
  const std::string& text = token.text();
  const auto& spec = ctx.alphabet;
  const auto& bundle = ctx.bundle;
  std::vector<Candidate> found;

  if (const auto it = bundle.lemma_exceptions.find(text); it != bundle.lemma_exceptions.end()) {
    const std::string stem = text.substr(0, text.size() - it->second.ending.size());
    for (const auto* v : ctx.index.lookup(it->second.ending)) {
      const auto& entry = ctx.index.entry_of(*v);
      found.push_back(make(stem, it->second.lemma, v, &entry, entry.pos, Source::LemmaException));
    }
  }
  if (found.empty()) {
    if (const auto it = bundle.non_affixed_stems.find(text); it != bundle.non_affixed_stems.end()) {
      found.push_back(make(text, text, nullptr, nullptr, it->second, Source::NonAffixed));
    }
  }

  if (found.empty()) {
    const auto bounds = grapheme_boundaries(text, spec);
    prefix_readings(text, bounds, bundle.exceptional_stems, Source::ExceptionalStem, ctx, found);
    prefix_readings(text, bounds, bundle.number_stems, Source::NumberStem, ctx, found);
    for (const auto& m : ctx.index.match_endings(token, spec)) {
      const auto stem = std::string_view(text).substr(0, m.split);
      if (!check_affixation(stem, *m.variant, bundle, ctx.rules, spec)) continue;
      found.push_back(make(std::string(stem), restore_lemma(stem, *m.variant, bundle, ctx.rules, spec), m.variant,
                           m.entry, m.entry->pos, Source::EndingMatch));
    }
  }
  if (found.empty()) found.push_back(make(text, text, nullptr, nullptr, Pos::Unknown, Source::UnknownFallback));

  auto ranked = select_best(std::move(found), pos_hint, spec);
  AnalysisSet out;
  std::set<std::tuple<std::string, std::string, std::string>> seen;
  for (const auto& c : ranked) {
    if (!seen.emplace(c.stem, c.entry ? c.entry->id : std::string{}, std::string(c.ending())).second) continue;
    out.analyses.push_back(to_analysis(token, c));
  }
  return out;
}

std::string render(const Analysis& a) {
  if (a.source == Source::UnknownFallback) return a.token.text() + "[UNK]";
  std::string out = a.stem + "[" + std::string(to_string(a.pos)) + "]";
  for (const auto& s : a.segments) out += " + " + s.surface + "[" + s.feature + "]";
  out += " | lemma: " + a.lemma;
  return out;
}

std::pair<std::string, std::string> stem_and_lemma(std::string_view raw, const Context& ctx) {
  const auto set = analyze(raw, std::nullopt, ctx);
  return {set.best().stem, set.best().lemma};
}

}  // namespace uzmorph
