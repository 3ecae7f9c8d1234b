#include "uzmorph/lexicon.hpp"

#include <algorithm>

#include "text_util.hpp"
#include "uzmorph/error.hpp"
#include "uzmorph/pattern.hpp"

namespace uzmorph {

namespace {

constexpr std::pair<Pos, std::string_view> kPosNames[] = {
    {Pos::Noun, "NOUN"}, {Pos::Verb, "VERB"}, {Pos::Adj, "ADJ"},   {Pos::Num, "NUM"},   {Pos::Pron, "PRON"},
    {Pos::Adv, "ADV"},   {Pos::Conj, "CONJ"}, {Pos::Adp, "ADP"},   {Pos::Part, "PART"}, {Pos::Unknown, "UNK"},
};

[[noreturn]] void schema(const std::string& where, const std::string& why) {
  throw Error(ErrorCode::SchemaError, where + ": " + why);
}

// Splits on `|` that is not inside `{...}`.
std::vector<std::string> split_segments(std::string_view text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == '|' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

Condition parse_condition(std::string_view text, const AlphabetSpec& spec, const std::string& where) {
  if (text == "*") return Condition::any();
  if (text == "V") return Condition::vowel();
  if (text == "C") return Condition::consonant();
  const bool negated = text.starts_with('!');
  if (negated) text.remove_prefix(1);
  std::set<std::string> listed;
  for (const auto& g : detail::split(text, ',')) {
    if (!spec.is_grapheme(g)) schema(where, "condition grapheme '" + g + "' is not in the alphabet");
    listed.insert(g);
  }
  if (!negated) return Condition::in(std::move(listed));
  std::set<std::string> rest;
  for (const auto& g : spec.graphemes()) {
    if (listed.count(g) == 0) rest.insert(g);
  }
  return Condition::in(std::move(rest));
}

void check_literal(std::string_view literal, const AlphabetSpec& spec, const std::string& where) {
  for (std::size_t pos = 0; pos < literal.size();) {
    const auto n = spec.grapheme_size_at(literal, pos);
    if (!spec.is_grapheme(literal.substr(pos, n))) {
      schema(where, "'" + std::string(literal.substr(pos, n)) + "' is not in the alphabet");
    }
    pos += n;
  }
}

// Auxiliary list file: `word [POS]` per line.
std::vector<std::pair<std::string, std::optional<Pos>>> parse_word_list(std::string_view text,
                                                                        std::string_view name,
                                                                        const AlphabetSpec& spec) {
  std::vector<std::pair<std::string, std::optional<Pos>>> out;
  std::set<std::string> seen;
  for (const auto& line : detail::content_lines(text)) {
    const std::string where = std::string(name) + ":" + std::to_string(line.number);
    const auto fields = detail::split_whitespace(line.text);
    if (fields.size() > 2) schema(where, "expected 'word [POS]'");
    const auto token = normalize(fields[0], spec);
    if (token.text() != fields[0]) schema(where, "'" + fields[0] + "' is not in normalized form");
    std::optional<Pos> pos;
    if (fields.size() == 2) {
      pos = parse_pos(fields[1]);
      if (!pos || *pos == Pos::Unknown) schema(where, "unknown POS '" + fields[1] + "'");
    }
    if (!seen.insert(fields[0]).second) {
      throw Error(ErrorCode::InvariantViolation, where + ": duplicate entry '" + fields[0] + "'");
    }
    out.emplace_back(fields[0], pos);
  }
  return out;
}

}  // namespace

std::string_view to_string(Pos pos) {
  for (const auto& [p, name] : kPosNames) {
    if (p == pos) return name;
  }
  return "UNK";
}

std::optional<Pos> parse_pos(std::string_view text) {
  for (const auto& [p, name] : kPosNames) {
    if (name == text) return p;
  }
  return std::nullopt;
}

bool is_ending_pos(Pos pos) {
  switch (pos) {
    case Pos::Noun:
    case Pos::Verb:
    case Pos::Adj:
    case Pos::Num:
    case Pos::Pron:
    case Pos::Adv:
      return true;
    default:
      return false;
  }
}

const std::map<std::string, std::set<std::string>, std::less<>>& feature_inventory() {
  static const std::map<std::string, std::set<std::string>, std::less<>> inventory = {
      {"Case", {"Gen", "Acc", "Dat", "Loc", "Abl", "Term", "Equ"}},
      {"Number", {"Plur"}},
      {"Person", {"1Sg", "2Sg", "3", "1Pl", "2Pl", "3Pl"}},
      {"Poss", {"1Sg", "2Sg", "3", "1Pl", "2Pl"}},
      {"Tense", {"Past", "Pres", "Prog"}},
      {"Mood", {"Cnd", "Imp", "Des", "Opt"}},
      {"Voice", {"Pass", "Caus"}},
      {"Polarity", {"Neg"}},
      {"Question", {"Yes"}},
      {"Cop", {"Yes"}},
      {"VerbForm", {"Inf", "Part", "Conv", "Vnoun"}},
      {"NumType", {"Card", "Ord", "Dist", "Approx"}},
      {"Degree", {"Cmp", "Dim"}},
  };
  return inventory;
}

bool is_known_feature(std::string_view tag_value) {
  const auto eq = tag_value.find('=');
  if (eq == std::string_view::npos) return false;
  const auto& inv = feature_inventory();
  const auto it = inv.find(tag_value.substr(0, eq));
  return it != inv.end() && it->second.count(std::string(tag_value.substr(eq + 1))) != 0;
}

bool Condition::holds(std::string_view stem, const AlphabetSpec& spec) const {
  if (stem.empty()) return false;
  const auto last = final_grapheme(stem, spec);
  switch (kind) {
    case Kind::Any: return true;
    case Kind::StemFinalVowel: return spec.is_vowel(last);
    case Kind::StemFinalConsonant: return !spec.is_vowel(last);
    case Kind::StemFinalIn: return graphemes.count(std::string(last)) != 0;
  }
  return false;
}

std::string to_string(const Condition& c) {
  switch (c.kind) {
    case Condition::Kind::Any: return "Any";
    case Condition::Kind::StemFinalVowel: return "StemFinalVowel";
    case Condition::Kind::StemFinalConsonant: return "StemFinalConsonant";
    case Condition::Kind::StemFinalIn: {
      std::string out = "StemFinalIn{";
      bool first = true;
      for (const auto& g : c.graphemes) {
        if (!first) out += ',';
        out += g;
        first = false;
      }
      return out + "}";
    }
  }
  return "?";
}

std::optional<Condition> conjoin(const Condition& a, const Condition& b, const AlphabetSpec& spec) {
  using K = Condition::Kind;
  if (a.kind == K::Any) return b;
  if (b.kind == K::Any) return a;
  if (a.kind != K::StemFinalIn && b.kind != K::StemFinalIn) {
    if (a.kind == b.kind) return a;
    return std::nullopt;
  }
  const auto as_set = [&](const Condition& c) {
    if (c.kind == K::StemFinalIn) return c.graphemes;
    std::set<std::string> out;
    for (const auto& g : spec.graphemes()) {
      if (spec.is_vowel(g) == (c.kind == K::StemFinalVowel)) out.insert(g);
    }
    return out;
  };
  const auto sa = as_set(a);
  const auto sb = as_set(b);
  std::set<std::string> both;
  std::set_intersection(sa.begin(), sa.end(), sb.begin(), sb.end(), std::inserter(both, both.end()));
  if (both.empty()) return std::nullopt;
  return Condition::in(std::move(both));
}

std::string EndingEntry::full_pattern() const {
  std::string out;
  for (const auto& s : segments) out += s.pattern;
  return out;
}

std::vector<EndingVariant> expand_allomorphs(const EndingEntry& entry, const AlphabetSpec& spec,
                                             std::size_t entry_index) {
  struct Option {
    std::string text;
    Condition condition;
  };
  // Flatten to (segment index, options) so the product walks one list.
  std::vector<std::pair<std::size_t, std::vector<Option>>> slots;
  for (std::size_t si = 0; si < entry.segments.size(); ++si) {
    for (const auto& el : parse_pattern(entry.segments[si].pattern)) {
      std::vector<Option> opts;
      switch (el.kind) {
        case PatternElement::Kind::Literal:
          opts.push_back({el.branches.front(), Condition::any()});
          break;
        case PatternElement::Kind::Optional:
          opts.push_back({el.branches.front(), Condition::consonant()});
          opts.push_back({"", Condition::vowel()});
          break;
        case PatternElement::Kind::Alternation:
          for (const auto& b : el.branches) {
            const auto it = entry.branch_conditions.find(b);
            opts.push_back({b, it == entry.branch_conditions.end() ? Condition::any() : it->second});
          }
          break;
      }
      slots.emplace_back(si, std::move(opts));
    }
  }

  std::vector<EndingVariant> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  while (true) {
    EndingVariant v;
    v.entry_id = entry.id;
    v.entry_index = entry_index;
    std::optional<Condition> cond = Condition::any();
    std::vector<std::size_t> seg_begin(entry.segments.size(), std::string::npos);
    for (std::size_t k = 0; k < slots.size() && cond; ++k) {
      const auto& [si, opts] = slots[k];
      const auto& opt = opts[choice[k]];
      if (seg_begin[si] == std::string::npos) seg_begin[si] = v.surface.size();
      v.surface += opt.text;
      cond = conjoin(*cond, opt.condition, spec);
    }
    if (cond) {
      v.condition = *cond;
      for (std::size_t si = 0; si < entry.segments.size(); ++si) {
        const std::size_t end = si + 1 < entry.segments.size() ? seg_begin[si + 1] : v.surface.size();
        v.segment_spans.push_back({seg_begin[si], end, entry.segments[si].feature});
      }
      out.push_back(std::move(v));
    }
    // Odometer increment, last slot fastest.
    bool wrapped = true;
    for (std::size_t k = slots.size(); k-- > 0;) {
      if (++choice[k] < slots[k].second.size()) {
        wrapped = false;
        break;
      }
      choice[k] = 0;
    }
    if (wrapped) break;
  }
  if (out.empty()) {
    throw Error(ErrorCode::ConflictingConditions, "entry " + entry.id + " has no consistent allomorph");
  }
  return out;
}

EndingEntry parse_cse_row(std::string_view row, const AlphabetSpec& spec) {
  const auto cols = detail::split(row, '\t');
  if (cols.size() != 3 && cols.size() != 4) {
    schema("cse row '" + std::string(row) + "'", "expected 3 or 4 tab-separated columns");
  }
  const std::string where = "cse row '" + cols[0] + "'";
  EndingEntry e;
  const auto pos = parse_pos(cols[1]);
  if (!pos || !is_ending_pos(*pos)) schema(where, "unknown POS '" + cols[1] + "'");
  e.pos = *pos;

  for (const auto& seg : split_segments(cols[2])) {
    const auto colon = seg.find(':');
    if (colon == std::string::npos || colon == 0) schema(where, "segment '" + seg + "' lacks pattern:Tag=Val");
    MorphemeSegment ms{seg.substr(0, colon), seg.substr(colon + 1)};
    if (!is_known_feature(ms.feature)) schema(where, "unknown feature tag '" + ms.feature + "'");
    const auto parsed = parse_pattern(ms.pattern);
    if (can_be_empty(parsed)) schema(where, "segment '" + ms.pattern + "' can expand to nothing");
    for (const auto& el : parsed) {
      for (const auto& b : el.branches) check_literal(b, spec, where);
    }
    e.segments.push_back(std::move(ms));
  }
  if (e.full_pattern() != cols[0]) {
    schema(where, "segments concatenate to '" + e.full_pattern() + "'");
  }
  parse_pattern(cols[0]);

  if (cols.size() == 4 && !cols[3].empty()) {
    std::set<std::string> branches;
    for (const auto& seg : e.segments) {
      for (const auto& el : parse_pattern(seg.pattern)) {
        if (el.kind == PatternElement::Kind::Alternation) branches.insert(el.branches.begin(), el.branches.end());
      }
    }
    for (const auto& item : detail::split(cols[3], ';')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) schema(where, "condition '" + item + "' is not branch=cond");
      const auto branch = item.substr(0, eq);
      if (branches.count(branch) == 0) schema(where, "condition names unknown branch '" + branch + "'");
      if (!e.branch_conditions.emplace(branch, parse_condition(item.substr(eq + 1), spec, where)).second) {
        schema(where, "branch '" + branch + "' conditioned twice");
      }
    }
  }
  e.id = std::string(to_string(e.pos)) + "/" + cols[0];
  return e;
}

BundlePaths BundlePaths::in_directory(const std::filesystem::path& dir) {
  return {dir / "cse.tsv",     dir / "exceptional_stems.txt", dir / "non_affixed.txt",
          dir / "numbers.txt", dir / "short_stems.txt",       dir / "lemma_exceptions.tsv"};
}

LexiconBundle parse_bundle(const BundleSources& src, const AlphabetSpec& spec) {
  LexiconBundle b;

  std::set<std::string> ids;
  for (const auto& line : detail::content_lines(src.cse)) {
    EndingEntry e;
    try {
      e = parse_cse_row(line.text, spec);
    } catch (const Error& err) {
      throw Error(err.code(), "cse.tsv:" + std::to_string(line.number) + ": " + err.what());
    }
    if (!ids.insert(e.id).second) {
      throw Error(ErrorCode::DuplicateEnding, "cse.tsv:" + std::to_string(line.number) + ": " + e.id);
    }
    auto vars = expand_allomorphs(e, spec, b.cse.size());
    b.variants.insert(b.variants.end(), std::make_move_iterator(vars.begin()),
                      std::make_move_iterator(vars.end()));
    b.cse.push_back(std::move(e));
  }

  for (auto& [w, pos] : parse_word_list(src.exceptional_stems, "exceptional_stems.txt", spec)) {
    b.exceptional_stems.emplace(w, pos.value_or(Pos::Noun));
  }
  for (auto& [w, pos] : parse_word_list(src.non_affixed, "non_affixed.txt", spec)) {
    b.non_affixed_stems.emplace(w, pos.value_or(Pos::Part));
  }
  for (auto& [w, pos] : parse_word_list(src.numbers, "numbers.txt", spec)) b.number_stems.insert(w);
  for (auto& [w, pos] : parse_word_list(src.short_stems, "short_stems.txt", spec)) {
    if (grapheme_length(w, spec) > 2) {
      throw Error(ErrorCode::InvariantViolation, "short_stems.txt: '" + w + "' is longer than 2 graphemes");
    }
    b.short_stems.insert(w);
  }

  std::set<std::string> surfaces;
  for (const auto& v : b.variants) surfaces.insert(v.surface);
  for (const auto& line : detail::content_lines(src.lemma_exceptions)) {
    const std::string where = "lemma_exceptions.tsv:" + std::to_string(line.number);
    const auto cols = detail::split(line.text, '\t');
    if (cols.size() != 3) schema(where, "expected word<TAB>lemma<TAB>ending");
    const auto& word = cols[0];
    const auto& ending = cols[2];
    if (normalize(word, spec).text() != word) schema(where, "'" + word + "' is not in normalized form");
    if (surfaces.count(ending) == 0) {
      throw Error(ErrorCode::InvariantViolation, where + ": ending '" + ending + "' is not a CSE variant");
    }
    const auto bounds = grapheme_boundaries(word, spec);
    const std::size_t split = word.size() - std::min(word.size(), ending.size());
    if (!word.ends_with(ending) || split == 0 ||
        std::find(bounds.begin(), bounds.end(), split) == bounds.end()) {
      throw Error(ErrorCode::InvariantViolation, where + ": '" + word + "' does not end in '" + ending + "'");
    }
    if (!b.lemma_exceptions.emplace(word, LemmaException{cols[1], ending}).second) {
      throw Error(ErrorCode::InvariantViolation, where + ": duplicate entry '" + word + "'");
    }
  }
  return b;
}

LexiconBundle load_bundle(const BundlePaths& paths, const AlphabetSpec& spec) {
  BundleSources src{detail::read_file(paths.cse),         detail::read_file(paths.exceptional_stems),
                    detail::read_file(paths.non_affixed), detail::read_file(paths.numbers),
                    detail::read_file(paths.short_stems), detail::read_file(paths.lemma_exceptions)};
  return parse_bundle(src, spec);
}

LexiconBundle load_bundle(const std::filesystem::path& dir, const AlphabetSpec& spec) {
  return load_bundle(BundlePaths::in_directory(dir), spec);
}

std::map<Pos, std::size_t> LexiconBundle::pos_counts() const {
  std::map<Pos, std::size_t> out;
  for (const auto& e : cse) ++out[e.pos];
  return out;
}

}  // namespace uzmorph
