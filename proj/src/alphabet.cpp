#include "uzmorph/alphabet.hpp"

#include <algorithm>
#include <charconv>

#include "text_util.hpp"
#include "uzmorph/error.hpp"

namespace uzmorph {

namespace {

constexpr std::string_view kUzbekLatin = R"(# Uzbek Latin working alphabet.
[letters]
a b d e f g h i j k l m n o p q r s t u v x y z
'    # tutuq belgisi, also the second half of o' and g'
-    # kept inside hyphenated forms
0 1 2 3 4 5 6 7 8 9

[digraphs]
o' g' sh ch ng

[vowels]
a e i o u o'

[apostrophes]
# folded onto U+0027
U+2018 U+2019 U+02BB U+02BC U+0060

[separators]
. , ; : ! ? " ( ) U+00AB U+00BB U+201C U+201D U+201E U+2026
)";

char32_t parse_code_point(std::string_view item) {
  if (item.size() > 2 && (item.starts_with("U+") || item.starts_with("u+"))) {
    unsigned value = 0;
    const auto hex = item.substr(2);
    auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + hex.size(), value, 16);
    if (ec != std::errc{} || ptr != hex.data() + hex.size()) {
      throw Error(ErrorCode::SchemaError, "bad code point '" + std::string(item) + "'");
    }
    return static_cast<char32_t>(value);
  }
  std::size_t pos = 0;
  const char32_t cp = detail::decode_utf8(item, pos);
  if (pos != item.size()) {
    throw Error(ErrorCode::SchemaError, "expected a single character, got '" + std::string(item) + "'");
  }
  return cp;
}

std::string item_to_grapheme(std::string_view item) {
  // U+XXXX is accepted for letters too.
  if (item.size() > 2 && item.starts_with("U+")) {
    std::string out;
    detail::append_utf8(out, parse_code_point(item));
    return out;
  }
  return std::string(item);
}

std::vector<char32_t> code_points(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t pos = 0; pos < s.size();) out.push_back(detail::decode_utf8(s, pos));
  return out;
}

char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp - U'A' + U'a';
  return cp;
}

bool is_space(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\v' || cp == U'\f' ||
         cp == U'\u00A0';
}

}  // namespace

std::string_view to_string(SoundClass c) {
  return c == SoundClass::Vowel ? "Vowel" : "Consonant";
}

AlphabetSpec::AlphabetSpec(std::set<std::string> letters, std::vector<std::string> digraphs,
                           std::set<std::string> vowels, std::set<char32_t> apostrophes,
                           std::set<char32_t> separators)
    : letters_(std::move(letters)),
      digraphs_(std::move(digraphs)),
      vowels_(std::move(vowels)),
      apostrophes_(std::move(apostrophes)),
      separators_(std::move(separators)) {
  std::set<std::string> seen;
  for (const auto& d : digraphs_) {
    if (code_points(d).size() < 2) {
      throw Error(ErrorCode::SchemaError, "digraph '" + d + "' is a single character");
    }
    if (!seen.insert(d).second) throw Error(ErrorCode::SchemaError, "duplicate digraph '" + d + "'");
  }
  letters_.insert(digraphs_.begin(), digraphs_.end());
  for (const auto& v : vowels_) {
    if (letters_.count(v) == 0) throw Error(ErrorCode::SchemaError, "vowel '" + v + "' is not a letter");
  }
  for (char32_t cp : apostrophes_) {
    if (cp == kCanonicalApostrophe) {
      throw Error(ErrorCode::SchemaError, "canonical apostrophe listed as an alternative");
    }
    std::string single;
    detail::append_utf8(single, cp);
    if (letters_.count(single) != 0) {
      throw Error(ErrorCode::SchemaError, "apostrophe alternative '" + single + "' is also a letter");
    }
  }
  std::stable_sort(digraphs_.begin(), digraphs_.end(),
                   [](const std::string& a, const std::string& b) { return a.size() > b.size(); });
}

const AlphabetSpec& AlphabetSpec::uzbek_latin() {
  static const AlphabetSpec spec = parse(kUzbekLatin);
  return spec;
}

AlphabetSpec AlphabetSpec::parse(std::string_view text) {
  std::set<std::string> letters, vowels;
  std::vector<std::string> digraphs;
  std::set<char32_t> apostrophes, separators;
  std::string section;
  for (const auto& line : detail::content_lines(text)) {
    const auto body = detail::trim(line.text);
    if (body.starts_with('[')) {
      if (!body.ends_with(']')) {
        throw Error(ErrorCode::SchemaError, "line " + std::to_string(line.number) + ": bad section header");
      }
      section = std::string(body.substr(1, body.size() - 2));
      continue;
    }
    for (const auto& item : detail::split_whitespace(body)) {
      if (section == "letters") {
        letters.insert(item_to_grapheme(item));
      } else if (section == "digraphs") {
        digraphs.push_back(item_to_grapheme(item));
      } else if (section == "vowels") {
        vowels.insert(item_to_grapheme(item));
      } else if (section == "apostrophes") {
        apostrophes.insert(parse_code_point(item));
      } else if (section == "separators") {
        separators.insert(parse_code_point(item));
      } else {
        throw Error(ErrorCode::SchemaError,
                    "line " + std::to_string(line.number) + ": item outside a known section");
      }
    }
  }
  if (letters.empty()) throw Error(ErrorCode::SchemaError, "alphabet has no letters");
  return AlphabetSpec(std::move(letters), std::move(digraphs), std::move(vowels), std::move(apostrophes),
                      std::move(separators));
}

AlphabetSpec AlphabetSpec::load(const std::filesystem::path& path) {
  return parse(detail::read_file(path));
}

std::size_t AlphabetSpec::grapheme_size_at(std::string_view text, std::size_t pos) const {
  const auto rest = text.substr(pos);
  for (const auto& d : digraphs_) {
    if (rest.starts_with(d)) return d.size();
  }
  const std::size_t len = detail::utf8_sequence_length(static_cast<unsigned char>(text[pos]));
  return std::min(len, rest.size());
}

Token normalize(std::string_view raw, const AlphabetSpec& spec) {
  std::vector<char32_t> cps;
  for (std::size_t pos = 0; pos < raw.size();) {
    cps.push_back(spec.map_apostrophe(to_lower(detail::decode_utf8(raw, pos))));
  }
  std::size_t b = 0, e = cps.size();
  while (b < e && (is_space(cps[b]) || spec.is_separator(cps[b]))) ++b;
  while (e > b && (is_space(cps[e - 1]) || spec.is_separator(cps[e - 1]))) --e;
  if (b == e) throw Error(ErrorCode::EmptyAfterNormalization, "'" + std::string(raw) + "'");

  std::string text;
  for (std::size_t i = b; i < e; ++i) detail::append_utf8(text, cps[i]);
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t n = spec.grapheme_size_at(text, pos);
    const auto g = std::string_view(text).substr(pos, n);
    if (!spec.is_grapheme(g)) {
      throw Error(ErrorCode::NonAlphabetGrapheme,
                  "'" + std::string(g) + "' in '" + std::string(raw) + "'");
    }
    pos += n;
  }
  return Token(std::move(text));
}

std::vector<std::string> graphemes(std::string_view text, const AlphabetSpec& spec) {
  std::vector<std::string> out;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t n = spec.grapheme_size_at(text, pos);
    out.emplace_back(text.substr(pos, n));
    pos += n;
  }
  return out;
}

std::vector<std::size_t> grapheme_boundaries(std::string_view text, const AlphabetSpec& spec) {
  std::vector<std::size_t> out{0};
  for (std::size_t pos = 0; pos < text.size();) {
    pos += spec.grapheme_size_at(text, pos);
    out.push_back(pos);
  }
  return out;
}

std::size_t grapheme_length(std::string_view text, const AlphabetSpec& spec) {
  std::size_t n = 0;
  for (std::size_t pos = 0; pos < text.size(); ++n) pos += spec.grapheme_size_at(text, pos);
  return n;
}

std::string_view final_grapheme(std::string_view text, const AlphabetSpec& spec) {
  std::size_t last = 0;
  for (std::size_t pos = 0; pos < text.size();) {
    last = pos;
    pos += spec.grapheme_size_at(text, pos);
  }
  return text.substr(last);
}

SoundClass final_sound_class(const Token& token, const AlphabetSpec& spec) {
  return spec.sound_class(final_grapheme(token.text(), spec));
}

}  // namespace uzmorph
