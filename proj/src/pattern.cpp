#include "uzmorph/pattern.hpp"

#include <algorithm>

#include "uzmorph/error.hpp"

namespace uzmorph {

namespace {

bool is_meta(char c) { return c == '(' || c == ')' || c == '{' || c == '}' || c == '|'; }

[[noreturn]] void malformed(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::MalformedPattern, "'" + std::string(text) + "': " + why);
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (text.empty()) malformed(text, "empty pattern");
  Pattern out;
  std::string literal;
  auto flush = [&] {
    if (!literal.empty()) {
      out.push_back({PatternElement::Kind::Literal, {literal}});
      literal.clear();
    }
  };

  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      flush();
      const auto close = text.find(')', i + 1);
      if (close == std::string_view::npos) malformed(text, "unbalanced '('");
      const auto body = text.substr(i + 1, close - i - 1);
      if (body.empty()) malformed(text, "empty optional group");
      if (std::any_of(body.begin(), body.end(), is_meta)) malformed(text, "nested group");
      out.push_back({PatternElement::Kind::Optional, {std::string(body)}});
      i = close + 1;
    } else if (c == '{') {
      flush();
      const auto close = text.find('}', i + 1);
      if (close == std::string_view::npos) malformed(text, "unbalanced '{'");
      const auto body = text.substr(i + 1, close - i - 1);
      PatternElement alt{PatternElement::Kind::Alternation, {}};
      std::size_t start = 0;
      while (true) {
        const auto bar = body.find('|', start);
        const auto branch = body.substr(start, bar == std::string_view::npos ? body.npos : bar - start);
        if (branch.empty()) malformed(text, "empty alternation branch");
        if (std::any_of(branch.begin(), branch.end(), is_meta)) malformed(text, "nested group");
        alt.branches.emplace_back(branch);
        if (bar == std::string_view::npos) break;
        start = bar + 1;
      }
      out.push_back(std::move(alt));
      i = close + 1;
    } else if (is_meta(c)) {
      malformed(text, std::string("unexpected '") + c + "'");
    } else {
      literal.push_back(c);
      ++i;
    }
  }
  flush();
  return out;
}

bool can_be_empty(const Pattern& pattern) {
  return std::all_of(pattern.begin(), pattern.end(), [](const PatternElement& e) {
    return e.kind == PatternElement::Kind::Optional;
  });
}

}  // namespace uzmorph
