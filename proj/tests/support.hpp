#pragma once

#include <filesystem>
#include <memory>
#include <string>
#include <vector>

#include "uzmorph/analyzer.hpp"

namespace uzmorph::testing {

inline const std::filesystem::path kSeedDir = UZMORPH_SEED_DIR;
inline const std::filesystem::path kTestData = UZMORPH_TEST_DATA;

inline const Context& seed() {
  static const auto ctx = Context::load(kSeedDir);
  return *ctx;
}

/// Independent grapheme splitter: walks code points left to right and
/// merges a pair whenever the two code points spell a declared digraph.
inline std::vector<std::string> greedy_graphemes(const std::string& text, const std::vector<std::string>& digraphs) {
  std::vector<std::string> cps;
  for (std::size_t i = 0; i < text.size();) {
    const auto lead = static_cast<unsigned char>(text[i]);
    const std::size_t n = lead < 0x80 ? 1 : lead < 0xE0 ? 2 : lead < 0xF0 ? 3 : 4;
    cps.push_back(text.substr(i, n));
    i += n;
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < cps.size(); ++i) {
    if (i + 1 < cps.size()) {
      const auto pair = cps[i] + cps[i + 1];
      bool is_digraph = false;
      for (const auto& d : digraphs) is_digraph = is_digraph || d == pair;
      if (is_digraph) {
        out.push_back(pair);
        ++i;
        continue;
      }
    }
    out.push_back(cps[i]);
  }
  return out;
}

inline const std::vector<std::string> kUzbekDigraphs = {"o'", "g'", "sh", "ch", "ng"};

}  // namespace uzmorph::testing

#include "text_util.hpp"
#include "uzmorph/morphophonology.hpp"

namespace uzmorph::testing {

struct GeneratedForm {
  std::string surface;
  std::string stem;
  std::string ending;
  std::string lemma;
  std::string entry_id;
};

/// Every accepted lemma + variant pair for the lemma's POS, with the forward
/// junction rules applied to the stem.
inline std::vector<GeneratedForm> generate_forms(const Context& ctx, const std::filesystem::path& lemma_file) {
  std::vector<GeneratedForm> out;
  for (const auto& line : detail::content_lines(detail::read_file(lemma_file))) {
    const auto cols = detail::split(line.text, '\t');
    const auto pos = parse_pos(cols.at(1));
    for (const auto& v : ctx.bundle.variants) {
      if (ctx.index.entry_of(v).pos != *pos) continue;
      const auto stem = apply_junction(cols[0], v, ctx.rules, ctx.alphabet);
      if (!check_affixation(stem, v, ctx.bundle, ctx.rules, ctx.alphabet)) continue;
      out.push_back({stem + v.surface, stem, v.surface, cols[0], v.entry_id});
    }
  }
  return out;
}

/// True when some reading of the surface has the generating (stem, ending).
inline bool reanalyzes(const Context& ctx, const GeneratedForm& f) {
  for (const auto& a : analyze(f.surface, std::nullopt, ctx).analyses) {
    if (a.stem == f.stem && a.ending == f.ending) return true;
  }
  return false;
}

}  // namespace uzmorph::testing
