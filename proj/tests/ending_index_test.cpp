#include <gtest/gtest.h>

#include <set>
#include <tuple>

#include "support.hpp"
#include "uzmorph/ending_index.hpp"
#include "uzmorph/evaluation.hpp"

namespace uzmorph {
namespace {

const AlphabetSpec& uz() { return AlphabetSpec::uzbek_latin(); }

using Split = std::tuple<std::size_t, std::string, std::string>;  // split, entry id, surface

// Brute force: every grapheme-boundary suffix (from the independent splitter)
// compared against every variant surface.
std::set<Split> oracle(const std::string& text, const std::vector<EndingVariant>& variants) {
  std::set<Split> out;
  const auto gs = testing::greedy_graphemes(text, testing::kUzbekDigraphs);
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < gs.size(); ++i) {
    at += gs[i].size();
    const auto suffix = text.substr(at);
    for (const auto& v : variants) {
      if (v.surface == suffix) out.emplace(at, v.entry_id, v.surface);
    }
  }
  return out;
}

std::set<Split> actual(const EndingIndex& index, const std::string& raw) {
  std::set<Split> out;
  for (const auto& m : index.match_endings(normalize(raw, uz()), uz())) {
    out.emplace(m.split, m.variant->entry_id, m.variant->surface);
    EXPECT_EQ(m.entry->id, m.variant->entry_id);
  }
  return out;
}

LexiconBundle tiny() {
  BundleSources s;
  s.cse = "lar\tNOUN\tlar:Number=Plur\n(i)mdan\tNOUN\t(i)m:Poss=1Sg|dan:Case=Abl\ndan\tNOUN\tdan:Case=Abl\n";
  return parse_bundle(s, uz());
}

TEST(EndingIndex, Lookup) {
  const auto index = build_index(tiny());
  const auto dan = index.lookup("dan");
  ASSERT_EQ(dan.size(), 1u);
  EXPECT_EQ(dan[0]->entry_id, "NOUN/dan");
  EXPECT_EQ(index.lookup("mdan").size(), 1u);
  EXPECT_TRUE(index.lookup("zzz").empty());
  EXPECT_TRUE(index.lookup("").empty());
  EXPECT_TRUE(index.lookup("an").empty());
}

TEST(EndingIndex, MatchExamples) {
  const auto& index = testing::seed().index;
  const auto d = actual(index, "daftarimdan");
  std::set<std::string> surfaces;
  for (const auto& [split, id, s] : d) surfaces.insert(s);
  EXPECT_TRUE(surfaces.count("dan"));
  EXPECT_TRUE(surfaces.count("imdan"));
  // Only the verbal converb -b reaches into kitob; no nominal ending does.
  for (const auto& [split, id, s] : actual(index, "kitob")) EXPECT_EQ(id.rfind("VERB/", 0), 0u) << id;
  EXPECT_EQ(actual(index, "kitob"), oracle("kitob", testing::seed().bundle.variants));
  bool yok_i = false;
  for (const auto& [split, id, s] : actual(index, "yoki")) yok_i = yok_i || (split == 3 && s == "i");
  EXPECT_TRUE(yok_i);
}

TEST(EndingIndex, NeverSplitsInsideDigraph) {
  const auto& index = testing::seed().index;
  for (const auto& raw : {"bog'ga", "kishi", "qo'ng'iroq", "keling", "o'qish"}) {
    const auto bounds = grapheme_boundaries(raw, uz());
    for (const auto& m : index.match_endings(normalize(raw, uz()), uz())) {
      EXPECT_NE(std::find(bounds.begin(), bounds.end(), m.split), bounds.end()) << raw << " @" << m.split;
      EXPECT_GT(m.split, 0u);
    }
  }
}

TEST(EndingIndex, SortedBySplit) {
  const auto ms = testing::seed().index.match_endings(normalize("maktablarimizni", uz()), uz());
  ASSERT_FALSE(ms.empty());
  for (std::size_t i = 1; i < ms.size(); ++i) EXPECT_LE(ms[i - 1].split, ms[i].split);
}

TEST(EndingIndex, EqualsBruteForceOnGoldTokens) {
  const auto& ctx = testing::seed();
  const auto gold = load_gold(testing::kTestData / "gold.tsv", uz());
  ASSERT_GE(gold.size(), 200u);
  for (const auto& g : gold) {
    EXPECT_EQ(actual(ctx.index, g.token), oracle(g.token, ctx.bundle.variants)) << g.token;
  }
}

}  // namespace
}  // namespace uzmorph
