#include <gtest/gtest.h>

#include "support.hpp"
#include "uzmorph/error.hpp"
#include "uzmorph/morphophonology.hpp"

namespace uzmorph {
namespace {

const AlphabetSpec& uz() { return AlphabetSpec::uzbek_latin(); }
const Context& ctx() { return testing::seed(); }

const EndingVariant& variant(std::string_view surface, std::string_view entry_id) {
  for (const auto& v : ctx().bundle.variants) {
    if (v.surface == surface && v.entry_id == entry_id) return v;
  }
  throw std::runtime_error("no variant " + std::string(surface) + " of " + std::string(entry_id));
}

AffixationCheck check(std::string_view stem, const EndingVariant& v, AffixationOptions o = {}) {
  return check_affixation(stem, v, ctx().bundle, ctx().rules, uz(), o);
}

std::string lemma(std::string_view stem, const EndingVariant& v) {
  return restore_lemma(stem, v, ctx().bundle, ctx().rules, uz());
}

TEST(CheckAffixation, Examples) {
  const auto r = check("ota", variant("im", "NOUN/(i)m"));
  EXPECT_FALSE(r);
  EXPECT_EQ(r.rejection, Rejection::ConditionFailed);
  EXPECT_TRUE(check("daftar", variant("imdan", "NOUN/(i)mdan")));
  ASSERT_TRUE(ctx().bundle.short_stems.count("bu"));
  EXPECT_TRUE(check("bu", variant("ni", "PRON/ni")));
}

TEST(CheckAffixation, ShortStemGuard) {
  const auto r = check("ta", variant("lar", "NOUN/lar"));
  EXPECT_EQ(r.rejection, Rejection::ShortStemUnknown);
  EXPECT_TRUE(check("ta", variant("lar", "NOUN/lar"), {.junction_rules = true, .short_stem_check = false}));
  EXPECT_TRUE(check("ot", variant("lar", "NOUN/lar")));
}

TEST(CheckAffixation, JunctionForbidsUnvoicedStem) {
  const auto r = check("yurak", variant("i", "NOUN/{i|si}"));
  EXPECT_EQ(r.rejection, Rejection::RuleForbidden);
  ASSERT_NE(r.rule, nullptr);
  EXPECT_EQ(r.rule->id, "voice-k");
  EXPECT_TRUE(check("yurag", variant("i", "NOUN/{i|si}")));
  // The dative is not possessive, so the seam is left alone.
  EXPECT_TRUE(check("yurak", variant("ka", "NOUN/{ga|ka|qa}")));
  EXPECT_TRUE(check("yurak", variant("i", "NOUN/{i|si}"), {.junction_rules = false, .short_stem_check = true}));
}

// A condition-free ending on a stem of three or more graphemes is rejected
// only when a junction rule fires.
TEST(CheckAffixation, AnyConditionLongStemAlwaysAccepted) {
  std::size_t checked = 0;
  for (const auto& v : ctx().bundle.variants) {
    if (v.condition.kind != Condition::Kind::Any) continue;
    for (const char* stem : {"daftar", "kitob", "bola", "yurak", "qishloq", "tog'", "ko'cha", "maktab", "kishi"}) {
      bool junction = false;
      for (const auto& rule : ctx().rules.junction()) junction = junction || rule.matches(stem, v, uz());
      if (junction) continue;
      EXPECT_TRUE(check(stem, v)) << stem << "+" << v.surface;
      ++checked;
    }
  }
  EXPECT_GT(checked, 1000u);
}

TEST(RestoreLemma, Examples) {
  EXPECT_EQ(lemma("singl", variant("i", "NOUN/{i|si}")), "singil");
  EXPECT_EQ(lemma("daftar", variant("imdan", "NOUN/(i)mdan")), "daftar");
  EXPECT_EQ(lemma("yurag", variant("i", "NOUN/{i|si}")), "yurak");
  EXPECT_EQ(lemma("qishlog'", variant("i", "NOUN/{i|si}")), "qishloq");
  // Possessive endings only; a g before a dative stays a g.
  EXPECT_EQ(lemma("tog", variant("da", "NOUN/da")), "tog");
  // Exception generalizes to longer endings on the same surface stem.
  EXPECT_EQ(lemma("singl", variant("im", "NOUN/(i)m")), "singil");
}

// yurak + i under the forward rule gives yuragi, which must restore to yurak.
TEST(RestoreLemma, ForwardOracleRoundTrip) {
  const auto& v = variant("i", "NOUN/{i|si}");
  const std::string lemma_in = "yurak";
  // Independent forward rule: final k before a vowel-initial possessive becomes g.
  std::string surface_stem = lemma_in;
  if (surface_stem.back() == 'k' && uz().is_vowel(v.surface.substr(0, 1)) &&
      v.segment_spans.front().feature.starts_with("Poss=")) {
    surface_stem.back() = 'g';
  }
  EXPECT_EQ(surface_stem + v.surface, "yuragi");
  EXPECT_EQ(apply_junction(lemma_in, v, ctx().rules, uz()), surface_stem);
  EXPECT_EQ(lemma(surface_stem, v), lemma_in);
  EXPECT_EQ(lemma(lemma(surface_stem, v), variant("lar", "NOUN/lar")), lemma_in);  // idempotent
}

TEST(ApplyJunction, OnlyWhenContextMatches) {
  EXPECT_EQ(apply_junction("qishloq", variant("i", "NOUN/{i|si}"), ctx().rules, uz()), "qishlog'");
  EXPECT_EQ(apply_junction("qishloq", variant("qa", "NOUN/{ga|ka|qa}"), ctx().rules, uz()), "qishloq");
  EXPECT_EQ(apply_junction("daftar", variant("im", "NOUN/(i)m"), ctx().rules, uz()), "daftar");
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::IoError;
}

TEST(RuleSet, ParseAndValidate) {
  const auto rules = RuleSet::parse("a\tJunction\tk\tV/Poss\tg\nb\tLemmaRestore\tg\tV\tk\n", uz());
  EXPECT_EQ(rules.junction().size(), 1u);
  EXPECT_EQ(rules.lemma_restore().size(), 1u);
  EXPECT_EQ(rules.junction()[0].ending_feature, "Poss");
  EXPECT_EQ(code_of([] { RuleSet::parse("a\tJunction\tk\tV\tg\na\tJunction\tq\tV\tg'\n", uz()); }),
            ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { RuleSet::parse("a\tSideways\tk\tV\tg\n", uz()); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { RuleSet::parse("a\tJunction\t*\tV\tg\n", uz()); }), ErrorCode::SchemaError);
  EXPECT_EQ(code_of([] { RuleSet::parse("a\tJunction\tk\tV\n", uz()); }), ErrorCode::SchemaError);
}

TEST(RuleSet, FirstRestoreRuleWins) {
  const auto rules = RuleSet::parse("x\tLemmaRestore\tg\tV\tk\ny\tLemmaRestore\tg\tV\tq\n", uz());
  const auto& v = variant("i", "NOUN/{i|si}");
  EXPECT_EQ(restore_lemma("yurag", v, ctx().bundle, rules, uz()), "yurak");
}

}  // namespace
}  // namespace uzmorph
