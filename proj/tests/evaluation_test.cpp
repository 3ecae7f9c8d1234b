#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "support.hpp"
#include "uzmorph/error.hpp"
#include "uzmorph/evaluation.hpp"

namespace uzmorph {
namespace {

const AlphabetSpec& uz() { return AlphabetSpec::uzbek_latin(); }

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no Error thrown";
  return ErrorCode::IoError;
}

const GoldRecord kDaftarimdan{"daftarimdan", "daftar", "daftar"};
const GoldRecord kDaftar{"daftar", "daftar", "daftar"};

TEST(Classify, TableRows) {
  EXPECT_EQ(classify(kDaftarimdan, "daftar", "daftar"), EvalCase::Correct);
  EXPECT_EQ(classify(kDaftarimdan, "daftarimdan", "daftarimdan"), EvalCase::NotStripped);
  EXPECT_EQ(classify(kDaftarimdan, "daft", "daft"), EvalCase::OverStrippedWithAffixes);
  EXPECT_EQ(classify(kDaftarimdan, "daftarim", "daftarim"), EvalCase::PartialStripped);
  EXPECT_EQ(classify(kDaftar, "daft", "daft"), EvalCase::OverStrippedNoAffixes);
  EXPECT_EQ(classify(kDaftarimdan, "daftar", "daftari"), EvalCase::LemmaMismatch);
  EXPECT_EQ(classify(kDaftar, "daftar", "daftar"), EvalCase::Correct);
}

TEST(Classify, NotAPrefix) {
  EXPECT_EQ(code_of([] { classify(kDaftarimdan, "kitob", "kitob"); }), ErrorCode::NotAPrefix);
}

// Re-derive the case from lengths alone for every (gold, prediction) prefix pair.
TEST(Classify, TotalOverPrefixPairs) {
  for (const std::string t : {"daftarimdan", "kitob", "o'g'illarimizga", "va"}) {
    const auto bounds = grapheme_boundaries(t, uz());
    for (auto gb : bounds) {
      if (gb == 0) continue;
      for (auto pb : bounds) {
        const GoldRecord g{t, t.substr(0, gb), t.substr(0, gb)};
        const std::string p = t.substr(0, pb);
        EvalCase want;
        if (pb == gb) want = EvalCase::Correct;
        else if (pb == t.size()) want = EvalCase::NotStripped;
        else if (gb == t.size()) want = EvalCase::OverStrippedNoAffixes;
        else if (pb < gb) want = EvalCase::OverStrippedWithAffixes;
        else want = EvalCase::PartialStripped;
        EXPECT_EQ(classify(g, p, p), want) << t << " g=" << g.stem << " p=" << p;
      }
    }
  }
}

// Gold/prediction pairs that land in one category each.
std::pair<std::vector<GoldRecord>, std::vector<Prediction>> table_multiset(std::size_t correct, std::size_t not_stripped,
                                                                           std::size_t over_with, std::size_t partial,
                                                                           std::size_t over_none) {
  std::vector<GoldRecord> gold;
  std::vector<Prediction> pred;
  const auto add = [&](std::size_t n, const GoldRecord& g, const std::string& p) {
    for (std::size_t i = 0; i < n; ++i) {
      gold.push_back(g);
      pred.push_back({p, p});
    }
  };
  add(correct, kDaftarimdan, "daftar");
  add(not_stripped, kDaftarimdan, "daftarimdan");
  add(over_with, kDaftarimdan, "daft");
  add(partial, kDaftarimdan, "daftarim");
  add(over_none, kDaftar, "daft");
  return {gold, pred};
}

TEST(Score, TableArithmetic) {
  const auto [gold, pred] = table_multiset(4821, 24, 131, 158, 154);
  const auto r = score(gold, pred);
  EXPECT_EQ(r.unique_tokens, 5288u);
  EXPECT_EQ(r.count(EvalCase::Correct), 4821u);
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::Correct)), "91.2");
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::NotStripped)), "0.5");
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::OverStrippedWithAffixes)), "2.5");
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::PartialStripped)), "3.0");
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::OverStrippedNoAffixes)), "2.9");
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::LemmaMismatch)), "0.0");
  EXPECT_NEAR(r.accuracy(), 4821.0 / 5288.0, 1e-12);
}

TEST(Score, InvariantsOnRandomMultisets) {
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> n(0, 400);
  for (int round = 0; round < 200; ++round) {
    auto [gold, pred] = table_multiset(n(rng) + 1, n(rng), n(rng), n(rng), n(rng));
    const auto r = score(gold, pred);
    std::size_t sum = 0;
    long tenths = 0;
    int nonzero = 0;
    for (auto c : kAllCases) {
      sum += r.count(c);
      tenths += r.percent_tenths(c);
      nonzero += r.count(c) > 0;
      EXPECT_NEAR(r.percent_tenths(c) / 10.0, 100.0 * r.count(c) / r.unique_tokens, 0.05 + 1e-9);
    }
    EXPECT_EQ(sum, r.unique_tokens);
    EXPECT_LE(std::abs(tenths - 1000), nonzero / 2 + 1);
    EXPECT_GE(r.accuracy(), 0.0);
    EXPECT_LE(r.accuracy(), 1.0);
    // Permutation invariance.
    std::vector<std::size_t> order(gold.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);
    std::vector<GoldRecord> g2;
    std::vector<Prediction> p2;
    for (auto i : order) {
      g2.push_back(gold[i]);
      p2.push_back(pred[i]);
    }
    EXPECT_EQ(score(g2, p2).counts, r.counts);
  }
}

TEST(Score, PerfectPredictions) {
  const auto [gold, pred] = table_multiset(12, 0, 0, 0, 0);
  const auto r = score(gold, pred);
  EXPECT_EQ(format_tenths(r.percent_tenths(EvalCase::Correct)), "100.0");
  EXPECT_DOUBLE_EQ(r.accuracy(), 1.0);
}

TEST(ParseGold, Rows) {
  const auto g = parse_gold("# header\nDaftarimdan\tdaftar\tdaftar\n\nsingli\tsingl\tsingil\n", uz());
  ASSERT_EQ(g.size(), 2u);
  EXPECT_EQ(g[0].token, "daftarimdan");
  EXPECT_EQ(g[1].lemma, "singil");
}

TEST(ParseGold, Errors) {
  EXPECT_EQ(code_of([] { parse_gold("", uz()); }), ErrorCode::EmptyGoldFile);
  EXPECT_EQ(code_of([] { parse_gold("# only comments\n", uz()); }), ErrorCode::EmptyGoldFile);
  EXPECT_EQ(code_of([] { parse_gold("daftar\tdaftar\n", uz()); }), ErrorCode::MalformedGoldRow);
  EXPECT_EQ(code_of([] { parse_gold("daftar\tkitob\tkitob\n", uz()); }), ErrorCode::MalformedGoldRow);
  EXPECT_EQ(code_of([] { parse_gold("sho'x\tsho\tsho\n", uz()); }), ErrorCode::MalformedGoldRow);  // inside o'
  EXPECT_EQ(code_of([] { parse_gold("k@t\tk\tk\n", uz()); }), ErrorCode::MalformedGoldRow);
  EXPECT_EQ(code_of([] { load_gold(testing::kTestData / "missing.tsv", uz()); }), ErrorCode::IoError);
}

TEST(Evaluate, CollapsesDuplicates) {
  const auto gold = parse_gold("kitob\tkitob\tkitob\nKitob\tkitob\tkitob\ndaftarimdan\tdaftar\tdaftar\n", uz());
  const auto r = evaluate(gold, testing::seed());
  EXPECT_EQ(r.unique_tokens, 2u);
  EXPECT_EQ(r.running_tokens, 3u);
  EXPECT_EQ(r.count(EvalCase::Correct), 2u);
  const auto clash = parse_gold("kitob\tkitob\tkitob\nkitob\tkit\tkit\n", uz());
  EXPECT_EQ(code_of([&] { evaluate(clash, testing::seed()); }), ErrorCode::MalformedGoldRow);
  EXPECT_EQ(code_of([] { evaluate({}, testing::seed()); }), ErrorCode::EmptyGoldFile);
}

TEST(Evaluate, ReportFormats) {
  const auto [gold, pred] = table_multiset(4821, 24, 131, 158, 154);
  const auto r = score(gold, pred);
  const auto tsv = render_report_tsv(r);
  EXPECT_NE(tsv.find("Correct\t4821\t91.2\n"), std::string::npos);
  EXPECT_NE(tsv.find("OverStrippedNoAffixes\t154\t2.9\n"), std::string::npos);
  EXPECT_EQ(std::count(tsv.begin(), tsv.end(), '\n'), 7);
  const auto text = render_report_text(r);
  EXPECT_NE(text.find("Correct prediction"), std::string::npos);
  EXPECT_NE(text.find("91.2"), std::string::npos);
  EXPECT_EQ(text, render_report_text(score(gold, pred)));
}

}  // namespace
}  // namespace uzmorph
