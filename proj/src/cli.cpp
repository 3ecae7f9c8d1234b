#include "uzmorph/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "text_util.hpp"
#include "uzmorph/analyzer.hpp"
#include "uzmorph/error.hpp"
#include "uzmorph/evaluation.hpp"
#include "uzmorph/serialize.hpp"

#ifndef UZMORPH_DEFAULT_DATA
#define UZMORPH_DEFAULT_DATA "data/seed"
#endif

namespace uzmorph::cli {

namespace {

constexpr Pos kEndingPosOrder[] = {Pos::Noun, Pos::Verb, Pos::Num, Pos::Adj, Pos::Pron, Pos::Adv};

struct Loaded {
  std::shared_ptr<const Context> ctx;
  int status = kOk;
};

Loaded load_context(const std::filesystem::path& dir, std::ostream& err) {
  try {
    return {Context::load(dir), kOk};
  } catch (const Error& e) {
    err << "error: lexicon " << dir.string() << ": " << e.what() << "\n";
    return {nullptr, kLexiconError};
  }
}

std::optional<Pos> hint_from(const std::string& text) {
  if (text.empty()) return std::nullopt;
  auto upper = text;
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  const auto pos = parse_pos(upper);
  if (!pos) throw Error(ErrorCode::SchemaError, "unknown POS '" + text + "'");
  return pos;
}

struct OutputOptions {
  std::string format = "human";
  bool all = false;
};

// Writes one token's readings. Returns false on a token error after printing
// a diagnostic to `err`.
bool emit(const std::string& raw, std::optional<Pos> hint, const Context& ctx, const OutputOptions& opt,
          std::ostream& out, std::ostream& err, nlohmann::ordered_json* json) {
  AnalysisSet set;
  try {
    set = analyze(raw, hint, ctx);
  } catch (const Error& e) {
    err << "error: '" << raw << "': " << e.what() << "\n";
    return false;
  }
  if (opt.format == "tsv") {
    if (opt.all) {
      for (const auto& a : set.analyses) out << to_tsv(a) << "\n";
    } else {
      out << to_tsv(set.best()) << "\n";
    }
  } else if (opt.format == "json") {
    if (opt.all) {
      auto readings = nlohmann::ordered_json::array();
      for (const auto& a : set.analyses) readings.push_back(to_json(a));
      json->push_back(std::move(readings));
    } else {
      json->push_back(to_json(set.best()));
    }
  } else if (opt.all) {
    out << set.best().token.text() << "\n";
    for (const auto& a : set.analyses) out << "  " << render(a) << "\n";
  } else {
    out << render(set.best()) << "\n";
  }
  return true;
}

int analyze_tokens(const std::vector<std::string>& tokens, const std::string& pos_text, const Context& ctx,
                   const OutputOptions& opt, std::ostream& out, std::ostream& err) {
  std::optional<Pos> hint;
  try {
    hint = hint_from(pos_text);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }
  auto json = nlohmann::ordered_json::array();
  bool ok = true;
  for (const auto& t : tokens) ok = emit(t, hint, ctx, opt, out, err, &json) && ok;
  if (opt.format == "json") out << json.dump(2) << "\n";
  return ok ? kOk : kInputError;
}

std::map<std::string, std::size_t> read_manifest(const std::filesystem::path& path) {
  std::map<std::string, std::size_t> out;
  for (const auto& line : detail::content_lines(detail::read_file(path))) {
    const auto cols = detail::split_whitespace(line.text);
    if (cols.size() != 2) throw Error(ErrorCode::SchemaError, detail::format_location(path, line.number) + ": bad row");
    out[cols[0]] = std::stoul(cols[1]);
  }
  return out;
}

int validate_lexicon(const std::filesystem::path& dir, std::ostream& out, std::ostream& err) {
  if (!std::filesystem::is_directory(dir)) {
    err << "error: not a directory: " << dir.string() << "\n";
    return kInputError;
  }
  const auto loaded = load_context(dir, err);
  if (!loaded.ctx) return loaded.status;
  const auto& b = loaded.ctx->bundle;
  const auto counts = b.pos_counts();
  std::map<std::string, std::size_t> actual;
  for (auto p : kEndingPosOrder) {
    const auto it = counts.find(p);
    actual[std::string(to_string(p))] = it == counts.end() ? 0 : it->second;
    out << to_string(p) << "\t" << actual[std::string(to_string(p))] << "\n";
  }
  actual["TOTAL"] = b.cse.size();
  out << "TOTAL\t" << b.cse.size() << "\n";
  out << "variants\t" << b.variants.size() << "\n";
  out << "exceptional_stems\t" << b.exceptional_stems.size() << "\n";
  out << "non_affixed\t" << b.non_affixed_stems.size() << "\n";
  out << "numbers\t" << b.number_stems.size() << "\n";
  out << "short_stems\t" << b.short_stems.size() << "\n";
  out << "lemma_exceptions\t" << b.lemma_exceptions.size() << "\n";
  out << "rules\t" << (loaded.ctx->rules.junction().size() + loaded.ctx->rules.lemma_restore().size()) << "\n";

  const auto manifest_path = dir / "MANIFEST";
  if (!std::filesystem::exists(manifest_path)) {
    out << "manifest\tabsent\n";
    return kOk;
  }
  std::map<std::string, std::size_t> expected;
  try {
    expected = read_manifest(manifest_path);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kLexiconError;
  }
  bool ok = true;
  for (const auto& [key, n] : expected) {
    const auto it = actual.find(key);
    const std::size_t have = it == actual.end() ? 0 : it->second;
    if (have != n) {
      err << "error: MANIFEST says " << key << " " << n << ", lexicon has " << have << "\n";
      ok = false;
    }
  }
  out << "manifest\t" << (ok ? "ok" : "mismatch") << "\n";
  return ok ? kOk : kLexiconError;
}

}  // namespace

std::filesystem::path resolve_data_dir(const std::string& flag_value) {
  if (!flag_value.empty()) return flag_value;
  if (const char* env = std::getenv("UZMORPH_DATA"); env && *env) return env;
  return UZMORPH_DEFAULT_DATA;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Morphological analyzer for Uzbek words", "uzmorph"};
  app.require_subcommand(1);
  std::string data_flag;
  app.add_option("--data", data_flag, "Lexicon directory (default: $UZMORPH_DATA or the bundled seed)");

  OutputOptions opt;
  std::string pos_text;
  std::vector<std::string> tokens;
  const auto add_output_flags = [&](CLI::App* sub) {
    sub->add_option("--pos", pos_text, "Prefer readings with this POS");
    sub->add_option("--format", opt.format, "human, tsv or json")
        ->check(CLI::IsMember({"human", "tsv", "json"}));
    sub->add_flag("--all", opt.all, "Print every reading, best first");
  };

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyze the given tokens");
  analyze_cmd->add_option("tokens", tokens, "Words to analyze")->required();
  add_output_flags(analyze_cmd);

  std::string batch_file;
  auto* batch_cmd = app.add_subcommand("batch", "Analyze a file with one token per line (- for stdin)");
  batch_cmd->add_option("file", batch_file)->required();
  add_output_flags(batch_cmd);

  std::string lexicon_dir;
  auto* lexicon_cmd = app.add_subcommand("lexicon", "Lexicon maintenance");
  lexicon_cmd->require_subcommand(1);
  auto* validate_cmd = lexicon_cmd->add_subcommand("validate", "Load a lexicon directory and report entry counts");
  validate_cmd->add_option("dir", lexicon_dir)->required();

  std::string gold_file;
  std::string report_format = "text";
  bool list_errors = false;
  auto* eval_cmd = app.add_subcommand("eval", "Score the analyzer against a gold file");
  eval_cmd->add_option("--gold", gold_file, "token<TAB>stem<TAB>lemma file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--format", report_format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));
  eval_cmd->add_flag("--errors", list_errors, "List every token that was not Correct");

  std::string corpus_file;
  int reps = 5;
  auto* bench_cmd = app.add_subcommand("bench", "Measure single-threaded throughput");
  bench_cmd->add_option("--corpus", corpus_file, "Whitespace-separated tokens")->required()->check(CLI::ExistingFile);
  bench_cmd->add_option("--reps", reps, "Timed repetitions")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code == 0) return kOk;
    err << app.help();
    return kInputError;
  }

  if (*validate_cmd) return validate_lexicon(lexicon_dir, out, err);

  const auto loaded = load_context(resolve_data_dir(data_flag), err);
  if (!loaded.ctx) return loaded.status;
  const Context& ctx = *loaded.ctx;

  if (*analyze_cmd) return analyze_tokens(tokens, pos_text, ctx, opt, out, err);

  if (*batch_cmd) {
    std::string text;
    try {
      if (batch_file == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
      } else {
        text = detail::read_file(batch_file);
      }
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    std::vector<std::string> lines;
    std::istringstream stream(text);
    for (std::string line; std::getline(stream, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (!detail::trim(line).empty()) lines.push_back(line);
    }
    return analyze_tokens(lines, pos_text, ctx, opt, out, err);
  }

  if (*eval_cmd) {
    try {
      const auto gold = load_gold(gold_file, ctx.alphabet);
      const auto report = evaluate(gold, ctx);
      out << (report_format == "tsv" ? render_report_tsv(report) : render_report_text(report));
      if (list_errors) {
        for (const auto& e : report.errors) {
          out << e.gold.token << "\t" << e.gold.stem << "\t" << e.gold.lemma << "\t" << e.predicted.stem << "\t"
              << e.predicted.lemma << "\t" << to_string(e.outcome) << "\n";
        }
      }
      char buf[96];
      std::snprintf(buf, sizeof buf, "elapsed %.3f s (%.0f tokens/s)\n", report.seconds, report.tokens_per_second);
      err << buf;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    return kOk;
  }

  if (*bench_cmd) {
    try {
      const auto corpus = detail::split_whitespace(detail::read_file(corpus_file));
      const double rate = bench_throughput(corpus, ctx, reps);
      char buf[128];
      std::snprintf(buf, sizeof buf, "tokens\t%zu\nrepetitions\t%d\ntokens_per_second\t%.0f\n", corpus.size(), reps,
                    rate);
      out << buf;
    } catch (const Error& e) {
      err << "error: " << e.what() << "\n";
      return kInputError;
    }
    return kOk;
  }
  return kInputError;
}

}  // namespace uzmorph::cli
