#include "uzmorph/service.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <vector>

#include "httplib.h"
#include "json.hpp"
#include "text_util.hpp"
#include "uzmorph/error.hpp"
#include "uzmorph/serialize.hpp"

namespace uzmorph::service {

namespace {

using json = nlohmann::ordered_json;

Response error_response(int status, const std::string& message) {
  return {status, json{{"error", message}}.dump()};
}

json analyze_one(const json& item, const Context& ctx) {
  if (!item.is_object() || !item.contains("text") || !item["text"].is_string()) {
    return {{"token", nullptr}, {"error", "item must be an object with a string 'text'"}};
  }
  const auto text = item["text"].get<std::string>();
  std::optional<Pos> hint;
  if (item.contains("pos") && !item["pos"].is_null()) {
    if (!item["pos"].is_string()) return {{"token", text}, {"error", "'pos' must be a string"}};
    hint = parse_pos(item["pos"].get<std::string>());
    if (!hint) return {{"token", text}, {"error", "unknown POS '" + item["pos"].get<std::string>() + "'"}};
  }
  try {
    return to_json(analyze(text, hint, ctx).best());
  } catch (const Error& e) {
    return {{"token", text}, {"error", e.what()}, {"code", std::string(to_string(e.code()))}};
  }
}

}  // namespace

std::string data_hash(const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::uint64_t h = 0xcbf29ce484222325ULL;
  const auto feed = [&h](std::string_view bytes) {
    for (unsigned char c : bytes) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
  };
  for (const auto& f : files) {
    feed(f.filename().string());
    feed(std::string_view("\0", 1));
    feed(detail::read_file(f));
    feed(std::string_view("\0", 1));
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void Engine::install(std::shared_ptr<const Context> ctx, std::string hash) {
  auto next = std::make_shared<const State>(State{std::move(ctx), std::move(hash)});
  std::lock_guard lock(mu_);
  state_ = std::move(next);
}

std::shared_ptr<const Engine::State> Engine::snapshot() const {
  std::lock_guard lock(mu_);
  return state_;
}

bool Engine::ready() const { return snapshot() != nullptr; }

Response Engine::handle_analyze(std::string_view body) const {
  const auto state = snapshot();
  if (!state) return error_response(503, "lexicon not loaded");
  json request;
  try {
    request = json::parse(body);
  } catch (const json::parse_error& e) {
    return error_response(400, std::string("malformed JSON: ") + e.what());
  }
  if (!request.is_object() || !request.contains("tokens") || !request["tokens"].is_array()) {
    return error_response(400, "expected an object with a 'tokens' array");
  }
  const auto& tokens = request["tokens"];
  if (tokens.size() > kMaxTokensPerRequest) {
    return error_response(413, "at most " + std::to_string(kMaxTokensPerRequest) + " tokens per request");
  }
  json out = json::array();
  for (const auto& item : tokens) out.push_back(analyze_one(item, *state->ctx));
  return {200, out.dump()};
}

Response Engine::handle_health() const {
  const auto state = snapshot();
  if (!state) return {503, json{{"status", "loading"}}.dump()};
  const auto& b = state->ctx->bundle;
  const auto counts = b.pos_counts();
  json entries = json::object();
  for (auto p : {Pos::Noun, Pos::Verb, Pos::Num, Pos::Adj, Pos::Pron, Pos::Adv}) {
    const auto it = counts.find(p);
    entries[std::string(to_string(p))] = it == counts.end() ? 0 : it->second;
  }
  entries["TOTAL"] = b.cse.size();
  json body{{"status", "ok"},
            {"entries", std::move(entries)},
            {"variants", b.variants.size()},
            {"exceptional_stems", b.exceptional_stems.size()},
            {"non_affixed", b.non_affixed_stems.size()},
            {"numbers", b.number_stems.size()},
            {"short_stems", b.short_stems.size()},
            {"lemma_exceptions", b.lemma_exceptions.size()},
            {"data_hash", state->hash}};
  return {200, body.dump()};
}

void mount(httplib::Server& server, const Engine& engine) {
  server.Post("/analyze", [&engine](const httplib::Request& req, httplib::Response& res) {
    const auto r = engine.handle_analyze(req.body);
    res.status = r.status;
    res.set_content(r.body, "application/json; charset=utf-8");
  });
  server.Get("/health", [&engine](const httplib::Request&, httplib::Response& res) {
    const auto r = engine.handle_health();
    res.status = r.status;
    res.set_content(r.body, "application/json; charset=utf-8");
  });
}

}  // namespace uzmorph::service
