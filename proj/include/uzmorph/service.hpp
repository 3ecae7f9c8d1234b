#pragma once

#include <cstddef>
#include <filesystem>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "uzmorph/analyzer.hpp"

namespace httplib {
class Server;
}

namespace uzmorph::service {

inline constexpr std::size_t kMaxTokensPerRequest = 1000;

struct Response {
  int status = 200;
  std::string body;
};

/// 64-bit FNV-1a over every regular file in `dir`, visited in name order.
/// Rendered as 16 lowercase hex digits.
std::string data_hash(const std::filesystem::path& dir);

/// Request handlers over one immutable analysis context. The context is
/// installed once after loading; handlers copy the pointer and then run
/// without locks.
class Engine {
 public:
  void install(std::shared_ptr<const Context> ctx, std::string hash);
  bool ready() const;

  /// Body `{"tokens":[{"text":..., "pos":...}, ...]}`; replies with a JSON
  /// array in request order. 400 malformed, 413 too many tokens, 503 not loaded.
  Response handle_analyze(std::string_view body) const;
  /// 200 with entry counts and data hash, 503 before install().
  Response handle_health() const;

 private:
  struct State {
    std::shared_ptr<const Context> ctx;
    std::string hash;
  };
  std::shared_ptr<const State> snapshot() const;

  mutable std::mutex mu_;
  std::shared_ptr<const State> state_;
};

/// Registers `POST /analyze` and `GET /health` on `server`.
void mount(httplib::Server& server, const Engine& engine);

}  // namespace uzmorph::service
