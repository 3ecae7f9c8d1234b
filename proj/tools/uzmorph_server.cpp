#include <cstdlib>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "httplib.h"
#include "uzmorph/error.hpp"
#include "uzmorph/service.hpp"

#ifndef UZMORPH_DEFAULT_DATA
#define UZMORPH_DEFAULT_DATA "data/seed"
#endif

int main(int argc, char** argv) {
  CLI::App app{"HTTP JSON service for the Uzbek morphological analyzer", "uzmorph_server"};
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string data;
  app.add_option("--host", host, "Address to bind");
  app.add_option("--port", port, "TCP port")->check(CLI::Range(1, 65535));
  app.add_option("--data", data, "Lexicon directory (default: $UZMORPH_DATA or the bundled seed)");
  CLI11_PARSE(app, argc, argv);
  if (data.empty()) {
    const char* env = std::getenv("UZMORPH_DATA");
    data = env && *env ? env : UZMORPH_DEFAULT_DATA;
  }

  uzmorph::service::Engine engine;
  httplib::Server server;
  uzmorph::service::mount(server, engine);

  // /health answers 503 until the lexicon is in place.
  std::thread loader([&] {
    try {
      auto ctx = uzmorph::Context::load(data);
      engine.install(std::move(ctx), uzmorph::service::data_hash(data));
      std::cerr << "lexicon loaded from " << data << "\n";
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      server.stop();
    }
  });

  std::cerr << "listening on " << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);
  loader.join();
  if (!ok && !engine.ready()) return 2;
  return ok ? 0 : 1;
}
