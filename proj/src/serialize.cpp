#include "uzmorph/serialize.hpp"

namespace uzmorph {

nlohmann::ordered_json to_json(const Analysis& a) {
  nlohmann::ordered_json segments = nlohmann::ordered_json::array();
  for (const auto& s : a.segments) segments.push_back({{"surface", s.surface}, {"feature", s.feature}});
  return {{"token", a.token.text()},
          {"stem", a.stem},
          {"lemma", a.lemma},
          {"pos", std::string(to_string(a.pos))},
          {"ending", a.ending},
          {"features", a.features},
          {"segments", std::move(segments)},
          {"rendered", render(a)}};
}

std::string to_tsv(const Analysis& a) {
  const auto field = [](const std::string& s) { return s.empty() ? std::string("_") : s; };
  std::string features;
  for (const auto& f : a.features) {
    if (!features.empty()) features += '|';
    features += f;
  }
  return a.token.text() + '\t' + field(a.stem) + '\t' + field(a.lemma) + '\t' + std::string(to_string(a.pos)) +
         '\t' + field(a.ending) + '\t' + field(features);
}

}  // namespace uzmorph
