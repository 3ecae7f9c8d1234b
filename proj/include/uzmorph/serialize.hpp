#pragma once

#include <string>

#include "json.hpp"
#include "uzmorph/analyzer.hpp"

namespace uzmorph {

/// Wire object shared by the service and `--format json`:
/// token, stem, lemma, pos, ending, features[], segments[{surface, feature}], rendered.
nlohmann::ordered_json to_json(const Analysis& analysis);

/// `token TAB stem TAB lemma TAB pos TAB ending TAB features`, features joined
/// with `|`, empty fields written as `_`. No trailing newline.
std::string to_tsv(const Analysis& analysis);

}  // namespace uzmorph
