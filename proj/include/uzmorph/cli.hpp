#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace uzmorph::cli {

enum ExitCode : int { kOk = 0, kInputError = 1, kLexiconError = 2 };

/// `--data` wins over UZMORPH_DATA, which wins over the built-in default.
std::filesystem::path resolve_data_dir(const std::string& flag_value);

/// Runs one command line (without the program name). `in` backs `batch -`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace uzmorph::cli
