#pragma once

#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "rdhe/keystream.hpp"

namespace rdhe::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kParse = 3,
  kCapacity = 4,
  kCorruption = 5,
};

/// Builds the keystream for a key argument:
///   "@path"      key material read from a file
///   "pad:@path"  the file's bytes are used verbatim as the keystream
///   anything else  the text itself is the key material
std::unique_ptr<cipher::KeystreamSource> keystream_from_arg(std::string_view arg, std::string_view context_label);

/// Sidecar text for beta: four '0'/'1' characters and a newline.
std::string format_beta(std::uint8_t bits);
std::uint8_t parse_beta(std::string_view text);

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rdhe::cli
