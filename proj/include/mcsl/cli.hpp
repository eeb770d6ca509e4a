#pragma once

// Command line front end. Usage errors exit with 2, failed verification with 1.

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace mcsl::cli {

enum class Format { json, csv, table };

struct CliConfig {
  Format format = Format::json;
  std::optional<std::filesystem::path> cache_dir;
  unsigned jobs = 1;
  int verbosity = 0;
  /// Read comma-separated quaternions as actual components, not doubled ones.
  bool half = false;
};

/// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run(int argc, char** argv);

}  // namespace mcsl::cli
