#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dar/io.hpp"

namespace dar::cli {

struct FileDigest {
  std::string path;
  std::string sha256;
};

/// Record of one CLI run, enough to re-execute it and compare outputs.
struct RunManifest {
  std::vector<std::string> command;  // arguments after the program name
  std::vector<FileDigest> inputs;
  std::uint64_t seed = 0;
  std::optional<std::int64_t> budget_nodes;
  int exit_code = 0;
  std::string outcome;  // verdict or short summary
  std::string stdout_sha256;
  std::vector<FileDigest> artifacts;

  Json to_json() const;
  static RunManifest from_json(const Json& j);
};

std::string sha256_hex(const std::string& bytes);
std::string sha256_file(const std::string& path);

}  // namespace dar::cli
