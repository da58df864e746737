#include "manifest.hpp"

#include <openssl/evp.h>

#include <iomanip>
#include <sstream>

#include "dar/error.hpp"

namespace dar::cli {

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  ensure(EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) == 1, "SHA-256 failed");
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

std::string sha256_file(const std::string& path) { return sha256_hex(read_file(path)); }

namespace {

Json digests(const std::vector<FileDigest>& files) {
  Json out = Json::array();
  for (const auto& f : files) out.push_back({{"path", f.path}, {"sha256", f.sha256}});
  return out;
}

std::vector<FileDigest> read_digests(const Json& j) {
  std::vector<FileDigest> out;
  for (const auto& item : j) out.push_back({item.at("path").get<std::string>(), item.at("sha256").get<std::string>()});
  return out;
}

}  // namespace

Json RunManifest::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = digests(inputs);
  j["seed"] = seed;
  if (budget_nodes)
    j["budget_nodes"] = *budget_nodes;
  else
    j["budget_nodes"] = nullptr;
  j["outcome"] = {{"exit_code", exit_code}, {"summary", outcome}};
  j["stdout_sha256"] = stdout_sha256;
  j["artifacts"] = digests(artifacts);
  return j;
}

RunManifest RunManifest::from_json(const Json& j) {
  RunManifest m;
  try {
    m.command = j.at("command").get<std::vector<std::string>>();
    m.inputs = read_digests(j.at("inputs"));
    m.seed = j.at("seed").get<std::uint64_t>();
    if (!j.at("budget_nodes").is_null()) m.budget_nodes = j.at("budget_nodes").get<std::int64_t>();
    m.exit_code = j.at("outcome").at("exit_code").get<int>();
    m.outcome = j.at("outcome").at("summary").get<std::string>();
    m.stdout_sha256 = j.at("stdout_sha256").get<std::string>();
    m.artifacts = read_digests(j.at("artifacts"));
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed manifest: ") + e.what());
  }
  return m;
}

}  // namespace dar::cli
