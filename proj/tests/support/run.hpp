#pragma once

// Runs the chaoscert binary (CHAOSCERT_CLI) and captures stdout and the exit status.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdlib>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace run {

struct Result {
  int status;
  std::string out;
};

// The environment wins over the path baked in at build time.
inline std::string cli_path() {
  if (const char* p = std::getenv("CHAOSCERT_CLI")) return p;
#ifdef CHAOSCERT_CLI
  return CHAOSCERT_CLI;
#else
  throw std::runtime_error("CHAOSCERT_CLI is not set");
#endif
}

// `env` is prefixed verbatim, e.g. "CHAOSCERT_CONFIG=/tmp/x.conf".
inline Result cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = (env.empty() ? "" : env + " ") + cli_path() + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int st = pclose(pipe);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("chaoscert_" + name + "_" + std::to_string(getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace run
