#pragma once

#include <array>
#include <cstddef>
#include <cstdio>
#include <string>
#include <sys/wait.h>

struct CliRun {
  int exit_code = -1;
  std::string out;
};

// Runs the command-line tool with the given argument string; captures stdout.
inline CliRun run_cli(const std::string& args, bool merge_stderr = false) {
  std::string cmd = std::string("\"") + QKNESER_CLI_PATH + "\" " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}
