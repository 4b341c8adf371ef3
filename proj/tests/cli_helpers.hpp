#pragma once

#include <cstdio>
#include <string>
#include <sys/wait.h>
#include <vector>

// Shared between the unit tests and the acceptance runner; no test framework
// dependencies here.

inline std::string fixture_path(const std::string& name) {
  return std::string(ATG_FIXTURE_DIR) + "/" + name;
}

struct CliResult {
  int exit_code = -1;
  std::string output;  // stdout only
};

/// Run the bundled binary with the given argument string; stderr is dropped.
inline CliResult run_cli(const std::string& args) {
  CliResult result;
  std::string command = std::string(ATG_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
    result.output.append(buffer, got);
  int status = pclose(pipe);
  if (WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
  return result;
}

inline std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char c : text) {
    if (c == '\n') {
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) lines.push_back(current);
  return lines;
}

inline std::string first_line(const std::string& text) {
  auto lines = split_lines(text);
  return lines.empty() ? std::string() : lines.front();
}
