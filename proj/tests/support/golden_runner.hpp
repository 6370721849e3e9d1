#pragma once

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace vucert::golden {

struct Case {
  std::string name;
  int expected_exit;
  std::string args;
};

struct Outcome {
  std::string name;
  bool ok;
  std::string detail;
};

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline std::vector<Case> load_manifest(const std::string& dir) {
  std::ifstream in(dir + "/manifest.txt");
  std::vector<Case> cases;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    auto p1 = line.find('|');
    auto p2 = line.find('|', p1 + 1);
    if (p1 == std::string::npos || p2 == std::string::npos) continue;
    cases.push_back(
        Case{line.substr(0, p1), std::stoi(line.substr(p1 + 1, p2 - p1 - 1)), line.substr(p2 + 1)});
  }
  return cases;
}

/// Runs every manifest case against the binary, comparing stdout bytes and
/// exit codes.
inline std::vector<Outcome> run_corpus(const std::string& binary, const std::string& dir) {
  std::vector<Outcome> outcomes;
  for (const Case& c : load_manifest(dir)) {
    std::string args = c.args;
    // @DIR@ points at the golden directory (for representation files)
    for (std::size_t at = args.find("@DIR@"); at != std::string::npos;
         at = args.find("@DIR@"))
      args.replace(at, 5, dir);
    std::string command = binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    if (!pipe) {
      outcomes.push_back({c.name, false, "popen failed"});
      continue;
    }
    std::string output;
    char buffer[4096];
    std::size_t got;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) output.append(buffer, got);
    int status = pclose(pipe);
    int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::string expected = slurp(dir + "/" + c.name + ".out");
    if (exit_code != c.expected_exit) {
      outcomes.push_back({c.name, false,
                          "exit " + std::to_string(exit_code) + " expected " +
                              std::to_string(c.expected_exit)});
    } else if (output != expected) {
      outcomes.push_back({c.name, false, "stdout differs from golden bytes"});
    } else {
      outcomes.push_back({c.name, true, ""});
    }
  }
  return outcomes;
}

}  // namespace vucert::golden
