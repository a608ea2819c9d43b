#pragma once

// Runs the built command-line tool and lists the shipped fixtures with the
// exit code each must produce under `report`.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>
#include <vector>

namespace cli {

struct Result {
  int exit_code = -1;
  std::string out;
};

// stdout only; stderr goes to /dev/null so diagnostics do not pollute the comparison.
inline Result run(const std::string& args) {
  const std::string command = std::string(HOPFREAL_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  std::size_t n = 0;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) r.out.append(buffer.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

inline std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Expectation {
  const char* file;
  int exit_code;
};

inline const std::vector<Expectation>& matrix() {
  static const std::vector<Expectation> rows = {
      {"trivial.yaml", 0},
      {"example_w.yaml", 0},
      {"triangular3.yaml", 0},
      {"grouplike_pair.yaml", 0},
      {"projection.yaml", 1},
      {"no_diag_pairs.yaml", 1},
      {"mutated_coalgebra.yaml", 1},
      {"invalid/bad_syntax.yaml", 2},
      {"invalid/dangling_name.yaml", 2},
      {"invalid/missing_x.yaml", 2},
  };
  return rows;
}

}  // namespace cli
