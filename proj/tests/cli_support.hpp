// Copyright 2026 The sabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the command-line tool as a subprocess.

#pragma once

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "sabc/io.hpp"

namespace sabc::testing {

inline const std::string cli_path = SABC_CLI_PATH;
inline const std::filesystem::path data_dir = SABC_TEST_DATA_DIR;

struct CliResult {
  int status = -1;
  std::string out;
};

/// `args` is appended verbatim to the tool path; stderr is discarded.
inline CliResult run_cli(const std::string& args) {
  const std::string cmd = "'" + cli_path + "' " + args + " 2>/dev/null";
  CliResult res;
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) return res;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) res.out.append(buf, got);
  const int raw = ::pclose(pipe);
  res.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return res;
}

inline std::string data_file(const std::string& name) {
  return "'" + (data_dir / name).string() + "'";
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Fresh scratch directory under the system temp path.
inline std::filesystem::path scratch_dir(const std::string& tag) {
  auto dir = std::filesystem::temp_directory_path() /
             ("sabc-" + tag + "-" + std::to_string(::getpid()));
  std::filesystem::create_directories(dir);
  return dir;
}

/// Report agrees with an expected golden: exact on flags, counts and class,
/// within tol on the angle arrays.
inline bool matches_golden(const io::json& got, const io::json& want, double tol) {
  for (const char* key : {"selfadjoint", "rank_a", "rank_b", "class", "r"}) {
    if (!got.contains(key) || got[key] != want[key]) return false;
  }
  for (const char* key : {"sines", "cosines"}) {
    if (!got.contains(key) || got[key].size() != want[key].size()) return false;
    for (std::size_t i = 0; i < want[key].size(); ++i) {
      if (std::abs(got[key][i].get<double>() - want[key][i].get<double>()) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace sabc::testing
