/*
   Copyright 2026 The cyclomac Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef CYCLOMAC_TOOLS_CLI_HPP
#define CYCLOMAC_TOOLS_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace cyclomac::cli {

enum ExitCode : int { kMatch = 0, kMismatch = 1, kInvalidInput = 2 };

/// Environment variable consulted for the default truncation order.
inline constexpr const char* kOrderEnv = "CYCLOMAC_ORDER";
inline constexpr std::size_t kDefaultOrder = 60;

struct RunConfig {
    std::string command;  // expand | closed-form | verify | examples | sweep
    long n = 1;
    unsigned k = 2;
    unsigned t = 1;
    std::size_t order = kDefaultOrder;
    bool strict = true;
    std::string q = "x";
    std::string format = "json";  // json | csv | text
    std::string output;           // empty: write to the given stream
};

/// Default order: $CYCLOMAC_ORDER if set and valid, else 60.
std::size_t default_order();

/// Executes one command and writes its report to `out` (or config.output).
/// Diagnostics go to `err`. Returns an ExitCode.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv into a RunConfig and runs it.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclomac::cli

#endif  // CYCLOMAC_TOOLS_CLI_HPP
