/*
   Copyright 2026 The grothmob Authors

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

#ifndef GROTHMOB_TOOLS_CLI_HPP
#define GROTHMOB_TOOLS_CLI_HPP

#include <string>
#include <vector>

namespace grothmob::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_domain_error = 1;
inline constexpr int exit_usage_error = 2;

struct Outcome {
    int status = exit_ok;
    std::string out;
    std::string err;
};

/// Runs one command line (without the program name) and captures its output.
Outcome run(const std::vector<std::string>& args);

} // namespace grothmob::cli

#endif
