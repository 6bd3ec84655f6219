// Copyright 2026 The bipotkit Authors
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

#ifndef BIPOTKIT_CLI_COMMANDS_H_
#define BIPOTKIT_CLI_COMMANDS_H_

#include <ostream>
#include <string>
#include <vector>

namespace bipotkit::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;  // bad flags, unreadable or malformed input
inline constexpr int kExitCheckFailed = 2;
inline constexpr int kExitUnsupported = 3;  // analytic mode on a tabulated cover

// Runs `bipotkit <args...>`; args excludes the program name.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bipotkit::cli

#endif  // BIPOTKIT_CLI_COMMANDS_H_
