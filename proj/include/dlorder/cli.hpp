// Copyright 2026 The dlorder Authors
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

// The `dlorder` command line. Exit codes: 0 yes/ok, 1 no, 2 parse or
// validation error, 3 usage or model error, 4 step cap exceeded.

#ifndef DLORDER_CLI_HPP_
#define DLORDER_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace dlorder::cli {

inline constexpr int kYes = 0;
inline constexpr int kNo = 1;
inline constexpr int kParseError = 2;
inline constexpr int kUsageError = 3;
inline constexpr int kStepCap = 4;

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dlorder::cli

#endif  // DLORDER_CLI_HPP_
