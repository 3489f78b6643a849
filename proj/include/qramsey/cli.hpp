// Copyright 2026 The qramsey Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qramsey::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,      // bad input or a violated precondition
  kSearchFail = 3  // a numerical search gave up or failed verification
};

/** Runs one command line (without the program name). */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qramsey::cli
