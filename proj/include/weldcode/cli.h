// Copyright 2026 The Weldcode Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef WELDCODE_CLI_H
#define WELDCODE_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace weldcode {

struct VerifyCase {
    std::string name;
    bool ok;
    std::string detail;
};

std::string default_golden_dir();

/// Runs the named reference cases against the golden files in `golden_dir`.
std::vector<VerifyCase> verify_reference_examples(const std::string &golden_dir = default_golden_dir());

/// Entry point of the weldcode tool. Returns the process exit status:
/// 0 on success, 1 for invalid input or a failed check, 2 when a search
/// would exceed its cap.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace weldcode

#endif
