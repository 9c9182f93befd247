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


#ifndef WELDCODE_ERRORS_H
#define WELDCODE_ERRORS_H

#include <stdexcept>
#include <string>
#include <vector>

namespace weldcode {

/// Malformed input or a violated precondition. The CLI maps this to exit 1.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(const std::string &what) : std::runtime_error(what) {}
};

/// An instance exceeds a search cap. The CLI maps this to exit 2.
class FeasibilityError : public std::runtime_error {
   public:
    explicit FeasibilityError(const std::string &what) : std::runtime_error(what) {}
};

/// A weld precondition failed. `check` names the failed check and `witness`
/// holds the offending generator indices (side-local).
class WeldPreconditionError : public ValidationError {
   public:
    WeldPreconditionError(std::string check, int side, std::vector<size_t> witness, const std::string &what)
        : ValidationError(what), check(std::move(check)), side(side), witness(std::move(witness)) {}

    std::string check;
    int side;
    std::vector<size_t> witness;
};

class SelfWeldError : public ValidationError {
   public:
    explicit SelfWeldError(const std::string &what) : ValidationError(what) {}
};

}  // namespace weldcode

#endif
