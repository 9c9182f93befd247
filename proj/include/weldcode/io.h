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


#ifndef WELDCODE_IO_H
#define WELDCODE_IO_H

#include <string>

#include "weldcode/css.h"
#include "weldcode/energy.h"

namespace weldcode {

/// "n=<n> k=<k>" header, then "X: op", "Z: op", "LX: op", "LZ: op" lines.
/// The i-th LX line pairs with the i-th LZ line. Region metadata is not
/// carried by the text format.
std::string code_to_text(const CssCode &code);
CssCode code_from_text(const std::string &text);

/// Same content as the text format, plus "flat_regions" when present.
std::string code_to_json(const CssCode &code);
CssCode code_from_json(const std::string &text);

/// Picks JSON when the first non-blank character is '{'.
CssCode parse_code(const std::string &text);
CssCode read_code_file(const std::string &path);
std::string read_file(const std::string &path);
void write_file(const std::string &path, const std::string &contents);

std::string barrier_to_json(const BarrierResult &result);

}  // namespace weldcode

#endif
