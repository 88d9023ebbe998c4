// Copyright 2026 The boxdm Authors
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

#ifndef BOXDM_TOOLS_CANONICAL_JSON_HPP_
#define BOXDM_TOOLS_CANONICAL_JSON_HPP_

#include <string>

#include "json.hpp"

namespace boxdm::cli {

using Json = nlohmann::ordered_json;

/// Shortest text that survives the writer/parser round trip: 17 significant
/// digits in general notation, "." decimal point regardless of locale.
/// Negative zero prints as "0".
std::string format_double(double v);

/// Two-space indented dump with keys in insertion order and floats through
/// format_double. Non-finite floats become null. parse(dump(x)) re-dumps to
/// the same bytes.
std::string dump_canonical(const Json& doc);

/// One "path,value" line per leaf, paths like a.b[2].c.
std::string flatten_csv(const Json& doc);

}  // namespace boxdm::cli

#endif  // BOXDM_TOOLS_CANONICAL_JSON_HPP_
