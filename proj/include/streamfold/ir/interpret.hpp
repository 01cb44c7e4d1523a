/*
   Copyright 2026 The Streamfold Authors

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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

/// Call-by-value evaluation with wrapping 64-bit arithmetic. `index` is
/// required when the entry is indexed. Externs resolve through `bindings` to
/// non-indexed functions. Functorized programs are accepted too.
std::uint64_t interpret(const Program& program, const std::string& entry,
                        const std::vector<std::uint64_t>& args,
                        const std::optional<std::string>& index = std::nullopt,
                        const std::map<std::string, std::string>& bindings = {});

}  // namespace streamfold::ir
