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

#include <string_view>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

/// Parses and validates a whole program. Accepts both source programs and
/// the functorized form (g-parameter groups in brackets). Throws IrError.
Program parse_program(std::string_view text);

/// Well-formedness checks shared by the parser and the transformation
/// passes: unique names, scoping, arities, index matches, `idx` placement.
void validate(const Program& program);

}  // namespace streamfold::ir
