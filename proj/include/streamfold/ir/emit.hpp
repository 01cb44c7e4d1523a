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

#include <string>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

/// Canonical text: one form per line, single spaces, `(index ...)` first,
/// then externs, then functions in program order. Integers print as signed
/// 64-bit values. `parse_program(emit(p))` reproduces `p`.
std::string emit(const Program& program);
std::string emit(const ExprPtr& expr);

}  // namespace streamfold::ir
