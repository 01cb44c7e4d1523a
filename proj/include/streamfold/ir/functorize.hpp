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
#include <vector>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

/// Specialized dependencies of an indexed function: the indexed specialize
/// functions and externs it reaches, looking through eliminate functions.
/// Ordered by first occurrence in a depth-first walk of the body.
std::vector<std::string> specialized_dependencies(const Program& program, const std::string& name);

/// Rewrites every indexed function `f` into `mk_f`, which takes its
/// specialized dependencies as leading g-parameters. Non-indexed functions
/// and externs are kept unchanged.
Program functorize(const Program& program);

}  // namespace streamfold::ir
