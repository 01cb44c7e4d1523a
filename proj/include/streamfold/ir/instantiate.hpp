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

#include <map>
#include <string>
#include <vector>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

struct SpecializationRequest {
  std::string index_value;
  std::map<std::string, std::string> bindings;  // extern -> non-indexed implementation
  std::vector<std::string> entry_points;        // empty selects the default roots
  std::string mangle_suffix;
};

struct Instantiation {
  Program program;                     // monomorphic, no externs
  std::vector<std::string> generated;  // names of specialized instances, in emission order
};

/// Specialize-attributed indexed functions that no other function calls, or
/// all uncalled specialize functions when nothing is indexed.
std::vector<std::string> default_entry_points(const Program& functorized);

/// Fixes the index, resolves every g-parameter and inlines eliminate
/// functions. Only instances reachable from the entry points are emitted.
Instantiation instantiate(const Program& functorized, const SpecializationRequest& request);

/// Runs functorization once, then each stage in order. Functions produced by
/// a stage become available as bindings to later stages. The result holds
/// the union of all stage outputs.
Instantiation specialize(const Program& program, const std::vector<SpecializationRequest>& stages);

}  // namespace streamfold::ir
