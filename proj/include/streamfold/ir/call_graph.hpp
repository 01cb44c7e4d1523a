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
#include <utility>
#include <vector>

#include "streamfold/ir/ast.hpp"

namespace streamfold::ir {

struct CallGraph {
  std::vector<std::string> nodes;  // externs, then functions, in declaration order
  std::vector<std::pair<std::string, std::string>> edges;  // caller -> callee, deduplicated
  std::map<std::string, std::vector<std::string>> callees;
  std::vector<std::string> topological_order;  // every callee before its callers
};

/// Syntactic call graph. Throws IrError(CycleDetected) naming the cycle.
CallGraph build_call_graph(const Program& program);

}  // namespace streamfold::ir
