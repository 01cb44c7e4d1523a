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

// Random acyclic IR programs and independent oracles for specializer output.

#include <map>
#include <random>
#include <string>
#include <vector>

#include "properties.hpp"
#include "streamfold/specializer.hpp"

namespace sftest {

struct GenLimits {
  std::size_t max_functions = 12;
  std::size_t max_symbols = 3;
  std::size_t max_depth = 5;
  std::size_t max_calls_per_body = 2;
};

struct GeneratedProgram {
  streamfold::ir::Program program;
  std::map<std::string, std::string> bindings;  // every extern is bound
  std::vector<std::string> entries;             // every specialize function
};

GeneratedProgram random_program(Rng& rng, const GenLimits& limits = {});

/// The original call graph with match-idx reduced for `index`, eliminated
/// functions contracted and externs replaced by their bindings, restricted to
/// what the entries reach. Compared against the specialized call graph after
/// mapping mangled names back.
CheckResult check_shape(const streamfold::ir::Program& original,
                        const streamfold::ir::SpecializationRequest& request,
                        const streamfold::ir::Program& specialized);

/// No eliminated names, no idx, no match-idx, no externs, callees first.
CheckResult check_hygiene(const streamfold::ir::Program& original,
                          const streamfold::ir::Program& specialized);

/// Interpreter agreement between the original program, its functorized form
/// and every specialization, over all index values and `vectors` argument
/// vectors per entry.
CheckResult check_semantics(const GeneratedProgram& g, std::size_t vectors, Rng& rng);

}  // namespace sftest
