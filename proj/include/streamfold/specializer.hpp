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

#include "streamfold/ir/ast.hpp"
#include "streamfold/ir/call_graph.hpp"
#include "streamfold/ir/emit.hpp"
#include "streamfold/ir/functorize.hpp"
#include "streamfold/ir/instantiate.hpp"
#include "streamfold/ir/interpret.hpp"
#include "streamfold/ir/parser.hpp"
