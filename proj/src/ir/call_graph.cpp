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

#include "streamfold/ir/call_graph.hpp"

#include <algorithm>

namespace streamfold::ir {

namespace {

void collect_callees(const ExprPtr& e, std::vector<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Let>) {
          collect_callees(x.bound, out);
          collect_callees(x.body, out);
        } else if constexpr (std::is_same_v<T, Prim>) {
          collect_callees(x.lhs, out);
          collect_callees(x.rhs, out);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          collect_callees(x.cond, out);
          collect_callees(x.then_expr, out);
          collect_callees(x.else_expr, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          out.push_back(x.callee);
          for (const auto& a : x.args) collect_callees(a, out);
        } else if constexpr (std::is_same_v<T, MatchIdx>) {
          for (const auto& arm : x.arms) collect_callees(arm.body, out);
        }
      },
      e->node);
}

}  // namespace

CallGraph build_call_graph(const Program& program) {
  CallGraph g;
  for (const auto& e : program.externs) {
    g.nodes.push_back(e.name);
    g.callees[e.name];
  }
  for (const auto& f : program.functions) {
    g.nodes.push_back(f.name);
    auto& out = g.callees[f.name];
    std::vector<std::string> raw;
    collect_callees(f.body, raw);
    for (auto name : raw) {
      // A g-parameter call stands for the node it names.
      if (!program.has_name(name) && program.has_name(kFunctorPrefix + name))
        name = kFunctorPrefix + name;
      if (!program.has_name(name)) continue;
      if (std::find(out.begin(), out.end(), name) != out.end()) continue;
      out.push_back(name);
      g.edges.emplace_back(f.name, name);
    }
  }

  enum Mark { White, Grey, Black };
  std::map<std::string, Mark> mark;
  std::vector<std::string> stack;
  auto visit = [&](auto&& self, const std::string& n) -> void {
    mark[n] = Grey;
    stack.push_back(n);
    for (const auto& c : g.callees[n]) {
      if (mark[c] == Grey) {
        auto it = std::find(stack.begin(), stack.end(), c);
        std::string path;
        for (; it != stack.end(); ++it) path += *it + " -> ";
        throw IrError(ErrorKind::CycleDetected, path + c);
      }
      if (mark[c] == White) self(self, c);
    }
    stack.pop_back();
    mark[n] = Black;
    g.topological_order.push_back(n);
  };
  for (const auto& n : g.nodes)
    if (mark[n] == White) visit(visit, n);
  return g;
}

}  // namespace streamfold::ir
