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

#include "streamfold/ir/emit.hpp"

#include <cstdint>

namespace streamfold::ir {

namespace {

void emit_to(std::string& out, const ExprPtr& e) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          out += std::to_string(static_cast<std::int64_t>(x.value));
        } else if constexpr (std::is_same_v<T, Var>) {
          out += x.name;
        } else if constexpr (std::is_same_v<T, Let>) {
          out += "(let " + x.name + " ";
          emit_to(out, x.bound);
          out += ' ';
          emit_to(out, x.body);
          out += ')';
        } else if constexpr (std::is_same_v<T, Prim>) {
          out += '(';
          out += to_string(x.op);
          out += ' ';
          emit_to(out, x.lhs);
          out += ' ';
          emit_to(out, x.rhs);
          out += ')';
        } else if constexpr (std::is_same_v<T, IfZero>) {
          out += "(ifz ";
          emit_to(out, x.cond);
          out += ' ';
          emit_to(out, x.then_expr);
          out += ' ';
          emit_to(out, x.else_expr);
          out += ')';
        } else if constexpr (std::is_same_v<T, Call>) {
          out += "(call " + x.callee;
          if (x.pass_index) out += " idx";
          if (x.pass_index && !x.fn_args.empty()) {
            out += " [";
            for (std::size_t i = 0; i < x.fn_args.size(); ++i) {
              if (i) out += ' ';
              out += x.fn_args[i];
            }
            out += ']';
          }
          for (const auto& a : x.args) {
            out += ' ';
            emit_to(out, a);
          }
          out += ')';
        } else {
          out += "(match-idx";
          for (const auto& arm : x.arms) {
            out += " (" + arm.symbol + " ";
            emit_to(out, arm.body);
            out += ')';
          }
          out += ')';
        }
      },
      e->node);
}

}  // namespace

std::string emit(const ExprPtr& expr) {
  std::string out;
  emit_to(out, expr);
  return out;
}

std::string emit(const Program& program) {
  std::string out = "(index";
  for (const auto& s : program.index_symbols) out += " " + s;
  out += ")\n";
  for (const auto& e : program.externs)
    out += "(extern " + e.name + " [" + to_string(e.attr) + "] " + std::to_string(e.arity) + ")\n";
  for (const auto& f : program.functions) {
    out += "(fn " + f.name + " [" + to_string(f.attr) + "] (";
    std::vector<std::string> parts;
    if (f.indexed) {
      std::string head = kIndexParam;
      if (!f.fn_params.empty()) {
        head += " [";
        for (std::size_t i = 0; i < f.fn_params.size(); ++i) {
          if (i) head += ' ';
          head += f.fn_params[i];
        }
        head += ']';
      }
      parts.push_back(head);
    }
    parts.insert(parts.end(), f.params.begin(), f.params.end());
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (i) out += ' ';
      out += parts[i];
    }
    out += ") ";
    emit_to(out, f.body);
    out += ")\n";
  }
  return out;
}

}  // namespace streamfold::ir
