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

#include "streamfold/ir/functorize.hpp"

#include <algorithm>
#include <map>

#include "streamfold/ir/call_graph.hpp"
#include "streamfold/ir/parser.hpp"

namespace streamfold::ir {

namespace {

void add_unique(std::vector<std::string>& v, const std::string& n) {
  if (std::find(v.begin(), v.end(), n) == v.end()) v.push_back(n);
}

class Functorizer {
 public:
  explicit Functorizer(const Program& p) : p_(p) {}

  const std::vector<std::string>& deps(const std::string& name) {
    if (auto it = memo_.find(name); it != memo_.end()) return it->second;
    std::vector<std::string> out;
    walk(p_.find_function(name)->body, out);
    return memo_[name] = std::move(out);
  }

  ExprPtr rewrite(const ExprPtr& e) {
    return std::visit(
        [&](const auto& x) -> ExprPtr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, Var>) {
            return e;
          } else if constexpr (std::is_same_v<T, Let>) {
            return make_let(x.name, rewrite(x.bound), rewrite(x.body));
          } else if constexpr (std::is_same_v<T, Prim>) {
            return make_prim(x.op, rewrite(x.lhs), rewrite(x.rhs));
          } else if constexpr (std::is_same_v<T, IfZero>) {
            return make_ifz(rewrite(x.cond), rewrite(x.then_expr), rewrite(x.else_expr));
          } else if constexpr (std::is_same_v<T, Call>) {
            std::vector<ExprPtr> args;
            for (const auto& a : x.args) args.push_back(rewrite(a));
            if (!x.pass_index) return make_call(x.callee, false, {}, std::move(args));
            const Function* f = p_.find_function(x.callee);
            if (f && f->attr == Attribute::Eliminate)
              return make_call(kFunctorPrefix + x.callee, true, deps(x.callee), std::move(args));
            return make_call(x.callee, false, {}, std::move(args));
          } else {
            std::vector<MatchArm> arms;
            for (const auto& arm : x.arms) arms.push_back({arm.symbol, rewrite(arm.body)});
            return make_match(std::move(arms));
          }
        },
        e->node);
  }

 private:
  const Program& p_;
  std::map<std::string, std::vector<std::string>> memo_;

  void walk(const ExprPtr& e, std::vector<std::string>& out) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Let>) {
            walk(x.bound, out);
            walk(x.body, out);
          } else if constexpr (std::is_same_v<T, Prim>) {
            walk(x.lhs, out);
            walk(x.rhs, out);
          } else if constexpr (std::is_same_v<T, IfZero>) {
            walk(x.cond, out);
            walk(x.then_expr, out);
            walk(x.else_expr, out);
          } else if constexpr (std::is_same_v<T, Call>) {
            if (x.pass_index) {
              const Function* f = p_.find_function(x.callee);
              if (f && f->attr == Attribute::Eliminate) {
                for (const auto& d : deps(x.callee)) add_unique(out, d);
              } else {
                add_unique(out, x.callee);
              }
            }
            for (const auto& a : x.args) walk(a, out);
          } else if constexpr (std::is_same_v<T, MatchIdx>) {
            for (const auto& arm : x.arms) walk(arm.body, out);
          }
        },
        e->node);
  }
};

void require_source_program(const Program& p) {
  for (const auto& f : p.functions)
    if (!f.fn_params.empty())
      throw IrError(ErrorKind::InvalidRequest, "'" + f.name + "' is already functorized");
}

}  // namespace

std::vector<std::string> specialized_dependencies(const Program& program, const std::string& name) {
  const Function* f = program.find_function(name);
  if (!f || !f->indexed)
    throw IrError(ErrorKind::InvalidRequest, "'" + name + "' is not an indexed function");
  build_call_graph(program);
  return Functorizer(program).deps(name);
}

Program functorize(const Program& program) {
  validate(program);
  require_source_program(program);
  build_call_graph(program);
  for (const auto& f : program.functions)
    if (f.indexed && program.has_name(kFunctorPrefix + f.name))
      throw IrError(ErrorKind::NameCollision,
                    "'" + std::string(kFunctorPrefix) + f.name + "' already exists");

  Functorizer fz(program);
  Program out;
  out.index_symbols = program.index_symbols;
  out.externs = program.externs;
  for (const auto& f : program.functions) {
    if (!f.indexed) {
      out.functions.push_back(f);
      continue;
    }
    Function g;
    g.name = kFunctorPrefix + f.name;
    g.attr = f.attr;
    g.indexed = true;
    g.fn_params = fz.deps(f.name);
    g.params = f.params;
    g.body = fz.rewrite(f.body);
    out.functions.push_back(std::move(g));
  }
  validate(out);
  return out;
}

}  // namespace streamfold::ir
