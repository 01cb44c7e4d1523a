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

#include "streamfold/ir/interpret.hpp"

#include <algorithm>

#include "streamfold/ir/parser.hpp"

namespace streamfold::ir {

namespace {

class Interpreter {
 public:
  Interpreter(const Program& p, const std::map<std::string, std::string>& bindings)
      : p_(p), bindings_(bindings), depth_limit_(p.functions.size() + p.externs.size() + 1) {}

  std::uint64_t call(const Function& f, const std::vector<std::uint64_t>& args,
                     const std::optional<std::string>& index) {
    if (args.size() != f.params.size())
      throw IrError(ErrorKind::ArityMismatch, "'" + f.name + "' takes " +
                                                  std::to_string(f.params.size()) +
                                                  " arguments, given " + std::to_string(args.size()));
    // In an acyclic program call depth never exceeds the number of nodes.
    if (++depth_ > depth_limit_)
      throw IrError(ErrorKind::CycleDetected, "recursion through '" + f.name + "'");
    Frame frame{&f, index, {}};
    for (std::size_t i = 0; i < args.size(); ++i) frame.env.emplace_back(f.params[i], args[i]);
    std::uint64_t v = eval(f.body, frame);
    --depth_;
    return v;
  }

 private:
  struct Frame {
    const Function* fn;
    std::optional<std::string> index;
    std::vector<std::pair<std::string, std::uint64_t>> env;
  };

  const Program& p_;
  const std::map<std::string, std::string>& bindings_;
  std::size_t depth_ = 0;
  std::size_t depth_limit_;

  const Function& bound_impl(const std::string& ext) const {
    auto it = bindings_.find(ext);
    if (it == bindings_.end())
      throw IrError(ErrorKind::ExternWithoutBody, "extern '" + ext + "' has no binding");
    const Function* f = p_.find_function(it->second);
    if (!f || f->indexed)
      throw IrError(ErrorKind::InvalidRequest,
                    "binding for '" + ext + "' must name a non-indexed function");
    return *f;
  }

  std::uint64_t dispatch(const Call& c, const std::vector<std::uint64_t>& args, Frame& fr) {
    const bool g_param = std::find(fr.fn->fn_params.begin(), fr.fn->fn_params.end(), c.callee) !=
                         fr.fn->fn_params.end();
    if (!g_param) {
      if (const Function* f = p_.find_function(c.callee))
        return call(*f, args, f->indexed ? fr.index : std::nullopt);
    }
    if (p_.find_extern(c.callee)) return call(bound_impl(c.callee), args, std::nullopt);
    if (const Function* f = p_.find_function(kFunctorPrefix + c.callee))
      return call(*f, args, fr.index);
    throw IrError(ErrorKind::UnboundCallee, "no function named '" + c.callee + "'");
  }

  std::uint64_t eval(const ExprPtr& e, Frame& fr) {
    return std::visit(
        [&](const auto& x) -> std::uint64_t {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntLit>) {
            return x.value;
          } else if constexpr (std::is_same_v<T, Var>) {
            for (auto it = fr.env.rbegin(); it != fr.env.rend(); ++it)
              if (it->first == x.name) return it->second;
            throw IrError(ErrorKind::UnboundName, "unbound variable '" + x.name + "'");
          } else if constexpr (std::is_same_v<T, Let>) {
            std::uint64_t v = eval(x.bound, fr);
            fr.env.emplace_back(x.name, v);
            std::uint64_t r = eval(x.body, fr);
            fr.env.pop_back();
            return r;
          } else if constexpr (std::is_same_v<T, Prim>) {
            std::uint64_t a = eval(x.lhs, fr);
            std::uint64_t b = eval(x.rhs, fr);
            switch (x.op) {
              case PrimOp::Add: return a + b;
              case PrimOp::Sub: return a - b;
              case PrimOp::Mul: return a * b;
            }
            return 0;
          } else if constexpr (std::is_same_v<T, IfZero>) {
            return eval(x.cond, fr) == 0 ? eval(x.then_expr, fr) : eval(x.else_expr, fr);
          } else if constexpr (std::is_same_v<T, Call>) {
            std::vector<std::uint64_t> args;
            args.reserve(x.args.size());
            for (const auto& a : x.args) args.push_back(eval(a, fr));
            return dispatch(x, args, fr);
          } else {
            if (!fr.index) throw IrError(ErrorKind::ArityMismatch, "no index value in scope");
            for (const auto& arm : x.arms)
              if (arm.symbol == *fr.index) return eval(arm.body, fr);
            throw IrError(ErrorKind::NonTotalIndexMatch, "no arm for '" + *fr.index + "'");
          }
        },
        e->node);
  }
};

}  // namespace

std::uint64_t interpret(const Program& program, const std::string& entry,
                        const std::vector<std::uint64_t>& args,
                        const std::optional<std::string>& index,
                        const std::map<std::string, std::string>& bindings) {
  validate(program);
  const auto& syms = program.index_symbols;
  if (index && std::find(syms.begin(), syms.end(), *index) == syms.end())
    throw IrError(ErrorKind::UnknownIndexSymbol, "unknown index value '" + *index + "'");
  Interpreter interp(program, bindings);
  if (const Function* f = program.find_function(entry)) {
    if (f->indexed && !index)
      throw IrError(ErrorKind::ArityMismatch, "'" + entry + "' needs an index value");
    return interp.call(*f, args, f->indexed ? index : std::nullopt);
  }
  if (program.find_extern(entry)) {
    auto it = bindings.find(entry);
    const Function* impl = it == bindings.end() ? nullptr : program.find_function(it->second);
    if (!impl || impl->indexed)
      throw IrError(ErrorKind::ExternWithoutBody, "extern '" + entry + "' has no binding");
    return interp.call(*impl, args, std::nullopt);
  }
  throw IrError(ErrorKind::UnboundName, "no function named '" + entry + "'");
}

}  // namespace streamfold::ir
