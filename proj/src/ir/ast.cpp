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

#include "streamfold/ir/ast.hpp"

#include <algorithm>

namespace streamfold::ir {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::UnknownIndexSymbol: return "UnknownIndexSymbol";
    case ErrorKind::NonTotalIndexMatch: return "NonTotalIndexMatch";
    case ErrorKind::UnboundName: return "UnboundName";
    case ErrorKind::UnboundCallee: return "UnboundCallee";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::CycleDetected: return "CycleDetected";
    case ErrorKind::UnboundExtern: return "UnboundExtern";
    case ErrorKind::NameCollision: return "NameCollision";
    case ErrorKind::ExternWithoutBody: return "ExternWithoutBody";
    case ErrorKind::InvalidRequest: return "InvalidRequest";
  }
  return "UnknownError";
}

namespace {

std::string format_error(ErrorKind kind, const std::string& detail, int line, int column) {
  std::string msg = to_string(kind);
  if (line > 0) msg += " at " + std::to_string(line) + ":" + std::to_string(column);
  return msg + ": " + detail;
}

}  // namespace

IrError::IrError(ErrorKind kind, const std::string& detail, int line, int column)
    : std::runtime_error(format_error(kind, detail, line, column)),
      kind_(kind),
      line_(line),
      column_(column) {}

const char* to_string(Attribute attr) {
  return attr == Attribute::Specialize ? "specialize" : "eliminate";
}

const char* to_string(PrimOp op) {
  switch (op) {
    case PrimOp::Add: return "+";
    case PrimOp::Sub: return "-";
    case PrimOp::Mul: return "*";
  }
  return "?";
}

ExprPtr make_int(std::uint64_t value) { return std::make_shared<const Expr>(Expr{IntLit{value}}); }

ExprPtr make_var(std::string name) {
  return std::make_shared<const Expr>(Expr{Var{std::move(name)}});
}

ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body) {
  return std::make_shared<const Expr>(Expr{Let{std::move(name), std::move(bound), std::move(body)}});
}

ExprPtr make_prim(PrimOp op, ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(Expr{Prim{op, std::move(lhs), std::move(rhs)}});
}

ExprPtr make_ifz(ExprPtr cond, ExprPtr then_expr, ExprPtr else_expr) {
  return std::make_shared<const Expr>(
      Expr{IfZero{std::move(cond), std::move(then_expr), std::move(else_expr)}});
}

ExprPtr make_call(std::string callee, bool pass_index, std::vector<std::string> fn_args,
                  std::vector<ExprPtr> args) {
  return std::make_shared<const Expr>(
      Expr{Call{std::move(callee), pass_index, std::move(fn_args), std::move(args)}});
}

ExprPtr make_match(std::vector<MatchArm> arms) {
  return std::make_shared<const Expr>(Expr{MatchIdx{std::move(arms)}});
}

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a == b) return true;
  if (!a || !b || a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& x) -> bool {
        using T = std::decay_t<decltype(x)>;
        const auto& y = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return x.value == y.value;
        } else if constexpr (std::is_same_v<T, Var>) {
          return x.name == y.name;
        } else if constexpr (std::is_same_v<T, Let>) {
          return x.name == y.name && equal(x.bound, y.bound) && equal(x.body, y.body);
        } else if constexpr (std::is_same_v<T, Prim>) {
          return x.op == y.op && equal(x.lhs, y.lhs) && equal(x.rhs, y.rhs);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return equal(x.cond, y.cond) && equal(x.then_expr, y.then_expr) &&
                 equal(x.else_expr, y.else_expr);
        } else if constexpr (std::is_same_v<T, Call>) {
          if (x.callee != y.callee || x.pass_index != y.pass_index || x.fn_args != y.fn_args ||
              x.args.size() != y.args.size())
            return false;
          for (std::size_t i = 0; i < x.args.size(); ++i)
            if (!equal(x.args[i], y.args[i])) return false;
          return true;
        } else {
          if (x.arms.size() != y.arms.size()) return false;
          for (std::size_t i = 0; i < x.arms.size(); ++i)
            if (x.arms[i].symbol != y.arms[i].symbol || !equal(x.arms[i].body, y.arms[i].body))
              return false;
          return true;
        }
      },
      a->node);
}

const Function* Program::find_function(const std::string& name) const {
  auto it = std::find_if(functions.begin(), functions.end(),
                         [&](const Function& f) { return f.name == name; });
  return it == functions.end() ? nullptr : &*it;
}

const Extern* Program::find_extern(const std::string& name) const {
  auto it = std::find_if(externs.begin(), externs.end(),
                         [&](const Extern& e) { return e.name == name; });
  return it == externs.end() ? nullptr : &*it;
}

bool Program::has_name(const std::string& name) const {
  return find_function(name) != nullptr || find_extern(name) != nullptr;
}

bool equal(const Function& a, const Function& b) {
  return a.name == b.name && a.attr == b.attr && a.indexed == b.indexed &&
         a.fn_params == b.fn_params && a.params == b.params && equal(a.body, b.body);
}

bool equal(const Program& a, const Program& b) {
  if (a.index_symbols != b.index_symbols || a.externs.size() != b.externs.size() ||
      a.functions.size() != b.functions.size())
    return false;
  for (std::size_t i = 0; i < a.externs.size(); ++i) {
    const auto& x = a.externs[i];
    const auto& y = b.externs[i];
    if (x.name != y.name || x.attr != y.attr || x.arity != y.arity) return false;
  }
  for (std::size_t i = 0; i < a.functions.size(); ++i)
    if (!equal(a.functions[i], b.functions[i])) return false;
  return true;
}

namespace {

void collect_free(const ExprPtr& e, std::vector<std::string>& bound, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Var>) {
          if (std::find(bound.begin(), bound.end(), x.name) == bound.end()) out.insert(x.name);
        } else if constexpr (std::is_same_v<T, Let>) {
          collect_free(x.bound, bound, out);
          bound.push_back(x.name);
          collect_free(x.body, bound, out);
          bound.pop_back();
        } else if constexpr (std::is_same_v<T, Prim>) {
          collect_free(x.lhs, bound, out);
          collect_free(x.rhs, bound, out);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          collect_free(x.cond, bound, out);
          collect_free(x.then_expr, bound, out);
          collect_free(x.else_expr, bound, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          for (const auto& a : x.args) collect_free(a, bound, out);
        } else if constexpr (std::is_same_v<T, MatchIdx>) {
          for (const auto& arm : x.arms) collect_free(arm.body, bound, out);
        }
      },
      e->node);
}

using Mapping = std::vector<std::pair<std::string, ExprPtr>>;

const ExprPtr* lookup(const Mapping& m, const std::string& name) {
  for (const auto& [k, v] : m)
    if (k == name) return &v;
  return nullptr;
}

ExprPtr subst(const ExprPtr& e, const Mapping& m) {
  if (m.empty()) return e;
  return std::visit(
      [&](const auto& x) -> ExprPtr {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntLit>) {
          return e;
        } else if constexpr (std::is_same_v<T, Var>) {
          const ExprPtr* r = lookup(m, x.name);
          return r ? *r : e;
        } else if constexpr (std::is_same_v<T, Let>) {
          ExprPtr bound = subst(x.bound, m);
          Mapping inner;
          for (const auto& kv : m)
            if (kv.first != x.name) inner.push_back(kv);
          auto body_free = free_vars(x.body);
          Mapping needed;
          for (const auto& kv : inner)
            if (body_free.count(kv.first)) needed.push_back(kv);
          if (needed.empty()) return make_let(x.name, bound, x.body);
          std::set<std::string> incoming;
          for (const auto& kv : needed) {
            auto fv = free_vars(kv.second);
            incoming.insert(fv.begin(), fv.end());
          }
          std::string name = x.name;
          ExprPtr body = x.body;
          if (incoming.count(name)) {
            std::set<std::string> avoid = incoming;
            avoid.insert(body_free.begin(), body_free.end());
            for (const auto& kv : needed) avoid.insert(kv.first);
            name = fresh_name(x.name, avoid);
            body = subst(body, {{x.name, make_var(name)}});
          }
          return make_let(name, bound, subst(body, needed));
        } else if constexpr (std::is_same_v<T, Prim>) {
          return make_prim(x.op, subst(x.lhs, m), subst(x.rhs, m));
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return make_ifz(subst(x.cond, m), subst(x.then_expr, m), subst(x.else_expr, m));
        } else if constexpr (std::is_same_v<T, Call>) {
          std::vector<ExprPtr> args;
          args.reserve(x.args.size());
          for (const auto& a : x.args) args.push_back(subst(a, m));
          return make_call(x.callee, x.pass_index, x.fn_args, std::move(args));
        } else {
          std::vector<MatchArm> arms;
          for (const auto& arm : x.arms) arms.push_back({arm.symbol, subst(arm.body, m)});
          return make_match(std::move(arms));
        }
      },
      e->node);
}

}  // namespace

std::set<std::string> free_vars(const ExprPtr& e) {
  std::set<std::string> out;
  std::vector<std::string> bound;
  collect_free(e, bound, out);
  return out;
}

ExprPtr substitute(const ExprPtr& e, const Mapping& mapping) { return subst(e, mapping); }

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  for (std::size_t n = 1;; ++n) {
    std::string candidate = base + "_" + std::to_string(n);
    if (!taken.count(candidate)) return candidate;
  }
}

std::size_t expr_size(const ExprPtr& e) {
  return std::visit(
      [&](const auto& x) -> std::size_t {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, Var>) {
          return 1;
        } else if constexpr (std::is_same_v<T, Let>) {
          return 1 + expr_size(x.bound) + expr_size(x.body);
        } else if constexpr (std::is_same_v<T, Prim>) {
          return 1 + expr_size(x.lhs) + expr_size(x.rhs);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          return 1 + expr_size(x.cond) + expr_size(x.then_expr) + expr_size(x.else_expr);
        } else if constexpr (std::is_same_v<T, Call>) {
          std::size_t n = 1;
          for (const auto& a : x.args) n += expr_size(a);
          return n;
        } else {
          std::size_t n = 1;
          for (const auto& arm : x.arms) n += expr_size(arm.body);
          return n;
        }
      },
      e->node);
}

}  // namespace streamfold::ir
