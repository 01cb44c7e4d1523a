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

// Abstract syntax of the specializer's input language: a whole program of
// first-order functions over 64-bit integers, some of them parameterized by a
// compile-time index drawn from a finite set of symbols.
//
// Expressions are immutable and shared (`ExprPtr`), so rewriting passes can
// rebuild only the spine they touch.

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace streamfold::ir {

/// The keyword naming the index parameter; only legal as the first parameter
/// of a function and as the first argument of a call to an indexed callee.
inline constexpr const char* kIndexParam = "idx";

/// Prefix given to functorized indexed functions.
inline constexpr const char* kFunctorPrefix = "mk_";

enum class ErrorKind {
  SyntaxError,
  DuplicateName,
  UnknownIndexSymbol,
  NonTotalIndexMatch,
  UnboundName,
  UnboundCallee,
  ArityMismatch,
  CycleDetected,
  UnboundExtern,
  NameCollision,
  ExternWithoutBody,
  InvalidRequest,
};

const char* to_string(ErrorKind kind);

class IrError : public std::runtime_error {
 public:
  IrError(ErrorKind kind, const std::string& detail, int line = 0, int column = 0);
  ErrorKind kind() const { return kind_; }
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  ErrorKind kind_;
  int line_;
  int column_;
};

enum class Attribute { Specialize, Eliminate };
enum class PrimOp { Add, Sub, Mul };

const char* to_string(Attribute attr);
const char* to_string(PrimOp op);

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct IntLit {
  std::uint64_t value;
};

struct Var {
  std::string name;
};

struct Let {
  std::string name;
  ExprPtr bound;
  ExprPtr body;
};

struct Prim {
  PrimOp op;
  ExprPtr lhs;
  ExprPtr rhs;
};

struct IfZero {
  ExprPtr cond;
  ExprPtr then_expr;
  ExprPtr else_expr;
};

struct Call {
  std::string callee;
  bool pass_index = false;           // `idx` passed first
  std::vector<std::string> fn_args;  // specialized dependencies (functorized code only)
  std::vector<ExprPtr> args;
};

struct MatchArm {
  std::string symbol;
  ExprPtr body;
};

struct MatchIdx {
  std::vector<MatchArm> arms;
};

struct Expr {
  std::variant<IntLit, Var, Let, Prim, IfZero, Call, MatchIdx> node;
};

ExprPtr make_int(std::uint64_t value);
ExprPtr make_var(std::string name);
ExprPtr make_let(std::string name, ExprPtr bound, ExprPtr body);
ExprPtr make_prim(PrimOp op, ExprPtr lhs, ExprPtr rhs);
ExprPtr make_ifz(ExprPtr cond, ExprPtr then_expr, ExprPtr else_expr);
ExprPtr make_call(std::string callee, bool pass_index, std::vector<std::string> fn_args,
                  std::vector<ExprPtr> args);
ExprPtr make_match(std::vector<MatchArm> arms);

/// Deep structural equality.
bool equal(const ExprPtr& a, const ExprPtr& b);

struct Function {
  std::string name;
  Attribute attr = Attribute::Specialize;
  bool indexed = false;
  std::vector<std::string> fn_params;  // g-parameters of a functorized function
  std::vector<std::string> params;     // value parameters, `idx` excluded
  ExprPtr body;
};

struct Extern {
  std::string name;
  Attribute attr = Attribute::Specialize;
  std::size_t arity = 0;  // value arguments; externs are always indexed
};

struct Program {
  std::vector<std::string> index_symbols;
  std::vector<Extern> externs;
  std::vector<Function> functions;

  const Function* find_function(const std::string& name) const;
  const Extern* find_extern(const std::string& name) const;
  bool has_name(const std::string& name) const;
};

bool equal(const Function& a, const Function& b);
bool equal(const Program& a, const Program& b);

/// Free value variables of an expression.
std::set<std::string> free_vars(const ExprPtr& e);

/// Capture-avoiding substitution of value variables.
ExprPtr substitute(const ExprPtr& e, const std::vector<std::pair<std::string, ExprPtr>>& mapping);

/// `base` if it is not in `taken`, otherwise the first free `base_N`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

/// Number of nodes, for size bounds in tests and generators.
std::size_t expr_size(const ExprPtr& e);

}  // namespace streamfold::ir
