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

#include "streamfold/ir/instantiate.hpp"

#include <algorithm>
#include <set>

#include "streamfold/ir/call_graph.hpp"
#include "streamfold/ir/functorize.hpp"
#include "streamfold/ir/parser.hpp"

namespace streamfold::ir {

namespace {

bool is_atomic(const ExprPtr& e) {
  return std::holds_alternative<IntLit>(e->node) || std::holds_alternative<Var>(e->node);
}

// Original name of a functorized function, or empty for non-indexed ones.
std::string source_name(const Function& f) {
  if (!f.indexed) return {};
  return f.name.substr(std::string(kFunctorPrefix).size());
}

void require_functorized(const Program& p) {
  for (const auto& f : p.functions)
    if (f.indexed && f.name.rfind(kFunctorPrefix, 0) != 0)
      throw IrError(ErrorKind::InvalidRequest, "'" + f.name + "' has not been functorized");
}

void collect_called(const ExprPtr& e, std::set<std::string>& out) {
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Let>) {
          collect_called(x.bound, out);
          collect_called(x.body, out);
        } else if constexpr (std::is_same_v<T, Prim>) {
          collect_called(x.lhs, out);
          collect_called(x.rhs, out);
        } else if constexpr (std::is_same_v<T, IfZero>) {
          collect_called(x.cond, out);
          collect_called(x.then_expr, out);
          collect_called(x.else_expr, out);
        } else if constexpr (std::is_same_v<T, Call>) {
          const std::string prefix = kFunctorPrefix;
          out.insert(x.pass_index && x.callee.rfind(prefix, 0) == 0 ? x.callee.substr(prefix.size())
                                                                    : x.callee);
          for (const auto& a : x.args) collect_called(a, out);
        } else if constexpr (std::is_same_v<T, MatchIdx>) {
          for (const auto& arm : x.arms) collect_called(arm.body, out);
        }
      },
      e->node);
}

class Instantiator {
 public:
  Instantiator(const Program& p, const SpecializationRequest& req) : p_(p), req_(req) {
    for (const auto& f : p.functions) {
      if (f.indexed)
        indexed_[source_name(f)] = &f;
      else
        plain_[f.name] = &f;
    }
  }

  Instantiation run() {
    std::vector<std::string> entries = req_.entry_points;
    if (entries.empty()) entries = default_entry_points(p_);
    if (entries.empty()) throw IrError(ErrorKind::InvalidRequest, "no entry points");
    check_index(entries);
    check_bindings(entries);

    for (const auto& e : entries) {
      if (indexed_.count(e)) {
        instance(e);
      } else if (const Function* f = plain_.count(e) ? plain_.at(e) : nullptr) {
        entry_copy(*f);
      }
    }
    Instantiation r;
    r.program.index_symbols = p_.index_symbols;
    r.program.functions = std::move(out_);
    r.generated = std::move(generated_);
    validate(r.program);
    return r;
  }

 private:
  const Program& p_;
  const SpecializationRequest& req_;
  std::map<std::string, const Function*> indexed_;  // by source name
  std::map<std::string, const Function*> plain_;
  std::map<std::string, std::string> instances_;    // source name -> instance name
  std::map<std::string, ExprPtr> reduced_;          // source name -> reduced body
  std::set<std::string> copied_;
  std::vector<Function> out_;
  std::vector<std::string> generated_;

  std::string mangle(const std::string& name) const {
    return req_.mangle_suffix.empty() ? name : name + "_" + req_.mangle_suffix;
  }

  void check_index(const std::vector<std::string>& entries) const {
    const auto& syms = p_.index_symbols;
    if (!req_.index_value.empty() &&
        std::find(syms.begin(), syms.end(), req_.index_value) == syms.end())
      throw IrError(ErrorKind::UnknownIndexSymbol, "unknown index value '" + req_.index_value + "'");
    for (const auto& e : entries) {
      if (indexed_.count(e)) {
        const Function* f = indexed_.at(e);
        if (f->attr == Attribute::Eliminate)
          throw IrError(ErrorKind::InvalidRequest, "entry '" + e + "' is eliminated");
        if (req_.index_value.empty())
          throw IrError(ErrorKind::InvalidRequest, "entry '" + e + "' needs an index value");
      } else if (!plain_.count(e)) {
        throw IrError(ErrorKind::InvalidRequest, "no function named '" + e + "'");
      } else if (plain_.at(e)->attr == Attribute::Eliminate) {
        throw IrError(ErrorKind::InvalidRequest, "entry '" + e + "' is eliminated");
      }
    }
  }

  // Externs reachable from the entries, through g-parameters only.
  std::set<std::string> reachable_externs(const std::vector<std::string>& entries) const {
    std::set<std::string> seen, externs;
    std::vector<std::string> work;
    for (const auto& e : entries)
      if (indexed_.count(e)) work.push_back(e);
    while (!work.empty()) {
      std::string n = work.back();
      work.pop_back();
      if (!seen.insert(n).second) continue;
      for (const auto& g : indexed_.at(n)->fn_params) {
        if (p_.find_extern(g))
          externs.insert(g);
        else if (indexed_.count(g))
          work.push_back(g);
      }
    }
    return externs;
  }

  void check_bindings(const std::vector<std::string>& entries) const {
    for (const auto& [ext, impl] : req_.bindings) {
      const Extern* e = p_.find_extern(ext);
      if (!e) throw IrError(ErrorKind::InvalidRequest, "'" + ext + "' is not an extern");
      const Function* f = p_.find_function(impl);
      if (!f || f->indexed || f->attr == Attribute::Eliminate)
        throw IrError(ErrorKind::InvalidRequest,
                      "binding for '" + ext + "' must name a non-indexed specialize function, got '" +
                          impl + "'");
      if (f->params.size() != e->arity)
        throw IrError(ErrorKind::ArityMismatch, "'" + impl + "' takes " +
                                                    std::to_string(f->params.size()) +
                                                    " arguments but extern '" + ext + "' has " +
                                                    std::to_string(e->arity));
    }
    for (const auto& ext : reachable_externs(entries))
      if (!req_.bindings.count(ext))
        throw IrError(ErrorKind::UnboundExtern, "extern '" + ext + "' has no binding");
  }

  void claim(const std::string& name) {
    if (p_.has_name(name) || copied_.count(name))
      throw IrError(ErrorKind::NameCollision, "'" + name + "' already exists");
  }

  // Non-indexed specialize functions are kept under their own name, with
  // eliminated callees inlined.
  void copy_plain(const std::string& name) {
    if (copied_.count(name)) return;
    const Function* f = plain_.at(name);
    Function g = *f;
    g.body = reduced_body(name);
    copied_.insert(name);
    out_.push_back(std::move(g));
  }

  void entry_copy(const Function& f) {
    if (req_.mangle_suffix.empty()) {
      copy_plain(f.name);
      return;
    }
    Function g = f;
    g.name = mangle(f.name);
    claim(g.name);
    g.body = reduced_body(f.name);
    copied_.insert(g.name);
    generated_.push_back(g.name);
    out_.push_back(std::move(g));
  }

  // Concrete function standing for a specialized dependency.
  std::string resolve(const std::string& g) {
    if (p_.find_extern(g)) {
      const std::string& impl = req_.bindings.at(g);
      copy_plain(impl);
      return impl;
    }
    return instance(g);
  }

  std::string instance(const std::string& name) {
    if (auto it = instances_.find(name); it != instances_.end()) return it->second;
    const Function* f = indexed_.at(name);
    std::string mangled = mangle(name);
    claim(mangled);
    instances_[name] = mangled;
    Function g;
    g.name = mangled;
    g.attr = Attribute::Specialize;
    g.params = f->params;
    g.body = reduce(f->body);
    generated_.push_back(mangled);
    out_.push_back(std::move(g));
    return mangled;
  }

  // Keyed by source name; indexed and plain names never clash.
  const ExprPtr& reduced_body(const std::string& name) {
    if (auto it = reduced_.find(name); it != reduced_.end()) return it->second;
    const Function* f = indexed_.count(name) ? indexed_.at(name) : plain_.at(name);
    ExprPtr body = reduce(f->body);
    return reduced_[name] = std::move(body);
  }

  // Binds parameters to arguments: atoms are substituted, anything else is
  // let-bound once so evaluation order and sharing are preserved.
  ExprPtr inline_call(const Function& f, const ExprPtr& body, std::vector<ExprPtr> args) {
    std::set<std::string> avoid;
    for (const auto& a : args) {
      auto fv = free_vars(a);
      avoid.insert(fv.begin(), fv.end());
    }
    std::vector<std::pair<std::string, ExprPtr>> mapping;
    std::vector<std::pair<std::string, ExprPtr>> lets;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (is_atomic(args[i])) {
        mapping.emplace_back(f.params[i], args[i]);
      } else {
        std::string n = fresh_name(f.params[i], avoid);
        avoid.insert(n);
        lets.emplace_back(n, args[i]);
        mapping.emplace_back(f.params[i], make_var(n));
      }
    }
    ExprPtr e = substitute(body, mapping);
    for (auto it = lets.rbegin(); it != lets.rend(); ++it) e = make_let(it->first, it->second, e);
    return e;
  }

  ExprPtr reduce(const ExprPtr& e) {
    return std::visit(
        [&](const auto& x) -> ExprPtr {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, IntLit> || std::is_same_v<T, Var>) {
            return e;
          } else if constexpr (std::is_same_v<T, Let>) {
            // Reduction emits functions as a side effect: keep it left to right.
            ExprPtr bound = reduce(x.bound);
            return make_let(x.name, std::move(bound), reduce(x.body));
          } else if constexpr (std::is_same_v<T, Prim>) {
            ExprPtr lhs = reduce(x.lhs);
            return make_prim(x.op, std::move(lhs), reduce(x.rhs));
          } else if constexpr (std::is_same_v<T, IfZero>) {
            ExprPtr c = reduce(x.cond);
            ExprPtr t = reduce(x.then_expr);
            return make_ifz(std::move(c), std::move(t), reduce(x.else_expr));
          } else if constexpr (std::is_same_v<T, MatchIdx>) {
            for (const auto& arm : x.arms)
              if (arm.symbol == req_.index_value) return reduce(arm.body);
            throw IrError(ErrorKind::NonTotalIndexMatch, "no arm for '" + req_.index_value + "'");
          } else {
            std::vector<ExprPtr> args;
            for (const auto& a : x.args) args.push_back(reduce(a));
            if (x.pass_index) {
              const Function* f = p_.find_function(x.callee);
              const std::string src = source_name(*f);
              return inline_call(*f, reduced_body(src), std::move(args));
            }
            if (plain_.count(x.callee)) {
              const Function* f = plain_.at(x.callee);
              if (f->attr == Attribute::Eliminate)
                return inline_call(*f, reduced_body(x.callee), std::move(args));
              copy_plain(x.callee);
              return make_call(x.callee, false, {}, std::move(args));
            }
            return make_call(resolve(x.callee), false, {}, std::move(args));
          }
        },
        e->node);
  }
};

}  // namespace

std::vector<std::string> default_entry_points(const Program& functorized) {
  std::set<std::string> called;
  for (const auto& f : functorized.functions) collect_called(f.body, called);
  const bool any_indexed = std::any_of(functorized.functions.begin(), functorized.functions.end(),
                                       [](const Function& f) { return f.indexed; });
  std::vector<std::string> out;
  for (const auto& f : functorized.functions) {
    if (f.attr != Attribute::Specialize || f.indexed != any_indexed) continue;
    std::string name = f.indexed ? source_name(f) : f.name;
    if (!called.count(name)) out.push_back(name);
  }
  return out;
}

Instantiation instantiate(const Program& functorized, const SpecializationRequest& request) {
  validate(functorized);
  require_functorized(functorized);
  build_call_graph(functorized);
  return Instantiator(functorized, request).run();
}

namespace {

// Adds the functions of a stage output that `base` lacks. With `strict`, a
// same-named function must also be identical.
void merge_into(std::vector<Function>& base, const std::vector<Function>& extra, bool strict) {
  for (const auto& f : extra) {
    auto it = std::find_if(base.begin(), base.end(),
                           [&](const Function& g) { return g.name == f.name; });
    if (it == base.end())
      base.push_back(f);
    else if (strict && !equal(*it, f))
      throw IrError(ErrorKind::NameCollision,
                    "'" + f.name + "' is produced twice with different bodies");
  }
}

}  // namespace

Instantiation specialize(const Program& program, const std::vector<SpecializationRequest>& stages) {
  if (stages.empty()) throw IrError(ErrorKind::InvalidRequest, "no specialization stages");
  Program current = functorize(program);
  Instantiation result;
  result.program.index_symbols = program.index_symbols;
  for (const auto& stage : stages) {
    Instantiation r = instantiate(current, stage);
    merge_into(current.functions, r.program.functions, false);
    merge_into(result.program.functions, r.program.functions, true);
    for (const auto& g : r.generated)
      if (std::find(result.generated.begin(), result.generated.end(), g) == result.generated.end())
        result.generated.push_back(g);
  }
  validate(result.program);
  build_call_graph(result.program);
  return result;
}

}  // namespace streamfold::ir
