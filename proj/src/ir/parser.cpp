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

#include "streamfold/ir/parser.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

namespace streamfold::ir {

namespace {

struct Token {
  enum Kind { LParen, RParen, LBracket, RBracket, Atom, End } kind;
  std::string text;
  int line;
  int col;
};

bool is_delim(char c) {
  return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '[' ||
         c == ']' || c == ';';
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
    } else if (c == ';') {
      while (i < text.size() && text[i] != '\n') advance(1);
    } else if (c == '(' || c == ')' || c == '[' || c == ']') {
      Token::Kind k = c == '('   ? Token::LParen
                      : c == ')' ? Token::RParen
                      : c == '[' ? Token::LBracket
                                 : Token::RBracket;
      out.push_back({k, std::string(1, c), line, col});
      advance(1);
    } else {
      std::size_t j = i;
      while (j < text.size() && !is_delim(text[j])) ++j;
      out.push_back({Token::Atom, std::string(text.substr(i, j - i)), line, col});
      advance(j - i);
    }
  }
  out.push_back({Token::End, "end of input", line, col});
  return out;
}

bool is_name(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '.' || c == '\'';
  });
}

bool is_int(const std::string& s) {
  std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (start == s.size()) return false;
  return std::all_of(s.begin() + start, s.end(),
                     [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(tokenize(text)) {}

  Program parse() {
    Program p;
    expect(Token::LParen, "'(' opening the index declaration");
    expect_keyword("index");
    while (peek().kind == Token::Atom) p.index_symbols.push_back(name("index symbol"));
    expect(Token::RParen, "')' closing the index declaration");
    while (peek().kind != Token::End) {
      expect(Token::LParen, "'(' opening a declaration");
      const Token& head = peek();
      if (head.kind == Token::Atom && head.text == "fn") {
        next();
        p.functions.push_back(function());
      } else if (head.kind == Token::Atom && head.text == "extern") {
        next();
        p.externs.push_back(extern_decl());
      } else {
        fail(head, "expected 'fn' or 'extern'");
      }
    }
    return p;
  }

 private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;

  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_ < toks_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& t, const std::string& what) const {
    throw IrError(ErrorKind::SyntaxError, what + ", found '" + t.text + "'", t.line, t.col);
  }

  void expect(Token::Kind kind, const char* what) {
    if (peek().kind != kind) fail(peek(), std::string("expected ") + what);
    next();
  }

  void expect_keyword(const char* kw) {
    if (peek().kind != Token::Atom || peek().text != kw)
      fail(peek(), std::string("expected '") + kw + "'");
    next();
  }

  std::string name(const char* what) {
    const Token& t = peek();
    if (t.kind != Token::Atom || !is_name(t.text)) fail(t, std::string("expected ") + what);
    next();
    return t.text;
  }

  std::string binder(const char* what) {
    const Token& t = peek();
    if (t.kind == Token::Atom && t.text == kIndexParam)
      fail(t, "'idx' may only be the first parameter");
    return name(what);
  }

  Attribute attribute(bool is_extern) {
    if (peek().kind != Token::LBracket) return Attribute::Specialize;
    next();
    const Token& t = peek();
    Attribute attr;
    if (t.kind == Token::Atom && t.text == "specialize") {
      attr = Attribute::Specialize;
    } else if (t.kind == Token::Atom && t.text == "eliminate") {
      if (is_extern) fail(t, "externs cannot be eliminated");
      attr = Attribute::Eliminate;
    } else {
      fail(t, "expected 'specialize' or 'eliminate'");
    }
    next();
    expect(Token::RBracket, "']'");
    return attr;
  }

  std::vector<std::string> bracketed_names(const char* what) {
    std::vector<std::string> out;
    expect(Token::LBracket, "'['");
    while (peek().kind != Token::RBracket) out.push_back(name(what));
    next();
    return out;
  }

  Function function() {
    Function f;
    f.name = name("function name");
    f.attr = attribute(false);
    expect(Token::LParen, "'(' opening the parameter list");
    if (peek().kind == Token::Atom && peek().text == kIndexParam) {
      next();
      f.indexed = true;
      if (peek().kind == Token::LBracket) f.fn_params = bracketed_names("g-parameter");
    }
    while (peek().kind != Token::RParen) f.params.push_back(binder("parameter name"));
    next();
    f.body = expr();
    expect(Token::RParen, "')' closing the function");
    return f;
  }

  Extern extern_decl() {
    Extern e;
    e.name = name("extern name");
    e.attr = attribute(true);
    const Token& t = peek();
    if (t.kind != Token::Atom || !is_int(t.text) || t.text[0] == '-' || t.text.size() > 6)
      fail(t, "expected extern arity");
    e.arity = std::stoul(t.text);
    next();
    expect(Token::RParen, "')' closing the extern");
    return e;
  }

  std::uint64_t integer(const Token& t) {
    const bool neg = t.text[0] == '-';
    std::uint64_t mag = 0;
    for (std::size_t i = neg ? 1 : 0; i < t.text.size(); ++i) {
      const std::uint64_t d = static_cast<std::uint64_t>(t.text[i] - '0');
      if (mag > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        fail(t, "integer literal out of range");
      mag = mag * 10 + d;
    }
    if (neg) {
      if (mag > (std::uint64_t{1} << 63)) fail(t, "integer literal out of range");
      return std::uint64_t{0} - mag;
    }
    return mag;
  }

  ExprPtr expr() {
    const Token& t = peek();
    if (t.kind == Token::Atom) {
      next();
      if (is_int(t.text)) return make_int(integer(t));
      if (t.text == kIndexParam) fail(t, "'idx' is not a value");
      if (!is_name(t.text)) fail(t, "expected expression");
      return make_var(t.text);
    }
    if (t.kind != Token::LParen) fail(t, "expected expression");
    next();
    const Token& head = peek();
    if (head.kind != Token::Atom) fail(head, "expected a form keyword");
    next();
    ExprPtr out;
    if (head.text == "let") {
      std::string n = binder("let-bound name");
      ExprPtr bound = expr();
      ExprPtr body = expr();
      out = make_let(std::move(n), std::move(bound), std::move(body));
    } else if (head.text == "call") {
      std::string callee = name("callee name");
      bool pass_index = false;
      std::vector<std::string> fn_args;
      if (peek().kind == Token::Atom && peek().text == kIndexParam) {
        next();
        pass_index = true;
      }
      if (peek().kind == Token::LBracket) fn_args = bracketed_names("g-argument");
      std::vector<ExprPtr> args;
      while (peek().kind != Token::RParen) args.push_back(expr());
      out = make_call(std::move(callee), pass_index, std::move(fn_args), std::move(args));
    } else if (head.text == "+" || head.text == "-" || head.text == "*") {
      PrimOp op = head.text == "+" ? PrimOp::Add : head.text == "-" ? PrimOp::Sub : PrimOp::Mul;
      ExprPtr a = expr();
      ExprPtr b = expr();
      out = make_prim(op, std::move(a), std::move(b));
    } else if (head.text == "ifz") {
      ExprPtr c = expr();
      ExprPtr a = expr();
      ExprPtr b = expr();
      out = make_ifz(std::move(c), std::move(a), std::move(b));
    } else if (head.text == "match-idx") {
      std::vector<MatchArm> arms;
      do {
        expect(Token::LParen, "'(' opening a match arm");
        std::string sym = name("index symbol");
        ExprPtr body = expr();
        expect(Token::RParen, "')' closing a match arm");
        arms.push_back({std::move(sym), std::move(body)});
      } while (peek().kind == Token::LParen);
      out = make_match(std::move(arms));
    } else {
      fail(head, "unknown form");
    }
    expect(Token::RParen, "')'");
    return out;
  }
};

// Arity of a g-parameter, looked up through the node it stands for.
std::optional<std::size_t> g_arity(const Program& p, const std::string& g) {
  if (const Extern* e = p.find_extern(g)) return e->arity;
  if (const Function* f = p.find_function(kFunctorPrefix + g)) return f->params.size();
  if (const Function* f = p.find_function(g); f && f->indexed) return f->params.size();
  return std::nullopt;
}

class Validator {
 public:
  explicit Validator(const Program& p) : p_(p) {}

  void run() {
    std::set<std::string> syms;
    for (const auto& s : p_.index_symbols) {
      if (!is_name(s)) throw IrError(ErrorKind::SyntaxError, "invalid index symbol '" + s + "'");
      if (!syms.insert(s).second)
        throw IrError(ErrorKind::DuplicateName, "index symbol '" + s + "' declared twice");
    }
    std::set<std::string> names;
    for (const auto& e : p_.externs) {
      if (e.attr == Attribute::Eliminate)
        throw IrError(ErrorKind::SyntaxError, "extern '" + e.name + "' cannot be eliminated");
      if (!names.insert(e.name).second)
        throw IrError(ErrorKind::DuplicateName, "'" + e.name + "' declared twice");
    }
    for (const auto& f : p_.functions)
      if (!names.insert(f.name).second)
        throw IrError(ErrorKind::DuplicateName, "'" + f.name + "' declared twice");
    for (const auto& f : p_.functions) function(f);
  }

 private:
  const Program& p_;
  const Function* fn_ = nullptr;
  std::vector<std::string> scope_;

  [[noreturn]] void fail(ErrorKind kind, const std::string& what) const {
    throw IrError(kind, "in '" + fn_->name + "': " + what);
  }

  void function(const Function& f) {
    fn_ = &f;
    if (!f.indexed && !f.fn_params.empty()) fail(ErrorKind::SyntaxError, "g-parameters need idx");
    std::set<std::string> seen;
    for (const auto& n : f.fn_params)
      if (!seen.insert(n).second) fail(ErrorKind::DuplicateName, "parameter '" + n + "' repeated");
    for (const auto& n : f.params) {
      if (n == kIndexParam) fail(ErrorKind::SyntaxError, "'idx' may only be the first parameter");
      if (!seen.insert(n).second) fail(ErrorKind::DuplicateName, "parameter '" + n + "' repeated");
    }
    if (!f.body) fail(ErrorKind::SyntaxError, "missing body");
    scope_ = f.params;
    expr(f.body);
  }

  bool is_g_param(const std::string& n) const {
    return std::find(fn_->fn_params.begin(), fn_->fn_params.end(), n) != fn_->fn_params.end();
  }

  void arity(const std::string& callee, std::size_t expected, std::size_t got) const {
    if (expected != got)
      fail(ErrorKind::ArityMismatch, "'" + callee + "' takes " + std::to_string(expected) +
                                         " arguments, given " + std::to_string(got));
  }

  void call(const Call& c) {
    if (is_g_param(c.callee)) {
      if (c.pass_index || !c.fn_args.empty())
        fail(ErrorKind::SyntaxError, "g-parameter '" + c.callee + "' takes value arguments only");
      if (auto n = g_arity(p_, c.callee)) arity(c.callee, *n, c.args.size());
      return;
    }
    if (const Function* g = p_.find_function(c.callee)) {
      if (g->indexed) {
        if (!fn_->indexed || !c.pass_index)
          fail(ErrorKind::SyntaxError, "call to indexed '" + c.callee + "' must pass idx");
        if (c.fn_args.size() != g->fn_params.size())
          fail(ErrorKind::ArityMismatch, "'" + c.callee + "' takes " +
                                             std::to_string(g->fn_params.size()) +
                                             " g-arguments");
        for (const auto& a : c.fn_args)
          if (!is_g_param(a)) fail(ErrorKind::UnboundCallee, "unknown g-argument '" + a + "'");
      } else {
        if (c.pass_index || !c.fn_args.empty())
          fail(ErrorKind::SyntaxError, "'" + c.callee + "' is not indexed");
      }
      arity(c.callee, g->params.size(), c.args.size());
      return;
    }
    if (const Extern* e = p_.find_extern(c.callee)) {
      if (!fn_->indexed || !c.pass_index)
        fail(ErrorKind::SyntaxError, "call to extern '" + c.callee + "' must pass idx");
      if (!c.fn_args.empty()) fail(ErrorKind::SyntaxError, "externs take no g-arguments");
      arity(c.callee, e->arity, c.args.size());
      return;
    }
    fail(ErrorKind::UnboundCallee, "no function or extern named '" + c.callee + "'");
  }

  void match(const MatchIdx& m) {
    if (!fn_->indexed) fail(ErrorKind::SyntaxError, "match-idx outside an indexed function");
    std::set<std::string> seen;
    for (const auto& arm : m.arms) {
      if (std::find(p_.index_symbols.begin(), p_.index_symbols.end(), arm.symbol) ==
          p_.index_symbols.end())
        fail(ErrorKind::UnknownIndexSymbol, "unknown index symbol '" + arm.symbol + "'");
      if (!seen.insert(arm.symbol).second)
        fail(ErrorKind::NonTotalIndexMatch, "arm '" + arm.symbol + "' repeated");
    }
    for (const auto& s : p_.index_symbols)
      if (!seen.count(s)) fail(ErrorKind::NonTotalIndexMatch, "no arm for '" + s + "'");
  }

  void expr(const ExprPtr& e) {
    std::visit(
        [&](const auto& x) {
          using T = std::decay_t<decltype(x)>;
          if constexpr (std::is_same_v<T, Var>) {
            if (std::find(scope_.begin(), scope_.end(), x.name) == scope_.end())
              fail(ErrorKind::UnboundName, "unbound variable '" + x.name + "'");
          } else if constexpr (std::is_same_v<T, Let>) {
            if (x.name == kIndexParam) fail(ErrorKind::SyntaxError, "cannot bind 'idx'");
            expr(x.bound);
            scope_.push_back(x.name);
            expr(x.body);
            scope_.pop_back();
          } else if constexpr (std::is_same_v<T, Prim>) {
            expr(x.lhs);
            expr(x.rhs);
          } else if constexpr (std::is_same_v<T, IfZero>) {
            expr(x.cond);
            expr(x.then_expr);
            expr(x.else_expr);
          } else if constexpr (std::is_same_v<T, Call>) {
            call(x);
            for (const auto& a : x.args) expr(a);
          } else if constexpr (std::is_same_v<T, MatchIdx>) {
            match(x);
            for (const auto& arm : x.arms) expr(arm.body);
          }
        },
        e->node);
  }
};

}  // namespace

void validate(const Program& program) { Validator(program).run(); }

Program parse_program(std::string_view text) {
  Program p = Parser(text).parse();
  validate(p);
  return p;
}

}  // namespace streamfold::ir
