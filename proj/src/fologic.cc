// Copyright 2026 The HeisenLab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "heisenlab/fologic.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <unordered_set>

#include "heisenlab/error.h"

namespace heisenlab {

Term Term::Var(std::string name) {
  Term t;
  t.kind = Kind::kVar;
  t.name = std::move(name);
  return t;
}
Term Term::U() { Term t; t.kind = Kind::kU; return t; }
Term Term::V() { Term t; t.kind = Kind::kV; return t; }
Term Term::Identity() { Term t; t.kind = Kind::kI; return t; }
Term Term::Mul(Term x, Term y) {
  Term t;
  t.kind = Kind::kMul;
  t.args = {std::move(x), std::move(y)};
  return t;
}
Term Term::Inv(Term x) {
  Term t;
  t.kind = Kind::kInv;
  t.args = {std::move(x)};
  return t;
}
Term Term::Comm(Term x, Term y) {
  Term t;
  t.kind = Kind::kComm;
  t.args = {std::move(x), std::move(y)};
  return t;
}

namespace {

Formula Binary(Formula::Kind kind, Formula f, Formula g) {
  Formula out;
  out.kind = kind;
  out.args = {std::move(f), std::move(g)};
  return out;
}

Formula Quant(Formula::Kind kind, std::string var, Formula f) {
  Formula out;
  out.kind = kind;
  out.var = std::move(var);
  out.args = {std::move(f)};
  return out;
}

}  // namespace

Formula Formula::Eq(Term x, Term y) {
  Formula f;
  f.kind = Kind::kEq;
  f.terms = {std::move(x), std::move(y)};
  return f;
}
Formula Formula::Not(Formula g) {
  Formula f;
  f.kind = Kind::kNot;
  f.args = {std::move(g)};
  return f;
}
Formula Formula::And(Formula f, Formula g) {
  return Binary(Kind::kAnd, std::move(f), std::move(g));
}
Formula Formula::Or(Formula f, Formula g) {
  return Binary(Kind::kOr, std::move(f), std::move(g));
}
Formula Formula::Implies(Formula f, Formula g) {
  return Binary(Kind::kImplies, std::move(f), std::move(g));
}
Formula Formula::Exists(std::string var, Formula f) {
  return Quant(Kind::kExists, std::move(var), std::move(f));
}
Formula Formula::Forall(std::string var, Formula f) {
  return Quant(Kind::kForall, std::move(var), std::move(f));
}

// ---------------------------------------------------------------- parsing

namespace {

enum class Tok {
  kIdent, kLParen, kRParen, kLBrack, kRBrack, kComma, kStar, kInvOp, kEq,
  kTilde, kAmp, kBar, kArrow, kDot, kEnd,
};

std::string TokName(Tok t) {
  switch (t) {
    case Tok::kIdent: return "identifier";
    case Tok::kLParen: return "'('";
    case Tok::kRParen: return "')'";
    case Tok::kLBrack: return "'['";
    case Tok::kRBrack: return "']'";
    case Tok::kComma: return "','";
    case Tok::kStar: return "'*'";
    case Tok::kInvOp: return "'^-1'";
    case Tok::kEq: return "'='";
    case Tok::kTilde: return "'~'";
    case Tok::kAmp: return "'&'";
    case Tok::kBar: return "'|'";
    case Tok::kArrow: return "'->'";
    case Tok::kDot: return "'.'";
    case Tok::kEnd: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  int line;
  int column;
};

[[noreturn]] void SyntaxAt(int line, int column, const std::string& what) {
  throw Error(ErrorCode::kSyntaxError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) +
                  ": " + what,
              {static_cast<std::uint32_t>(line), static_cast<std::uint32_t>(column)});
}

bool IdentStart(char c) { return std::isalpha(static_cast<unsigned char>(c)); }
bool IdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '\'';
}

std::vector<Token> Lex(std::string_view s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {  // comment to end of line
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    const int l = line, cc = col;
    if (IdentStart(c)) {
      std::size_t j = i;
      while (j < s.size() && IdentChar(s[j])) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), l, cc});
      advance(j - i);
      continue;
    }
    if (s.substr(i, 3) == "^-1") {
      out.push_back({Tok::kInvOp, "^-1", l, cc});
      advance(3);
      continue;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::kArrow, "->", l, cc});
      advance(2);
      continue;
    }
    Tok t;
    switch (c) {
      case '(': t = Tok::kLParen; break;
      case ')': t = Tok::kRParen; break;
      case '[': t = Tok::kLBrack; break;
      case ']': t = Tok::kRBrack; break;
      case ',': t = Tok::kComma; break;
      case '*': t = Tok::kStar; break;
      case '=': t = Tok::kEq; break;
      case '~': t = Tok::kTilde; break;
      case '&': t = Tok::kAmp; break;
      case '|': t = Tok::kBar; break;
      case '.': t = Tok::kDot; break;
      default:
        SyntaxAt(l, cc, std::string("unexpected character '") + c + "'");
    }
    out.push_back({t, std::string(1, c), l, cc});
    advance(1);
  }
  out.push_back({Tok::kEnd, "", line, col});
  return out;
}

bool IsReserved(const std::string& s) {
  return s == "u" || s == "v" || s == "I" || s == "exists" || s == "forall";
}

struct Backtrack {};

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula Run() {
    try {
      Formula f = ParseImplies();
      Expect(Tok::kEnd);
      return f;
    } catch (const Backtrack&) {
      const Token& t = toks_[far_];
      std::string exp;
      for (const std::string& e : expected_) {
        if (!exp.empty()) exp += ", ";
        exp += e;
      }
      const std::string found = t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'";
      SyntaxAt(t.line, t.column, "expected one of {" + exp + "}, found " + found);
    }
  }

 private:
  const Token& Peek() const { return toks_[pos_]; }

  [[noreturn]] void Fail(std::initializer_list<std::string> expected) {
    if (pos_ > far_) {
      far_ = pos_;
      expected_.clear();
    }
    if (pos_ == far_) expected_.insert(expected.begin(), expected.end());
    throw Backtrack{};
  }

  bool Accept(Tok t) {
    if (Peek().kind != t) {
      Note({TokName(t)});
      return false;
    }
    ++pos_;
    return true;
  }

  void Expect(Tok t) {
    if (!Accept(t)) Fail({TokName(t)});
  }

  // Records tokens that would have been accepted here without failing.
  void Note(std::initializer_list<std::string> expected) {
    if (pos_ > far_) {
      far_ = pos_;
      expected_.clear();
    }
    if (pos_ == far_) expected_.insert(expected.begin(), expected.end());
  }

  bool AtKeyword(const char* word) const {
    return Peek().kind == Tok::kIdent && Peek().text == word;
  }

  Formula ParseImplies() {
    Formula lhs = ParseOr();
    if (Accept(Tok::kArrow)) return Formula::Implies(std::move(lhs), ParseImplies());
    return lhs;
  }

  Formula ParseOr() {
    Formula f = ParseAnd();
    while (Accept(Tok::kBar)) f = Formula::Or(std::move(f), ParseAnd());
    return f;
  }

  Formula ParseAnd() {
    Formula f = ParseUnary();
    while (Accept(Tok::kAmp)) f = Formula::And(std::move(f), ParseUnary());
    return f;
  }

  Formula ParseUnary() {
    if (Accept(Tok::kTilde)) return Formula::Not(ParseUnary());
    Note({"'exists'", "'forall'"});
    if (AtKeyword("exists") || AtKeyword("forall")) {
      const bool exists = Peek().text == "exists";
      ++pos_;
      std::vector<std::string> vars;
      do {
        vars.push_back(ParseVarName());
      } while (Peek().kind == Tok::kIdent && !IsReserved(Peek().text));
      Expect(Tok::kDot);
      Formula body = ParseImplies();
      for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
        body = exists ? Formula::Exists(*it, std::move(body))
                      : Formula::Forall(*it, std::move(body));
      }
      return body;
    }
    return ParseAtom();
  }

  std::string ParseVarName() {
    if (Peek().kind != Tok::kIdent || IsReserved(Peek().text)) Fail({"identifier"});
    return toks_[pos_++].text;
  }

  Formula ParseAtom() {
    if (Peek().kind == Tok::kLParen && !failed_formula_at_.count(pos_)) {
      const std::size_t save = pos_;
      try {
        ++pos_;
        Formula f = ParseImplies();
        Expect(Tok::kRParen);
        return f;
      } catch (const Backtrack&) {
        failed_formula_at_.insert(save);
        pos_ = save;
      }
    }
    Term lhs = ParseTerm();
    Expect(Tok::kEq);
    Term rhs = ParseTerm();
    return Formula::Eq(std::move(lhs), std::move(rhs));
  }

  Term ParseTerm() {
    Term t = ParseFactor();
    while (Accept(Tok::kStar)) t = Term::Mul(std::move(t), ParseFactor());
    return t;
  }

  Term ParseFactor() {
    Term t = ParsePrimary();
    while (Accept(Tok::kInvOp)) t = Term::Inv(std::move(t));
    return t;
  }

  Term ParsePrimary() {
    const Token& t = Peek();
    if (t.kind == Tok::kIdent) {
      if (t.text == "exists" || t.text == "forall") {
        Fail({"identifier", "'u'", "'v'", "'I'", "'['", "'('"});
      }
      ++pos_;
      if (t.text == "u") return Term::U();
      if (t.text == "v") return Term::V();
      if (t.text == "I") return Term::Identity();
      return Term::Var(t.text);
    }
    if (Accept(Tok::kLBrack)) {
      Term a = ParseTerm();
      Expect(Tok::kComma);
      Term b = ParseTerm();
      Expect(Tok::kRBrack);
      return Term::Comm(std::move(a), std::move(b));
    }
    if (Accept(Tok::kLParen)) {
      Term a = ParseTerm();
      Expect(Tok::kRParen);
      return a;
    }
    Fail({"identifier", "'u'", "'v'", "'I'", "'['", "'('"});
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t far_ = 0;
  std::set<std::string> expected_;
  std::unordered_set<std::size_t> failed_formula_at_;
};

// ---------------------------------------------------------------- printing

int Prec(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kImplies: return 1;
    case Formula::Kind::kOr: return 2;
    case Formula::Kind::kAnd: return 3;
    default: return 4;
  }
}

void PrintTerm(const Term& t, bool operand_of_mul_right, std::string& out) {
  switch (t.kind) {
    case Term::Kind::kVar: out += t.name; return;
    case Term::Kind::kU: out += "u"; return;
    case Term::Kind::kV: out += "v"; return;
    case Term::Kind::kI: out += "I"; return;
    case Term::Kind::kComm:
      out += "[";
      PrintTerm(t.args[0], false, out);
      out += ",";
      PrintTerm(t.args[1], false, out);
      out += "]";
      return;
    case Term::Kind::kInv:
      if (t.args[0].kind == Term::Kind::kMul) {
        out += "(";
        PrintTerm(t.args[0], false, out);
        out += ")";
      } else {
        PrintTerm(t.args[0], false, out);
      }
      out += "^-1";
      return;
    case Term::Kind::kMul:
      if (operand_of_mul_right) out += "(";
      PrintTerm(t.args[0], false, out);
      out += " * ";
      PrintTerm(t.args[1], true, out);
      if (operand_of_mul_right) out += ")";
      return;
  }
}

// `rightmost`: nothing of this formula's enclosing text follows it, so a
// quantifier body may run to the end.
void PrintFormula(const Formula& f, int ctx, bool rightmost, std::string& out) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kEq:
      PrintTerm(f.terms[0], false, out);
      out += " = ";
      PrintTerm(f.terms[1], false, out);
      return;
    case K::kNot:
      out += "~";
      PrintFormula(f.args[0], 4, rightmost, out);
      return;
    case K::kExists:
    case K::kForall: {
      if (!rightmost) out += "(";
      out += f.kind == K::kExists ? "exists" : "forall";
      const Formula* body = &f;
      while (body->kind == f.kind) {
        out += " " + body->var;
        body = &body->args[0];
      }
      out += " . ";
      PrintFormula(*body, 1, true, out);
      if (!rightmost) out += ")";
      return;
    }
    case K::kAnd:
    case K::kOr:
    case K::kImplies: {
      const int p = Prec(f.kind);
      const bool paren = p < ctx;
      const bool inner_right = paren ? true : rightmost;
      if (paren) out += "(";
      const int left_ctx = f.kind == K::kImplies ? p + 1 : p;
      const int right_ctx = f.kind == K::kImplies ? p : p + 1;
      PrintFormula(f.args[0], left_ctx, false, out);
      out += f.kind == K::kAnd ? " & " : f.kind == K::kOr ? " | " : " -> ";
      PrintFormula(f.args[1], right_ctx, inner_right, out);
      if (paren) out += ")";
      return;
    }
  }
}

void FreeVars(const Term& t, const std::multiset<std::string>& bound,
              std::set<std::string>& out) {
  if (t.kind == Term::Kind::kVar && !bound.count(t.name)) out.insert(t.name);
  for (const Term& a : t.args) FreeVars(a, bound, out);
}

void FreeVars(const Formula& f, std::multiset<std::string>& bound,
              std::set<std::string>& out) {
  for (const Term& t : f.terms) FreeVars(t, bound, out);
  const bool quant =
      f.kind == Formula::Kind::kExists || f.kind == Formula::Kind::kForall;
  if (quant) bound.insert(f.var);
  for (const Formula& g : f.args) FreeVars(g, bound, out);
  if (quant) bound.erase(bound.find(f.var));
}

}  // namespace

Formula ParseFormula(std::string_view text) {
  return Parser(Lex(text)).Run();
}

std::string Print(const Formula& f) {
  std::string out;
  PrintFormula(f, 1, true, out);
  return out;
}

std::string Print(const Term& t) {
  std::string out;
  PrintTerm(t, false, out);
  return out;
}

std::set<std::string> FreeVariables(const Formula& f) {
  std::multiset<std::string> bound;
  std::set<std::string> out;
  FreeVars(f, bound, out);
  return out;
}

int QuantifierDepth(const Formula& f) {
  int inner = 0;
  for (const Formula& g : f.args) inner = std::max(inner, QuantifierDepth(g));
  const bool quant =
      f.kind == Formula::Kind::kExists || f.kind == Formula::Kind::kForall;
  return inner + (quant ? 1 : 0);
}

// ---------------------------------------------------------------- evaluation

namespace {

// Variables resolved to slots; one slot per binder plus the free ones.
class Evaluator {
 public:
  Evaluator(const HGroup& g, const Assignment& asg, const Formula& f) : g_(g) {
    std::map<std::string, std::vector<int>> scope;
    for (const auto& [name, value] : asg) {
      if (value >= g.order()) {
        throw Error(ErrorCode::kFieldMismatch,
                    "value of " + name + " is not an element of H(" +
                        g.field().name() + ")");
      }
      scope[name].push_back(static_cast<int>(env_.size()));
      env_.push_back(value);
    }
    root_ = Compile(f, scope);
  }

  bool Run() { return Eval(root_); }

 private:
  struct CTerm {
    Term::Kind kind;
    int slot = -1;
    int a = -1, b = -1;
  };
  struct CForm {
    Formula::Kind kind;
    int ta = -1, tb = -1;
    int a = -1, b = -1;
    int slot = -1;
  };

  int CompileTerm(const Term& t, std::map<std::string, std::vector<int>>& scope) {
    CTerm c{t.kind};
    if (t.kind == Term::Kind::kVar) {
      auto it = scope.find(t.name);
      if (it == scope.end() || it->second.empty()) {
        throw Error(ErrorCode::kUnboundVariable,
                    "variable " + t.name + " is neither bound nor assigned");
      }
      c.slot = it->second.back();
    }
    if (!t.args.empty()) c.a = CompileTerm(t.args[0], scope);
    if (t.args.size() > 1) c.b = CompileTerm(t.args[1], scope);
    terms_.push_back(c);
    return static_cast<int>(terms_.size()) - 1;
  }

  int Compile(const Formula& f, std::map<std::string, std::vector<int>>& scope) {
    CForm c{f.kind};
    if (f.kind == Formula::Kind::kEq) {
      c.ta = CompileTerm(f.terms[0], scope);
      c.tb = CompileTerm(f.terms[1], scope);
    } else if (f.kind == Formula::Kind::kExists ||
               f.kind == Formula::Kind::kForall) {
      c.slot = static_cast<int>(env_.size());
      env_.push_back(0);
      scope[f.var].push_back(c.slot);
      c.a = Compile(f.args[0], scope);
      scope[f.var].pop_back();
    } else {
      c.a = Compile(f.args[0], scope);
      if (f.args.size() > 1) c.b = Compile(f.args[1], scope);
    }
    forms_.push_back(c);
    return static_cast<int>(forms_.size()) - 1;
  }

  Code TermValue(int i) {
    const CTerm& t = terms_[i];
    switch (t.kind) {
      case Term::Kind::kVar: return env_[t.slot];
      case Term::Kind::kU: return g_.u_code();
      case Term::Kind::kV: return g_.v_code();
      case Term::Kind::kI: return g_.identity_code();
      case Term::Kind::kMul: return g_.mul(TermValue(t.a), TermValue(t.b));
      case Term::Kind::kInv: return g_.inv(TermValue(t.a));
      case Term::Kind::kComm: return g_.comm(TermValue(t.a), TermValue(t.b));
    }
    return 0;
  }

  bool Eval(int i) {
    const CForm& f = forms_[i];
    using K = Formula::Kind;
    switch (f.kind) {
      case K::kEq: return TermValue(f.ta) == TermValue(f.tb);
      case K::kNot: return !Eval(f.a);
      case K::kAnd: return Eval(f.a) && Eval(f.b);
      case K::kOr: return Eval(f.a) || Eval(f.b);
      case K::kImplies: return !Eval(f.a) || Eval(f.b);
      case K::kExists:
      case K::kForall: {
        const bool want = f.kind == K::kExists;
        const Code n = static_cast<Code>(g_.order());
        for (Code x = 0; x < n; ++x) {
          env_[f.slot] = x;
          if (Eval(f.a) == want) return want;
        }
        return !want;
      }
    }
    return false;
  }

  const HGroup& g_;
  std::vector<Code> env_;
  std::vector<CTerm> terms_;
  std::vector<CForm> forms_;
  int root_ = -1;
};

}  // namespace

bool Evaluate(const HGroup& group, const Assignment& assignment,
              const Formula& f, std::uint64_t budget) {
  if (!group.field().is_finite()) {
    throw Error(ErrorCode::kInfiniteField,
                "quantifiers over H(" + group.field().name() + ") are unbounded");
  }
  if (group.order() > kMaxEvalGroup) {
    throw Error(ErrorCode::kTooLarge,
                "H(" + group.field().name() + ") has more than 2^12 elements");
  }
  const int depth = QuantifierDepth(f);
  if (depth > kMaxQuantifierDepth) {
    throw Error(ErrorCode::kBudgetExceeded,
                "quantifier depth " + std::to_string(depth) + " exceeds 6");
  }
  std::uint64_t cost = 1;
  for (int i = 0; i < depth; ++i) {
    cost *= group.order();
    if (cost > budget) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "|G|^" + std::to_string(depth) + " exceeds the budget of " +
                      std::to_string(budget));
    }
  }
  Evaluator ev(group, assignment, f);
  return ev.Run();
}

// ---------------------------------------------------------------- literals

namespace {

class LiteralReader {
 public:
  LiteralReader(const HGroup& g, std::string_view s) : g_(g), s_(s) {}

  void Skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool AtEnd() {
    Skip();
    return i_ >= s_.size();
  }
  char PeekChar() {
    Skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }
  void Want(char c) {
    if (PeekChar() != c) Bad(std::string("expected '") + c + "'");
    ++i_;
  }
  [[noreturn]] void Bad(const std::string& what) {
    throw Error(ErrorCode::kParseError,
                what + " at offset " + std::to_string(i_) + " in \"" +
                    std::string(s_) + "\"",
                {static_cast<std::uint32_t>(i_)});
  }

  std::string Name() {
    Skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && IdentStart(s_[i_])) {
      while (i_ < s_.size() && IdentChar(s_[i_])) ++i_;
    }
    if (start == i_) Bad("expected a variable name");
    return std::string(s_.substr(start, i_ - start));
  }

  BigInt Integer() {
    Skip();
    const std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
    const std::size_t digits = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (digits == i_) Bad("expected an integer");
    std::string text(s_.substr(start, i_ - start));
    if (text[0] == '+') text.erase(0, 1);
    return BigInt(text);
  }

  std::int64_t Residue(const BigInt& v) {
    const BigInt p = g_.field().characteristic();
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
  }

  FieldElement Coordinate() {
    const Field& f = g_.field();
    if (!f.is_finite()) {
      BigInt num = Integer();
      BigInt den = 1;
      if (PeekChar() == '/') {
        ++i_;
        den = Integer();
        if (den == 0) Bad("zero denominator");
      }
      return f.fraction(num, den);
    }
    if (PeekChar() == '[') {
      ++i_;
      std::vector<std::int64_t> coeffs;
      if (PeekChar() != ']') {
        coeffs.push_back(Residue(Integer()));
        while (PeekChar() == ',') {
          ++i_;
          coeffs.push_back(Residue(Integer()));
        }
      }
      Want(']');
      if (coeffs.size() > static_cast<std::size_t>(f.degree())) {
        Bad("too many coefficients for " + f.name());
      }
      return f.element(f.from_coeffs(coeffs));
    }
    const std::int64_t c = Residue(Integer());
    return f.element(f.from_int(c));
  }

  HElement Element() {
    Want('(');
    FieldElement a = Coordinate();
    Want(',');
    FieldElement b = Coordinate();
    Want(',');
    FieldElement c = Coordinate();
    Want(')');
    return g_.make(std::move(a), std::move(b), std::move(c));
  }

 private:
  const HGroup& g_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

FieldElement ParseFieldLiteral(const Field& field, std::string_view text) {
  const HGroup group(field);
  LiteralReader r(group, text);
  FieldElement e = r.Coordinate();
  if (!r.AtEnd()) r.Bad("trailing characters");
  return e;
}

HElement ParseElement(const HGroup& group, std::string_view text) {
  LiteralReader r(group, text);
  HElement e = r.Element();
  if (!r.AtEnd()) r.Bad("trailing characters");
  return e;
}

Assignment ParseAssignment(const HGroup& group, std::string_view text) {
  LiteralReader r(group, text);
  Assignment out;
  if (r.AtEnd()) return out;
  while (true) {
    std::string name = r.Name();
    if (IsReserved(name)) r.Bad("cannot assign to " + name);
    r.Want('=');
    HElement e = r.Element();
    if (!out.emplace(name, group.code(e)).second) r.Bad("duplicate " + name);
    if (r.AtEnd()) break;
    r.Want(',');
  }
  return out;
}

// ---------------------------------------------------------------- random

namespace {

Term RandomTerm(Rng& rng, int size, const std::vector<std::string>& scope) {
  if (size <= 1) {
    const std::uint64_t pick = RandomBelow(rng, scope.size() + 3);
    if (pick < scope.size()) return Term::Var(scope[pick]);
    switch (pick - scope.size()) {
      case 0: return Term::U();
      case 1: return Term::V();
      default: return Term::Identity();
    }
  }
  switch (RandomBelow(rng, 3)) {
    case 0: return Term::Mul(RandomTerm(rng, size / 2, scope),
                             RandomTerm(rng, size - size / 2, scope));
    case 1: return Term::Inv(RandomTerm(rng, size - 1, scope));
    default: return Term::Comm(RandomTerm(rng, size / 2, scope),
                               RandomTerm(rng, size - size / 2, scope));
  }
}

Formula RandomFormulaImpl(Rng& rng, int depth, int size,
                          std::vector<std::string>& scope) {
  const std::uint64_t kinds = depth > 0 ? 7 : 5;
  const std::uint64_t pick = size <= 1 ? 0 : RandomBelow(rng, kinds);
  switch (pick) {
    case 0:
      return Formula::Eq(RandomTerm(rng, 1 + RandomBelow(rng, 3), scope),
                         RandomTerm(rng, 1 + RandomBelow(rng, 3), scope));
    case 1: return Formula::Not(RandomFormulaImpl(rng, depth, size - 1, scope));
    case 2:
    case 3:
    case 4: {
      Formula a = RandomFormulaImpl(rng, depth, size / 2, scope);
      Formula b = RandomFormulaImpl(rng, depth, size / 2, scope);
      if (pick == 2) return Formula::And(std::move(a), std::move(b));
      if (pick == 3) return Formula::Or(std::move(a), std::move(b));
      return Formula::Implies(std::move(a), std::move(b));
    }
    default: {
      std::string var = "x" + std::to_string(scope.size());
      scope.push_back(var);
      Formula body = RandomFormulaImpl(rng, depth - 1, size - 1, scope);
      scope.pop_back();
      return pick == 5 ? Formula::Exists(std::move(var), std::move(body))
                       : Formula::Forall(std::move(var), std::move(body));
    }
  }
}

}  // namespace

Formula RandomFormula(Rng& rng, int depth, std::vector<std::string> scope) {
  return RandomFormulaImpl(rng, depth, 6, scope);
}

}  // namespace heisenlab
