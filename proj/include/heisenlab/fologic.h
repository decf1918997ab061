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

// First-order formulas in the language (*, ^-1, u, v, I) of groups with two
// constants, evaluated by brute force over finite H(K).
//
// Grammar, loosest binding first:
//
//   formula  := disj [ '->' formula ]              right associative
//   disj     := conj { '|' conj }
//   conj     := unary { '&' unary }
//   unary    := '~' unary | quant | atom
//   quant    := ('exists' | 'forall') ident { ident } '.' formula
//   atom     := '(' formula ')' | term '=' term
//   term     := factor { '*' factor }
//   factor   := primary { '^-1' }
//   primary  := ident | 'u' | 'v' | 'I' | '[' term ',' term ']' | '(' term ')'
//   ident    := [A-Za-z][A-Za-z0-9']*   (not u, v, I, exists, forall)
//
// A quantifier body extends as far right as possible. There is no
// quantifier-elimination fast path: H(K) does not admit elimination, so
// quantifiers are always expanded over the whole group.

#ifndef HEISENLAB_FOLOGIC_H_
#define HEISENLAB_FOLOGIC_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "heisenlab/heisenberg.h"
#include "heisenlab/random.h"

namespace heisenlab {

struct Term {
  enum class Kind { kVar, kU, kV, kI, kMul, kInv, kComm };
  Kind kind = Kind::kI;
  std::string name;        // kVar
  std::vector<Term> args;  // kMul, kComm: 2; kInv: 1

  static Term Var(std::string name);
  static Term U();
  static Term V();
  static Term Identity();
  static Term Mul(Term x, Term y);
  static Term Inv(Term x);
  static Term Comm(Term x, Term y);

  friend bool operator==(const Term&, const Term&) = default;
};

struct Formula {
  enum class Kind { kEq, kNot, kAnd, kOr, kImplies, kExists, kForall };
  Kind kind = Kind::kEq;
  std::vector<Term> terms;    // kEq: 2
  std::vector<Formula> args;  // kNot, kExists, kForall: 1; binary: 2
  std::string var;            // quantifiers

  static Formula Eq(Term x, Term y);
  static Formula Not(Formula f);
  static Formula And(Formula f, Formula g);
  static Formula Or(Formula f, Formula g);
  static Formula Implies(Formula f, Formula g);
  static Formula Exists(std::string var, Formula f);
  static Formula Forall(std::string var, Formula f);

  friend bool operator==(const Formula&, const Formula&) = default;
};

// Errors: kSyntaxError with "line L, column C" and the expected tokens.
Formula ParseFormula(std::string_view text);

// Minimal parentheses; ParseFormula(Print(f)) == f.
std::string Print(const Formula& f);
std::string Print(const Term& t);

std::set<std::string> FreeVariables(const Formula& f);
int QuantifierDepth(const Formula& f);

using Assignment = std::map<std::string, Code>;

inline constexpr std::uint64_t kMaxEvalGroup = 1u << 12;
inline constexpr int kMaxQuantifierDepth = 6;
inline constexpr std::uint64_t kDefaultBudget = 100'000'000;

// Tarskian semantics with short-circuiting. Errors: kInfiniteField,
// kTooLarge (|G| > 2^12), kUnboundVariable, kFieldMismatch (assigned code
// outside G), kBudgetExceeded (depth > 6 or |G|^depth > budget).
bool Evaluate(const HGroup& group, const Assignment& assignment,
              const Formula& f, std::uint64_t budget = kDefaultBudget);

// "X=(0,0,1),Y=(0,0,[1,2])": elements (a,b,c) whose coordinates are
// integers (reduced into the prime field) or coefficient lists [c0,...].
// Errors: kParseError, kFieldMismatch.
Assignment ParseAssignment(const HGroup& group, std::string_view text);
HElement ParseElement(const HGroup& group, std::string_view text);
// One coordinate: "2", "-1", "[1,2]", or "3/4" over Q.
FieldElement ParseFieldLiteral(const Field& field, std::string_view text);

// Random formula whose free variables are among `scope`, with quantifier
// depth at most `depth`, over variable names x0, x1, ...
Formula RandomFormula(Rng& rng, int depth, std::vector<std::string> scope);

}  // namespace heisenlab

#endif  // HEISENLAB_FOLOGIC_H_
