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


#include <gtest/gtest.h>

#include "expect_error.h"
#include "heisenlab/fologic.h"
#include "heisenlab/interp.h"

namespace heisenlab {
namespace {

HGroup G(const char* spec) { return HGroup(ParseFieldSpec(spec)); }

constexpr const char* kOtimes =
    "exists x' y' . [x',u]=I & [y',v]=I & [x',v]=X & [u,y']=Y & [x',y']=Z";

std::string SyntaxMessage(std::string_view text) {
  try {
    ParseFormula(text);
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    return e.what();
  }
  ADD_FAILURE() << "no syntax error for " << text;
  return "";
}

TEST(Parse, Commutator) {
  EXPECT_EQ(ParseFormula("[x,u] = I"),
            Formula::Eq(Term::Comm(Term::Var("x"), Term::U()), Term::Identity()));
}

TEST(Parse, OtimesFormula) {
  const Formula f = ParseFormula(kOtimes);
  EXPECT_EQ(f.kind, Formula::Kind::kExists);
  EXPECT_EQ(f.var, "x'");
  ASSERT_EQ(f.args.size(), 1u);
  EXPECT_EQ(f.args[0].kind, Formula::Kind::kExists);
  EXPECT_EQ(f.args[0].var, "y'");
  EXPECT_EQ(FreeVariables(f), (std::set<std::string>{"X", "Y", "Z"}));
  EXPECT_EQ(QuantifierDepth(f), 2);
}

TEST(Parse, Precedence) {
  const Term a = Term::Var("a"), b = Term::Var("b");
  const Formula eq = Formula::Eq(a, b);
  // ~ > & > | > ->, and -> is right associative.
  EXPECT_EQ(ParseFormula("~a=b & a=b | a=b -> a=b -> a=b"),
            Formula::Implies(Formula::Or(Formula::And(Formula::Not(eq), eq), eq),
                             Formula::Implies(eq, eq)));
  EXPECT_EQ(ParseFormula("a*b*a = a^-1^-1"),
            Formula::Eq(Term::Mul(Term::Mul(a, b), a), Term::Inv(Term::Inv(a))));
  // A quantifier body extends to the right.
  EXPECT_EQ(ParseFormula("exists x . a=b & a=b"),
            Formula::Exists("x", Formula::And(eq, eq)));
  EXPECT_EQ(ParseFormula("(exists x . a=b) & a=b"),
            Formula::And(Formula::Exists("x", eq), eq));
  EXPECT_EQ(ParseFormula("((a) = (b))"), eq);
}

TEST(Parse, CommentsAndWhitespace) {
  EXPECT_EQ(ParseFormula("# group identity\nforall x .\n  x * I = x  # right unit\n"),
            ParseFormula("forall x . x*I = x"));
}

TEST(Parse, SyntaxErrors) {
  EXPECT_NE(SyntaxMessage("forall x . x = ").find("line 1, column 16"), std::string::npos);
  const std::string multi = SyntaxMessage("exists x .\n  x = = u");
  EXPECT_NE(multi.find("line 2, column 7"), std::string::npos) << multi;
  EXPECT_NE(multi.find("expected one of"), std::string::npos);
  EXPECT_NE(SyntaxMessage("exists . x = u").find("identifier"), std::string::npos);
  SyntaxMessage("x = u)");
  SyntaxMessage("[x u] = I");
  SyntaxMessage("x ^ 2 = I");
  SyntaxMessage("u = v &");
  SyntaxMessage("forall u . u = u");  // u is a constant
  SyntaxMessage("x = y $");
  SyntaxMessage("");
}

TEST(Print, RoundTripsRandomFormulas) {
  Rng rng(123);
  for (int i = 0; i < 500; ++i) {
    const Formula f = RandomFormula(rng, 3, {"X", "Y"});
    const std::string text = Print(f);
    ASSERT_EQ(ParseFormula(text), f) << text;
    EXPECT_EQ(Print(ParseFormula(text)), text);
    EXPECT_LE(QuantifierDepth(f), 3);
    for (const std::string& v : FreeVariables(f)) EXPECT_TRUE(v == "X" || v == "Y") << text;
  }
}

TEST(Evaluate, Examples) {
  EXPECT_TRUE(Evaluate(G("F2"), {}, ParseFormula("exists x y . ~([x,y] = I)")));
  EXPECT_TRUE(Evaluate(G("F3"), {}, ParseFormula("forall x . x * I = x")));
  EXPECT_FALSE(Evaluate(G("F3"), {}, ParseFormula("forall x y . x*y = y*x")));
  EXPECT_TRUE(Evaluate(G("F3"), {}, ParseFormula("[u,v] * [u,v] * [u,v] = I")));
  EXPECT_FALSE(Evaluate(G("F2"), {}, ParseFormula("u * u = I -> v = I")));
}

TEST(Evaluate, GroupAxioms) {
  const char* axioms[] = {
      "forall x y z . (x*y)*z = x*(y*z)",
      "forall x . x*I = x & I*x = x",
      "forall x . x*x^-1 = I & x^-1*x = I",
      "forall x y . [x,y] = x^-1*y^-1*x*y",
  };
  for (const char* spec : {"F2", "F3", "F4", "F5"}) {
    for (const char* a : axioms) EXPECT_TRUE(Evaluate(G(spec), {}, ParseFormula(a))) << spec << " " << a;
  }
  // The center is the set of commutators.
  EXPECT_TRUE(Evaluate(G("F3"), {},
                       ParseFormula("forall z . (forall g . z*g = g*z) -> exists x y . [x,y] = z")));
}

TEST(Evaluate, MatchesOtimesOracle) {
  const Formula otimes = ParseFormula(kOtimes);
  const Formula oplus = ParseFormula("X*Y = Z");
  for (const char* spec : {"F2", "F3"}) {
    const InterpContext ctx = InterpContext::Make(G(spec));
    for (Code x : ctx.domain)
      for (Code y : ctx.domain)
        for (Code z : ctx.domain) {
          const Assignment asg{{"X", x}, {"Y", y}, {"Z", z}};
          EXPECT_EQ(Evaluate(ctx.group, asg, otimes), OtimesHolds(ctx, x, y, z).holds);
          EXPECT_EQ(Evaluate(ctx.group, asg, oplus), Oplus(ctx, x, y) == z);
        }
  }
}

TEST(Evaluate, QuantifierDuality) {
  Rng rng(0);
  const HGroup g = G("F2");
  for (int i = 0; i < 100; ++i) {
    const Formula body = RandomFormula(rng, 2, {"x0"});
    const bool lhs = Evaluate(g, {}, Formula::Not(Formula::Exists("x0", body)));
    const bool rhs = Evaluate(g, {}, Formula::Forall("x0", Formula::Not(body)));
    ASSERT_EQ(lhs, rhs) << Print(body);
    ASSERT_EQ(Evaluate(g, {}, Formula::Not(Formula::Forall("x0", body))),
              Evaluate(g, {}, Formula::Exists("x0", Formula::Not(body))));
  }
}

TEST(Evaluate, Errors) {
  const HGroup g3 = G("F3");
  EXPECT_HL_ERROR(Evaluate(g3, {}, ParseFormula("x = I")), ErrorCode::kUnboundVariable);
  EXPECT_HL_ERROR(Evaluate(g3, {{"x", 27}}, ParseFormula("x = I")), ErrorCode::kFieldMismatch);
  EXPECT_HL_ERROR(Evaluate(HGroup(Field::Rationals()), {}, ParseFormula("u = u")),
                  ErrorCode::kInfiniteField);
  EXPECT_HL_ERROR(Evaluate(G("F17"), {}, ParseFormula("u = u")), ErrorCode::kTooLarge);
  EXPECT_HL_ERROR(Evaluate(G("F2"), {}, ParseFormula("forall a b c d e f g . a = a")),
                  ErrorCode::kBudgetExceeded);
  // 27^3 = 19683 > 10000.
  EXPECT_HL_ERROR(Evaluate(g3, {}, ParseFormula("forall a b c . a = a"), 10000),
                  ErrorCode::kBudgetExceeded);
  EXPECT_TRUE(Evaluate(g3, {}, ParseFormula("forall a b c . a = a"), 19683));
  // Bound variables shadow the assignment.
  EXPECT_TRUE(Evaluate(g3, {{"x", 1}}, ParseFormula("exists x . x = u")));
}

TEST(Assignment, Parse) {
  const HGroup g9 = G("F9");
  const Assignment a = ParseAssignment(g9, "X=(0,0,1), Y=(0,0,[1,2]),Z=(-1,4,[0,1])");
  EXPECT_EQ(a.at("X"), g9.make_code(0, 0, 1));
  EXPECT_EQ(a.at("Y"), g9.make_code(0, 0, 7));
  EXPECT_EQ(a.at("Z"), g9.make_code(2, 1, 3));
  EXPECT_TRUE(ParseAssignment(g9, "").empty());
  EXPECT_HL_ERROR(ParseAssignment(g9, "X=(0,0)"), ErrorCode::kParseError);
  EXPECT_HL_ERROR(ParseAssignment(g9, "X=(0,0,[1,2,3])"), ErrorCode::kParseError);
  EXPECT_HL_ERROR(ParseAssignment(g9, "X=(0,0,1),X=(0,0,1)"), ErrorCode::kParseError);
  const HGroup q(Field::Rationals());
  const HElement e = ParseElement(q, "(1/2, -3, 4/6)");
  EXPECT_EQ(e.a, q.field().fraction(1, 2));
  EXPECT_EQ(e.c, q.field().fraction(2, 3));
  EXPECT_EQ(ParseFieldLiteral(q.field(), "3/-6"), q.field().fraction(-1, 2));
  EXPECT_HL_ERROR(ParseFieldLiteral(q.field(), "1/0"), ErrorCode::kParseError);
}

}  // namespace
}  // namespace heisenlab
