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
#include "heisenlab/interp.h"

namespace heisenlab {
namespace {

InterpContext Ctx(const char* spec) { return InterpContext::Make(HGroup(ParseFieldSpec(spec))); }

Code Z(const InterpContext& ctx, Code c) { return ctx.group.make_code(0, 0, c); }

TEST(InterpContext, Constants) {
  const InterpContext ctx = Ctx("F3");
  EXPECT_EQ(ctx.u, ctx.group.make_code(1, 0, 0));
  EXPECT_EQ(ctx.v, ctx.group.make_code(0, 1, 0));
  EXPECT_EQ(ctx.domain, ctx.group.center_codes());
  // C(u) = {b = 0}, C(v) = {a = 0}.
  EXPECT_EQ(ctx.centralizer_u.size(), 9u);
  for (Code w : ctx.centralizer_u) EXPECT_EQ(ctx.group.b_of(w), 0u);
  for (Code w : ctx.centralizer_v) EXPECT_EQ(ctx.group.a_of(w), 0u);
  EXPECT_HL_ERROR(InterpContext::Make(HGroup(Field::Rationals())), ErrorCode::kInfiniteField);
  EXPECT_HL_ERROR(InterpContext::Make(HGroup(ParseFieldSpec("F41"))), ErrorCode::kTooLarge);
}

TEST(Oplus, Examples) {
  const InterpContext c3 = Ctx("F3");
  EXPECT_EQ(Oplus(c3, Z(c3, 1), Z(c3, 2)), Z(c3, 0));
  for (Code z = 0; z < 3; ++z) EXPECT_EQ(Oplus(c3, Z(c3, 0), Z(c3, z)), Z(c3, z));
  const InterpContext c5 = Ctx("F5");
  for (Code x : c5.domain)
    for (Code y : c5.domain) EXPECT_EQ(Oplus(c5, x, y), Oplus(c5, y, x));
  EXPECT_HL_ERROR(Oplus(c3, c3.u, Z(c3, 1)), ErrorCode::kNotCentral);
  EXPECT_HL_ERROR(Oplus(c3, Z(c3, 1), 27), ErrorCode::kNotCentral);
}

TEST(OtimesHolds, Examples) {
  const InterpContext c3 = Ctx("F3");
  const OtimesResult r = OtimesHolds(c3, Z(c3, 2), Z(c3, 2), Z(c3, 1));
  ASSERT_TRUE(r.holds);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness->first, c3.group.make_code(2, 0, 0));
  EXPECT_EQ(r.witness->second, c3.group.make_code(0, 2, 0));
  const OtimesResult ex = OtimesHolds(c3, Z(c3, 2), Z(c3, 2), Z(c3, 1), WitnessSearch::kExhaustive);
  EXPECT_EQ(ex.witness, r.witness);

  for (const char* spec : {"F2", "F4", "F5"}) {
    const InterpContext ctx = Ctx(spec);
    for (Code y : ctx.domain) EXPECT_TRUE(OtimesHolds(ctx, Z(ctx, 0), y, Z(ctx, 0)).holds);
  }
  const InterpContext c2 = Ctx("F2");
  const OtimesResult no = OtimesHolds(c2, Z(c2, 1), Z(c2, 1), Z(c2, 0), WitnessSearch::kExhaustive);
  EXPECT_FALSE(no.holds);
  EXPECT_FALSE(no.witness.has_value());
  EXPECT_HL_ERROR(OtimesHolds(c2, c2.u, Z(c2, 1), Z(c2, 1)), ErrorCode::kNotCentral);
}

TEST(OtimesHolds, GraphOfMultiplication) {
  for (const char* spec : {"F2", "F3", "F4", "F5", "F7", "F8"}) {
    const InterpContext ctx = Ctx(spec);
    const Field& k = ctx.group.field();
    for (Code x = 0; x < k.order(); ++x) {
      for (Code y = 0; y < k.order(); ++y) {
        int hits = 0;
        for (Code z = 0; z < k.order(); ++z) {
          const OtimesResult r = OtimesHolds(ctx, Z(ctx, x), Z(ctx, y), Z(ctx, z));
          ASSERT_EQ(r.holds, k.mul(x, y) == z) << spec << " " << x << "*" << y << "=" << z;
          if (r.holds) {
            ++hits;
            ASSERT_TRUE(WitnessSatisfies(ctx, Z(ctx, x), Z(ctx, y), Z(ctx, z), r.witness->first,
                                         r.witness->second));
          }
        }
        EXPECT_EQ(hits, 1);
      }
      // The interpreted 1 is a multiplicative identity.
      EXPECT_TRUE(OtimesHolds(ctx, Z(ctx, 1), Z(ctx, x), Z(ctx, x)).holds);
    }
  }
}

TEST(OtimesHolds, FilteredMatchesExhaustive) {
  for (const char* spec : {"F2", "F3"}) {
    const InterpContext ctx = Ctx(spec);
    for (Code x : ctx.domain)
      for (Code y : ctx.domain)
        for (Code z : ctx.domain) {
          const OtimesResult a = OtimesHolds(ctx, x, y, z, WitnessSearch::kFiltered);
          const OtimesResult b = OtimesHolds(ctx, x, y, z, WitnessSearch::kExhaustive);
          EXPECT_EQ(a.holds, b.holds);
          EXPECT_EQ(a.witness, b.witness);
        }
  }
}

TEST(ReconstructField, MatchesSourceTables) {
  for (const char* spec : {"F2", "F3", "F4", "F5", "F7", "F8"}) {
    const InterpContext ctx = Ctx(spec);
    const Field& k = ctx.group.field();
    const ReconstructedField r = ReconstructField(ctx);
    for (Code x = 0; x < k.order(); ++x)
      for (Code y = 0; y < k.order(); ++y) {
        EXPECT_EQ(r.add[x][y], k.add(x, y));
        EXPECT_EQ(r.mul[x][y], k.mul(x, y));
        for (Code z = 0; z < k.order(); ++z)
          EXPECT_EQ(r.mul[x][r.add[y][z]], r.add[r.mul[x][y]][r.mul[x][z]]);
      }
  }
  EXPECT_HL_ERROR(ReconstructField(Ctx("F9")), ErrorCode::kTooLarge);
}

TEST(ReconstructField, F4IsCharacteristicTwoWithCyclicUnits) {
  const ReconstructedField r = ReconstructField(Ctx("F4"));
  for (Code x = 0; x < 4; ++x) EXPECT_EQ(r.add[x][x], 0u);
  bool cyclic = false;
  for (Code g = 1; g < 4; ++g) {
    const Code g2 = r.mul[g][g], g3 = r.mul[g2][g];
    if (g2 != 1 && g3 == 1) cyclic = true;
  }
  EXPECT_TRUE(cyclic);
  EXPECT_EQ(r.mul[3][3], 2u);  // (t+1)^2 = t with t^2+t+1
}

TEST(CheckInterpretation, AllTriples) {
  for (const char* spec : {"F2", "F3", "F4", "F5"}) {
    const InterpContext ctx = Ctx(spec);
    const InterpCheck c = CheckInterpretation(ctx);
    const std::uint64_t q = ctx.group.field().order();
    EXPECT_EQ(c.total, q * q * q);
    EXPECT_EQ(c.passed, c.total);
    EXPECT_FALSE(c.first_failure.has_value());
  }
  for (const char* spec : {"F3", "F5"}) {
    const InterpCheck e = CheckInterpretation(Ctx(spec), WitnessSearch::kExhaustive);
    EXPECT_EQ(e.passed, e.total) << spec;
  }
}

}  // namespace
}  // namespace heisenlab
