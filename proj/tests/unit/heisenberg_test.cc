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

#include <set>

#include "expect_error.h"
#include "heisenlab/heisenberg.h"
#include "heisenlab/random.h"
#include "oracles.h"

namespace heisenlab {
namespace {

HGroup G(const char* spec) { return HGroup(ParseFieldSpec(spec)); }

TEST(HMul, Examples) {
  const HGroup g = G("F3");
  EXPECT_EQ(g.mul(g.u_code(), g.v_code()), g.make_code(1, 1, 1));
  EXPECT_EQ(g.mul(g.v_code(), g.u_code()), g.make_code(1, 1, 0));
  const HGroup g5 = G("F5");
  Rng rng(7);
  for (int i = 0; i < 20; ++i) {
    const Code x = static_cast<Code>(RandomBelow(rng, g5.order()));
    EXPECT_EQ(g5.mul(x, 0), x);
    EXPECT_EQ(g5.mul(0, x), x);
  }
}

TEST(HMul, MatchesMatrixOracle) {
  for (const char* spec : {"F2", "F3", "F4", "F5"}) {
    const HGroup g = G(spec);
    const Code n = static_cast<Code>(g.order());
    for (Code x = 0; x < n; ++x) {
      ASSERT_EQ(g.inv(x), oracle::MatrixInverse(g, x));
      for (Code y = 0; y < n; ++y) {
        ASSERT_EQ(g.mul(x, y), oracle::MatrixProduct(g, x, y)) << spec;
        ASSERT_EQ(g.comm(x, y), oracle::MatrixCommutator(g, x, y)) << spec;
      }
    }
  }
}

TEST(HInv, Examples) {
  const HGroup g3 = G("F3");
  EXPECT_EQ(g3.inv(g3.make_code(1, 1, 0)), g3.make_code(2, 2, 1));
  for (Code c = 0; c < 3; ++c) EXPECT_EQ(g3.inv(g3.make_code(0, 0, c)), g3.make_code(0, 0, (3 - c) % 3));
  const HGroup g5 = G("F5");
  EXPECT_EQ(g5.inv(g5.make_code(1, 2, 3)), g5.make_code(4, 3, 4));
}

TEST(HComm, Examples) {
  for (const char* spec : {"F2", "F3", "F4", "F7", "F9"}) {
    const HGroup g = G(spec);
    EXPECT_EQ(g.comm(g.u_code(), g.v_code()), g.make_code(0, 0, 1));
  }
  const HGroup g5 = G("F5");
  const Field& f = g5.field();
  for (Code x = 0; x < 5; ++x) {
    EXPECT_EQ(g5.comm(g5.make_code(x, 1, 2), g5.make_code(x, 1, 2)), 0u);
    for (Code y = 0; y < 5; ++y)
      EXPECT_EQ(g5.comm(g5.make_code(x, 0, 0), g5.make_code(0, y, 0)),
                g5.make_code(0, 0, f.mul(x, y)));
  }
}

TEST(HComm, AgreesWithDefinition) {
  for (const char* spec : {"F2", "F3", "F4"}) {
    const HGroup g = G(spec);
    const Code n = static_cast<Code>(g.order());
    for (Code x = 0; x < n; ++x)
      for (Code y = 0; y < n; ++y)
        ASSERT_EQ(g.comm(x, y), g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
  }
}

TEST(HGroupLaw, AssociativityExhaustiveSmall) {
  for (const char* spec : {"F2", "F3"}) {
    const HGroup g = G(spec);
    const Code n = static_cast<Code>(g.order());
    for (Code x = 0; x < n; ++x)
      for (Code y = 0; y < n; ++y)
        for (Code z = 0; z < n; ++z)
          ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
  }
}

TEST(HGroupLaw, AssociativitySampledLarge) {
  Rng rng(11);
  for (const char* spec : {"F5", "F9", "F25", "F49", "F64:t^6+t+1", "F101"}) {
    const HGroup g = G(spec);
    for (int i = 0; i < 10000; ++i) {
      const Code x = static_cast<Code>(RandomBelow(rng, g.order()));
      const Code y = static_cast<Code>(RandomBelow(rng, g.order()));
      const Code z = static_cast<Code>(RandomBelow(rng, g.order()));
      ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z))) << spec;
    }
  }
}

TEST(Center, Examples) {
  EXPECT_EQ(G("F2").center().size(), 2u);
  const HGroup g3 = G("F3");
  EXPECT_EQ(g3.center_codes(), (std::vector<Code>{0, 1, 2}));
  const HGroup g4 = G("F4");
  std::set<Code> comms;
  for (Code x = 0; x < 64; ++x)
    for (Code y = 0; y < 64; ++y) comms.insert(g4.comm(x, y));
  EXPECT_EQ(comms.size(), 4u);
  const std::vector<Code> center = g4.center_codes();
  EXPECT_EQ(comms, std::set<Code>(center.begin(), center.end()));
  EXPECT_HL_ERROR(HGroup(Field::Rationals()).center(), ErrorCode::kInfiniteField);
}

TEST(Center, EqualsCommutingElements) {
  for (const char* spec : {"F2", "F3", "F4", "F5"}) {
    const HGroup g = G(spec);
    const Code n = static_cast<Code>(g.order());
    for (Code x = 0; x < n; ++x) {
      bool central = true;
      for (Code y = 0; y < n; ++y) central = central && g.comm(x, y) == 0;
      EXPECT_EQ(central, g.is_central(x)) << spec << " " << x;
    }
  }
}

TEST(Enumerate, SizesAndErrors) {
  EXPECT_EQ(G("F2").enumerate().size(), 8u);
  EXPECT_EQ(G("F3").enumerate().size(), 27u);
  const auto e5 = G("F5").enumerate();
  EXPECT_EQ(e5.size(), 125u);
  const HGroup g5 = G("F5");
  for (Code x = 0; x < 125; ++x) EXPECT_EQ(g5.code(e5[x]), x);
  EXPECT_HL_ERROR(G("F41").enumerate(), ErrorCode::kTooLarge);
  EXPECT_HL_ERROR(HGroup(Field::Rationals()).enumerate(), ErrorCode::kInfiniteField);
}

TEST(ElementOrders, DivideCharacteristicSquared) {
  for (const char* spec : {"F2", "F3", "F4", "F5"}) {
    const HGroup g = G(spec);
    const std::uint64_t p = g.field().characteristic();
    for (Code x = 0; x < g.order(); ++x) {
      Code acc = 0;
      for (std::uint64_t i = 0; i < p * p; ++i) acc = g.mul(acc, x);
      EXPECT_EQ(acc, 0u);
    }
  }
}

TEST(Generation, PrimeFieldsByUV) {
  for (const char* spec : {"F2", "F3", "F5", "F7"}) {
    const HGroup g = G(spec);
    EXPECT_EQ(oracle::ClosureSize(g, {g.u_code(), g.v_code()}), g.order()) << spec;
  }
  const HGroup g4 = G("F4");
  EXPECT_LT(oracle::ClosureSize(g4, {g4.u_code(), g4.v_code()}), g4.order());
}

TEST(Rationals, GroupLawSampled) {
  const HGroup g(Field::Rationals());
  const Field& q = g.field();
  Rng rng(3);
  auto r = [&] {
    return q.fraction(static_cast<std::int64_t>(RandomBelow(rng, 41)) - 20,
                      static_cast<std::int64_t>(RandomBelow(rng, 9)) + 1);
  };
  for (int i = 0; i < 500; ++i) {
    const HElement x = g.make(r(), r(), r()), y = g.make(r(), r(), r()), z = g.make(r(), r(), r());
    ASSERT_EQ(g.mul(g.mul(x, y), z), g.mul(x, g.mul(y, z)));
    ASSERT_EQ(g.mul(x, g.inv(x)), g.identity());
    ASSERT_EQ(g.comm(x, y), g.mul(g.mul(g.inv(x), g.inv(y)), g.mul(x, y)));
    // Torsion-free: no nontrivial x has x^k = 1 for small k.
    if (x == g.identity()) continue;
    HElement pow = x;
    for (int k = 2; k <= 10; ++k) {
      pow = g.mul(pow, x);
      ASSERT_NE(pow, g.identity());
    }
  }
  EXPECT_EQ(g.mul(g.u(), g.v()), g.make(q.one(), q.one(), q.one()));
  EXPECT_HL_ERROR(g.code(g.u()), ErrorCode::kInfiniteField);
}

TEST(HMul, FieldMismatch) {
  const HGroup g3 = G("F3");
  const HGroup q(Field::Rationals());
  EXPECT_HL_ERROR(g3.mul(g3.u(), q.u()), ErrorCode::kFieldMismatch);
  EXPECT_HL_ERROR(g3.decode(27), ErrorCode::kFieldMismatch);
}

TEST(FindHomFailure, DetectsBrokenTables) {
  const HGroup g = G("F3");
  FnTable id(27);
  for (Code x = 0; x < 27; ++x) id[x] = x;
  EXPECT_FALSE(FindHomFailure(g, g, id).has_value());
  FnTable broken = id;
  std::swap(broken[1], broken[2]);
  EXPECT_TRUE(FindHomFailure(g, g, broken).has_value());
  EXPECT_EQ(FindRepeatedValue(id, 27), std::nullopt);
  broken[1] = broken[2];
  EXPECT_TRUE(FindRepeatedValue(broken, 27).has_value());
}

}  // namespace
}  // namespace heisenlab
