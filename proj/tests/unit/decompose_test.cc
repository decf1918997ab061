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
#include "heisenlab/automorphisms.h"
#include "heisenlab/decompose.h"
#include "oracles.h"

namespace heisenlab {
namespace {

HGroup G(const char* spec) { return HGroup(ParseFieldSpec(spec)); }

FnTable Identity(std::uint64_t n) {
  FnTable t(n);
  for (Code x = 0; x < n; ++x) t[x] = x;
  return t;
}

// Table of (a,b,c) -> (fa(a), fb(b), fc(c)) on H(K).
FnTable Coordinatewise(const HGroup& g, const FnTable& fa, const FnTable& fb,
                       const FnTable& fc) {
  FnTable t(g.order());
  for (Code x = 0; x < g.order(); ++x)
    t[x] = g.make_code(fa[g.a_of(x)], fb[g.b_of(x)], fc[g.c_of(x)]);
  return t;
}

TEST(GroupHomTable, MakeValidates) {
  const HGroup g3 = G("F3");
  EXPECT_NO_THROW(GroupHomTable::Make(g3, g3, Identity(27)));
  FnTable broken = Identity(27);
  std::swap(broken[g3.u_code()], broken[g3.v_code()]);
  EXPECT_HL_ERROR(GroupHomTable::Make(g3, g3, broken), ErrorCode::kInvalidHomomorphism);
  EXPECT_HL_ERROR(GroupHomTable::Make(g3, g3, FnTable(27, 0)), ErrorCode::kNotInjective);
  EXPECT_HL_ERROR(GroupHomTable::Make(g3, g3, FnTable(26, 0)), ErrorCode::kShapeMismatch);
  EXPECT_HL_ERROR(GroupHomTable::Make(G("F2"), g3, FnTable(8, 0)),
                  ErrorCode::kCharacteristicMismatch);
  const HGroup q(Field::Rationals());
  EXPECT_HL_ERROR(GroupHomTable::Make(q, q, {}), ErrorCode::kInfiniteField);
}

TEST(GroupHomTable, LargeSourceUsesGeneratorPairs) {
  // 343^2 pairs stay below the limit; 2401^2 do not.
  for (const char* spec : {"F7", "F49"}) {
    const HGroup g = G(spec);
    const FieldHom fr = Frobenius(g.field());
    const FnTable t = Coordinatewise(g, fr.table(), fr.table(), fr.table());
    EXPECT_NO_THROW(GroupHomTable::Make(g, g, t)) << spec;
    FnTable bad = t;
    std::swap(bad[g.make_code(1, 1, 0)], bad[g.make_code(1, 1, 1)]);
    EXPECT_HL_ERROR(GroupHomTable::Make(g, g, bad), ErrorCode::kInvalidHomomorphism);
  }
}

TEST(ExtendGeneratorImages, Examples) {
  const HGroup g3 = G("F3"), g9 = G("F9");
  EXPECT_EQ(ExtendGeneratorImages(g3, g3, g3.u_code(), g3.v_code()), Identity(27));
  const FnTable sw = ExtendGeneratorImages(g3, g3, g3.v_code(), g3.u_code());
  EXPECT_TRUE(IsAutomorphism(g3, sw));
  const FnTable emb = ExtendGeneratorImages(g3, g9, g9.u_code(), g9.v_code());
  EXPECT_EQ(emb, HFunctor(CanonicalEmbedding(g3.field(), g9.field())).table);
  EXPECT_HL_ERROR(ExtendGeneratorImages(g9, g9, g9.u_code(), g9.v_code()),
                  ErrorCode::kNotPrimeField);
}

TEST(HFunctor, Examples) {
  const HGroup g3 = G("F3");
  EXPECT_EQ(HFunctor(FieldHom::Identity(g3.field())).table, Identity(27));
  const HGroup g4 = G("F4");
  const FieldHom fr = Frobenius(g4.field());
  const GroupHomTable h = HFunctor(fr);
  for (Code x = 0; x < 64; ++x) {
    const Field& f = g4.field();
    EXPECT_EQ(h.table[x], g4.make_code(f.mul(g4.a_of(x), g4.a_of(x)), f.mul(g4.b_of(x), g4.b_of(x)),
                                       f.mul(g4.c_of(x), g4.c_of(x))));
  }
  EXPECT_FALSE(FindHomFailure(g4, g4, h.table).has_value());
  const GroupHomTable e = HFunctor(CanonicalEmbedding(g3.field(), ParseFieldSpec("F9")));
  EXPECT_EQ(e.table.size(), 27u);
  EXPECT_FALSE(FindRepeatedValue(e.table, 729).has_value());
}

TEST(ExtractCoordinateMaps, Identity) {
  const HGroup g3 = G("F3");
  const CoordinateMaps m = ExtractCoordinateMaps(GroupHomTable::Make(g3, g3, Identity(27)));
  const FnTable id = Identity(3), zero(3, 0);
  EXPECT_EQ(m.f1, id);
  EXPECT_EQ(m.g1, zero);
  EXPECT_EQ(m.i1, zero);
  EXPECT_EQ(m.f2, zero);
  EXPECT_EQ(m.g2, id);
  EXPECT_EQ(m.i2, zero);
  EXPECT_EQ(m.i, id);
  const Field& f = g3.field();
  for (Code x = 0; x < 3; ++x)
    for (Code y = 0; y < 3; ++y)
      EXPECT_EQ(m.i[f.mul(x, y)], f.sub(f.mul(m.f1[x], m.g2[y]), f.mul(m.f2[y], m.g1[x])));
}

TEST(ExtractCoordinateMaps, Frobenius) {
  const HGroup g4 = G("F4");
  const FieldHom fr = Frobenius(g4.field());
  const CoordinateMaps m = ExtractCoordinateMaps(HFunctor(fr));
  EXPECT_EQ(m.i, fr.table());
  EXPECT_EQ(m.f1, fr.table());
  EXPECT_EQ(m.g2, fr.table());
}

TEST(Decompose, Identity) {
  const HGroup g3 = G("F3");
  const Decomposition d = Decompose(GroupHomTable::Make(g3, g3, Identity(27)));
  EXPECT_EQ(d.theta, FieldHom::Identity(g3.field()));
  EXPECT_EQ(d.d, 1u);
  EXPECT_EQ(d.params.matrix, Mat2{});
  EXPECT_EQ(d.params.psi1, FnTable(3, 0));
  EXPECT_EQ(d.params.psi2, FnTable(3, 0));
  EXPECT_TRUE(d.verified);
}

TEST(Decompose, FrobeniusOnF4) {
  const HGroup g4 = G("F4");
  const FieldHom fr = Frobenius(g4.field());
  const Decomposition d = Decompose(HFunctor(fr));
  EXPECT_EQ(d.theta, fr);
  EXPECT_EQ(d.params.matrix, Mat2{});
  EXPECT_EQ(d.d, 1u);
}

TEST(Decompose, RoundTripRecoversThetaAndTable) {
  Rng rng(17);
  const std::pair<const char*, const char*> cases[] = {
      {"F3", "F9"}, {"F2", "F4"}, {"F2", "F8"}, {"F4", "F16"}, {"F9", "F9"}, {"F5", "F25"}};
  for (const auto& [ks, ms] : cases) {
    const Field k = ParseFieldSpec(ks), m = ParseFieldSpec(ms);
    for (const FieldHom& theta : oracle::AllEmbeddings(k, m)) {
      for (int i = 0; i < 8; ++i) {
        const AutParams phi = RandomAutParams(m, rng);
        const GroupHomTable f = Compose(phi, theta);
        const Decomposition d = Decompose(f);
        EXPECT_EQ(d.theta, theta) << ks << " -> " << ms;
        EXPECT_EQ(Det(m, d.params.matrix), d.d);
        EXPECT_EQ(d.params.matrix, phi.matrix);
        EXPECT_EQ(Compose(d.params, d.theta).table, f.table);
        // Psi_1, Psi_2 agree with the input on theta(K).
        for (Code x = 0; x < k.order(); ++x) {
          EXPECT_EQ(d.params.psi1[theta(x)], phi.psi1[theta(x)]);
          EXPECT_EQ(d.params.psi2[theta(x)], phi.psi2[theta(x)]);
        }
      }
    }
  }
}

TEST(Decompose, FiftyRandomOverF3InF9) {
  Rng rng(50);
  const Field f3 = Field::Prime(3), f9 = ParseFieldSpec("F9");
  const FieldHom theta = CanonicalEmbedding(f3, f9);
  for (int i = 0; i < 50; ++i) {
    const GroupHomTable f = Compose(RandomAutParams(f9, rng), theta);
    const Decomposition d = Decompose(f);
    EXPECT_EQ(d.theta, theta);
    EXPECT_EQ(Compose(d.params, d.theta).table, f.table);
  }
}

// Every automorphism found by the independent searches, not only those built
// by Compose, is Phi o H(theta). Over F4 half of them need theta = Frobenius.
TEST(Decompose, EveryAutomorphismOfSmallFields) {
  for (const char* spec : {"F2", "F3", "F4"}) {
    const HGroup g = G(spec);
    const std::vector<FnTable> all = g.field().degree() == 1
                                         ? AutEnumerateBruteforce(g)
                                         : AutEnumerateOverBasis(g);
    std::set<FnTable> thetas;
    for (const FnTable& table : all) {
      const Decomposition d = Decompose(GroupHomTable::Make(g, g, table));
      ASSERT_TRUE(d.verified) << spec;
      ASSERT_EQ(Compose(d.params, d.theta).table, table) << spec;
      thetas.insert(d.theta.table());
    }
    EXPECT_EQ(thetas.size(), static_cast<std::size_t>(g.field().degree())) << spec;
  }
}

TEST(Decompose, ErrorPaths) {
  const HGroup g3 = G("F3");
  const FnTable id3 = Identity(3), zero3(3, 0);

  // A central element sent outside the center.
  FnTable t = Identity(27);
  t[g3.make_code(0, 0, 1)] = g3.u_code();
  EXPECT_HL_ERROR(Decompose(GroupHomTable::Unchecked(g3, g3, t)), ErrorCode::kCenterNotPreserved);

  // i(1) = 2 while f1(1) g2(1) = 1.
  t = Identity(27);
  t[g3.make_code(0, 0, 1)] = g3.make_code(0, 0, 2);
  EXPECT_HL_ERROR(Decompose(GroupHomTable::Unchecked(g3, g3, t)), ErrorCode::kCommutatorIdentity);

  // Everything to the identity element: d = 0.
  EXPECT_HL_ERROR(Decompose(GroupHomTable::Unchecked(g3, g3, FnTable(27, 0))),
                  ErrorCode::kDegenerateD);

  // x -> x^2 is multiplicative but not additive: identities hold, theta fails.
  const FnTable sq{0, 1, 1};
  EXPECT_HL_ERROR(Decompose(GroupHomTable::Unchecked(g3, g3, Coordinatewise(g3, sq, sq, sq))),
                  ErrorCode::kThetaNotHom);

  // Coordinate families are right but one other element is not.
  t = Identity(27);
  std::swap(t[g3.make_code(1, 1, 0)], t[g3.make_code(1, 1, 1)]);
  EXPECT_HL_ERROR(Decompose(GroupHomTable::Unchecked(g3, g3, t)),
                  ErrorCode::kRecompositionMismatch);
}

TEST(Compose, Examples) {
  const HGroup g3 = G("F3");
  const AutParams id{Mat2{}, FnTable(3, 0), FnTable(3, 0)};
  EXPECT_EQ(Compose(id, FieldHom::Identity(g3.field())).table, Identity(27));
  Rng rng(4);
  const Field f2 = Field::Prime(2), f4 = ParseFieldSpec("F4");
  const GroupHomTable f = Compose(RandomAutParams(f4, rng), CanonicalEmbedding(f2, f4));
  EXPECT_EQ(f.table.size(), 8u);
  EXPECT_FALSE(FindRepeatedValue(f.table, 64).has_value());
  EXPECT_FALSE(FindHomFailure(f.source, f.target, f.table).has_value());
  EXPECT_HL_ERROR(Compose(AutParams{Mat2{1, 1, 1, 1}, FnTable(4, 0), FnTable(4, 0)},
                          CanonicalEmbedding(f2, f4)),
                  ErrorCode::kInvalidParams);
}

TEST(Compose, CenterGoesToCenter) {
  Rng rng(8);
  const Field f3 = Field::Prime(3), f27 = ParseFieldSpec("F27");
  for (const FieldHom& theta : oracle::AllEmbeddings(f3, f27)) {
    const GroupHomTable f = Compose(RandomAutParams(f27, rng), theta);
    for (Code z = 0; z < 3; ++z) EXPECT_TRUE(f.target.is_central(f.table[z]));
  }
}

}  // namespace
}  // namespace heisenlab
