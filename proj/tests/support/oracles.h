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

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the closed-form code paths it is used to check.

#ifndef HEISENLAB_TESTS_ORACLES_H_
#define HEISENLAB_TESTS_ORACLES_H_

#include <array>
#include <cstdint>
#include <vector>

#include "heisenlab/central_ext.h"
#include "heisenlab/field.h"
#include "heisenlab/field_hom.h"
#include "heisenlab/heisenberg.h"
#include "heisenlab/random.h"

namespace heisenlab::oracle {

// ---- 3x3 matrices over a finite field, entries as field codes.
using Mat3 = std::array<std::array<Code, 3>, 3>;

Mat3 ToMatrix(const HGroup& g, Code x);
// Errors if m is not upper unitriangular (returns false).
bool FromMatrix(const HGroup& g, const Mat3& m, Code* out);
Mat3 MatMul(const Field& f, const Mat3& x, const Mat3& y);
// Gauss-Jordan inverse; the matrix must be invertible.
Mat3 MatInverse(const Field& f, const Mat3& m);

// Products, inverses and commutators computed through matrices.
Code MatrixProduct(const HGroup& g, Code x, Code y);
Code MatrixInverse(const HGroup& g, Code x);
Code MatrixCommutator(const HGroup& g, Code x, Code y);

// ---- brute-force filters.

// All maps F -> F, |F|^|F| of them, that satisfy
// psi(x+y) = psi(x) + psi(y) + e xy. Only for |F| <= 4.
std::vector<FnTable> FilterQuadAdditive(const Field& f, Code e);

// (a,b)(a',b') = (a+a', b+b'+c(a,a')) straight from the cocycle table.
Code ExtProduct(const Cocycle& c, Code g, Code h);

// Bijective and product-preserving on every pair, via ExtProduct.
bool ExtIsAutomorphism(const Cocycle& c, const FnTable& table);

// Field-vector-space view of K^dim: a code is a base-p number with n*dim
// digits, and additive maps act on those digit vectors.
struct DigitSpace {
  std::int64_t p;
  int dims;
  std::uint64_t size() const;
  std::vector<Code> digits(Code x) const;
  Code compose(const std::vector<Code>& d) const;
};
DigitSpace SpaceOf(const AbGroup& g);

// Random F_p-linear bijection / map as a table.
FnTable RandomLinearBijection(const DigitSpace& s, Rng& rng);
FnTable RandomLinearMap(const DigitSpace& from, const DigitSpace& to, Rng& rng);

// Exhaustive: every element of the group is a product of u and v when the
// field is prime (closure of {u, v}).
std::uint64_t ClosureSize(const HGroup& g, const std::vector<Code>& gens);

// Every field embedding k -> m, found by trying each image of t and checking
// sums and products on all pairs. Sorted by the image of t.
std::vector<FieldHom> AllEmbeddings(const Field& k, const Field& m);

}  // namespace heisenlab::oracle

#endif  // HEISENLAB_TESTS_ORACLES_H_
