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

// Automorphisms of H(K) in triangular form.
//
// A matrix A = [[a, b], [c, d]] in GL_2(K) and maps psi1, psi2: K -> K give
//
//   Phi(x, y, z) = (ax + by, cx + dy, det(A) z + psi1(x) + psi2(y) + bc xy),
//
// which is an automorphism exactly when
//
//   psi1(x + x') = psi1(x) + psi1(x') + ac xx',
//   psi2(y + y') = psi2(y) + psi2(y') + bd yy'.
//
// The bc xy term absorbs the mixed part of c(A v, A v') - det(A) c(v, v');
// without it only matrices with bc = 0 give homomorphisms.

#ifndef HEISENLAB_AUTOMORPHISMS_H_
#define HEISENLAB_AUTOMORPHISMS_H_

#include <optional>
#include <utility>
#include <vector>

#include "heisenlab/field.h"
#include "heisenlab/heisenberg.h"
#include "heisenlab/random.h"

namespace heisenlab {

// (x, y) -> (ax + by, cx + dy).
struct Mat2 {
  Code a = 1, b = 0, c = 0, d = 1;

  friend bool operator==(const Mat2&, const Mat2&) = default;
};

Code Det(const Field& field, const Mat2& m);

// Invertible 2x2 matrices in lexicographic (a, b, c, d) order.
std::vector<Mat2> GeneralLinear(const Field& field);

struct AutParams {
  Mat2 matrix;
  FnTable psi1;
  FnTable psi2;
};

struct CentralAutParams {
  FnTable lambda;
  FnTable mu;
};

// Every additive map K -> K (F_p-linear on coefficient vectors), ordered by
// the images of the basis 1, t, ..., t^{n-1}. Errors: kTooLarge when there
// are more than 2^16 of them.
std::vector<FnTable> AdditiveMaps(const Field& field);

FnTable RandomAdditiveMap(const Field& field, Rng& rng);

// First pair (x, x') with psi(x + x') != psi(x) + psi(x') + e xx'.
std::optional<std::pair<Code, Code>> QuadAdditiveFailure(const Field& field,
                                                         const FnTable& psi,
                                                         Code e);

// All psi with psi(x + x') = psi(x) + psi(x') + e xx'. Outside
// characteristic 2 these are lambda + (e/2) x^2 with lambda additive; in
// characteristic 2 there are none for e != 0 and the additive maps for
// e = 0. Errors: kInfiniteField, kTooLarge (|K| > 128, or too many additive
// maps to list).
std::vector<FnTable> SolveQuadraticAdditive(const Field& field, Code e);

// Checks det(A) != 0 and both functional equations. Errors: kInvalidParams
// (witness = failing pair), kShapeMismatch.
void ValidateAutParams(const Field& field, const AutParams& params);

// Table of Phi above over H(K) codes. Parameters are validated; for
// |H(K)|^2 <= 2^20 the table is also checked to be an automorphism on every
// pair.
FnTable AutMake(const HGroup& group, const AutParams& params);

// Random valid parameters: uniform A in GL_2(K) (restricted to ac = bd = 0
// in characteristic 2) with random additive parts.
AutParams RandomAutParams(const Field& field, Rng& rng);

// All distinct AutMake tables, sorted. Errors: kTooLarge for |K| > 4.
std::vector<FnTable> AutEnumerateParametrized(const HGroup& group);

// Brute-force oracle: every choice of images U, V for u, v extended by
// (a, b, c) -> U^a V^b [U, V]^(c - ab), kept when it is a bijective
// homomorphism. Sorted. Errors: kNotPrimeField, kTooLarge (p > 3).
std::vector<FnTable> AutEnumerateBruteforce(const HGroup& group);

// Experiment for extension fields, where u and v do not generate: images of
// (e_j, 0, 0) and (0, e_j, 0) for the F_p-basis e_j are searched with the
// relations of H(K) pruning the tree. Sorted. Errors: kTooLarge for
// |K| > 4.
std::vector<FnTable> AutEnumerateOverBasis(const HGroup& group);

// (x, y, z) -> (x, y, z + lambda(x) + mu(y)). Errors: kNotAdditive.
FnTable CentralAutMake(const HGroup& group, const CentralAutParams& params);

// Bijective and multiplicative on every pair.
bool IsAutomorphism(const HGroup& group, const FnTable& table);

}  // namespace heisenlab

#endif  // HEISENLAB_AUTOMORPHISMS_H_
