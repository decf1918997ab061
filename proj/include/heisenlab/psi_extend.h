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

// Extension of maps psi with psi(x + y) = psi(x) + psi(y) + c xy from a
// subfield S = theta(K) of M to all of M.

#ifndef HEISENLAB_PSI_EXTEND_H_
#define HEISENLAB_PSI_EXTEND_H_

#include <optional>
#include <span>
#include <utility>

#include "heisenlab/field_hom.h"

namespace heisenlab {

// psi on S = domain(K) with values in M; values[k] is psi(domain(k)).
struct QuadAdditiveMap {
  FieldHom domain;
  Code coeff = 0;  // element of M
  FnTable values;

  const Field& field() const { return domain.target(); }

  // A map on all of M.
  static QuadAdditiveMap OnField(const Field& field, Code coeff, FnTable values);
};

// First pair (k, k') of K codes with
// psi(s + s') != psi(s) + psi(s') + coeff s s' for s = domain(k), s' = domain(k').
std::optional<std::pair<Code, Code>> IdentityFailure(const QuadAdditiveMap& psi);

// Splits m = s + l with s in S and l in the K-span L of `complement` and sets
//
//   Psi(s + l) = psi(s) + (c/2) l^2 + c s l   (characteristic != 2)
//   Psi(s + l) = psi(s)                       (characteristic 2, c = 0).
//
// The result restricts to psi on S and satisfies the identity on M x M.
// Errors: kShapeMismatch, kNotQuadAdditive (input violates the identity on
// S), kChar2NonzeroCoeff, kBadComplement.
QuadAdditiveMap ExtendPsi(const QuadAdditiveMap& psi,
                          std::span<const Code> complement);

}  // namespace heisenlab

#endif  // HEISENLAB_PSI_EXTEND_H_
