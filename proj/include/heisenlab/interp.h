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

// The field K defined inside (H(K), *, u, v) on the center:
//
//   x (+) y = z  :=  xy = z
//   x (x) y = z  :=  exists x' y' . [x',u] = [y',v] = I & [x',v] = x &
//                                   [u,y'] = y & [x',y'] = z
//
// (0,0,c) corresponds to c in K.

#ifndef HEISENLAB_INTERP_H_
#define HEISENLAB_INTERP_H_

#include <optional>
#include <utility>
#include <vector>

#include "heisenlab/heisenberg.h"

namespace heisenlab {

struct InterpContext {
  HGroup group;
  Code u = 0;
  Code v = 0;
  std::vector<Code> domain;  // center, enumeration order
  std::vector<Code> centralizer_u;
  std::vector<Code> centralizer_v;

  // Errors: kInfiniteField, kTooLarge (more than 2^16 elements).
  static InterpContext Make(HGroup group);
};

// Errors: kNotCentral.
Code Oplus(const InterpContext& ctx, Code x, Code y);

enum class WitnessSearch {
  kFiltered,    // x' over C(u), y' over C(v) only
  kExhaustive,  // all of G x G
};

struct OtimesResult {
  bool holds = false;
  std::optional<std::pair<Code, Code>> witness;  // first (x', y') found
};

// Both modes scan pairs in enumeration order (x' major), so they report the
// same first witness. Errors: kNotCentral.
OtimesResult OtimesHolds(const InterpContext& ctx, Code x, Code y, Code z,
                         WitnessSearch mode = WitnessSearch::kFiltered);

// The four commutator equations re-evaluated on a given witness.
bool WitnessSatisfies(const InterpContext& ctx, Code x, Code y, Code z,
                      Code xp, Code yp);

struct ReconstructedField {
  // Indexed by field codes via (0,0,c) -> c.
  std::vector<std::vector<Code>> add;
  std::vector<std::vector<Code>> mul;
};

// Builds both tables from Oplus and OtimesHolds and compares them with the
// field's own. Errors: kTooLarge (|K| > 8), kInterpretationFailure (witness
// = triple, or pair whose product is not unique).
ReconstructedField ReconstructField(const InterpContext& ctx);

struct InterpCheck {
  std::uint64_t passed = 0;
  std::uint64_t total = 0;
  std::optional<std::vector<Code>> first_failure;  // (x, y, z) field codes
};

// otimes_holds((0,0,x),(0,0,y),(0,0,z)) <=> xy = z over all q^3 triples.
InterpCheck CheckInterpretation(const InterpContext& ctx,
                                WitnessSearch mode = WitnessSearch::kFiltered);

}  // namespace heisenlab

#endif  // HEISENLAB_INTERP_H_
