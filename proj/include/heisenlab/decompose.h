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

// Monomorphisms f: H(K) -> H(M) written as Phi ∘ H(theta) with theta a field
// embedding and Phi a triangular automorphism of H(M).
//
// With f(x,0,0) = (f1 x, g1 x, i1 x), f(0,y,0) = (f2 y, g2 y, i2 y) and
// f(0,0,z) = (0, 0, i z), commutators give
//
//   (1) i(xy) = f1(x) g2(y) - f2(y) g1(x)
//   (2) f1(x) g1(y) = f1(y) g1(x)
//   (3) f2(x) g2(y) = f2(y) g2(x)
//
// and f(x,y,z) = (f1 x + f2 y, g1 x + g2 y, i1 x + i2 y + i z + f2(y) g1(x)).
// The center is the derived subgroup, so any homomorphism maps it into the
// center; this is checked rather than assumed.

#ifndef HEISENLAB_DECOMPOSE_H_
#define HEISENLAB_DECOMPOSE_H_

#include "heisenlab/automorphisms.h"
#include "heisenlab/field_hom.h"
#include "heisenlab/heisenberg.h"

namespace heisenlab {

struct GroupHomTable {
  HGroup source;
  HGroup target;
  FnTable table;

  // Checks shape, f(gh) = f(g) f(h) and injectivity. Products are checked on
  // all pairs for small sources and on (generator, element) pairs otherwise,
  // which is equivalent. Errors: kInfiniteField, kShapeMismatch,
  // kInvalidHomomorphism (witness = pair), kNotInjective (witness = element).
  static GroupHomTable Make(HGroup source, HGroup target, FnTable table);

  // Shape check only. Lets callers push arbitrary tables through Decompose,
  // whose own checks then report the failure.
  static GroupHomTable Unchecked(HGroup source, HGroup target, FnTable table);
};

// For a prime-field source, where u and v generate: the map
// (a, b, c) = u^a v^b [u,v]^(c-ab) -> U^a V^b [U,V]^(c-ab). Not validated.
// Errors: kNotPrimeField.
FnTable ExtendGeneratorImages(const HGroup& source, const HGroup& target,
                              Code u_image, Code v_image);

// (a, b, c) -> (theta a, theta b, theta c).
GroupHomTable HFunctor(const FieldHom& theta);

// Tables on K codes.
struct CoordinateMaps {
  FnTable f1, g1, i1;
  FnTable f2, g2, i2;
  FnTable i;
};

// Errors: kCenterNotPreserved (witness = z).
CoordinateMaps ExtractCoordinateMaps(const GroupHomTable& f);

struct Decomposition {
  FieldHom theta;
  AutParams params;  // over M; psi1, psi2 depend on the complement in eta
  Code d = 1;
  LinearRetraction eta;
  bool verified = false;
};

// Errors: kCenterNotPreserved, kCommutatorIdentity (witness = x, y),
// kDegenerateD, kThetaNotHom (witness = x, y), kProportionalityFailure
// (witness = x), kRecompositionMismatch (witness = element), plus whatever
// ExtendPsi reports for tables that are not homomorphisms.
Decomposition Decompose(const GroupHomTable& f);

// Phi ∘ H(theta) as a verified table. Errors: kInvalidParams.
GroupHomTable Compose(const AutParams& params, const FieldHom& theta);

}  // namespace heisenlab

#endif  // HEISENLAB_DECOMPOSE_H_
