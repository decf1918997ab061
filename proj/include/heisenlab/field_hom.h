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

// Homomorphisms between finite fields and the F_p-linear algebra around an
// embedding theta: K -> M (complements of theta(K) and K-linear retractions).

#ifndef HEISENLAB_FIELD_HOM_H_
#define HEISENLAB_FIELD_HOM_H_

#include <span>
#include <vector>

#include "heisenlab/field.h"

namespace heisenlab {

class FieldHom {
 public:
  // Checks that `table` preserves 0, 1, + and * on every element (pairs
  // exhaustively) and is injective. Errors: kInfiniteField, kShapeMismatch,
  // kCharacteristicMismatch, kNotFieldHom (witness = failing pair),
  // kNotInjective.
  static FieldHom Make(Field source, Field target, FnTable table);
  static FieldHom Identity(const Field& field);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  const FnTable& table() const { return table_; }
  Code operator()(Code x) const { return table_[x]; }

  bool is_bijective() const { return source_.order() == target_.order(); }

  // next ∘ this.
  FieldHom Then(const FieldHom& next) const;

  friend bool operator==(const FieldHom& x, const FieldHom& y) {
    return x.source_ == y.source_ && x.target_ == y.target_ &&
           x.table_ == y.table_;
  }

 private:
  FieldHom(Field source, Field target, FnTable table)
      : source_(std::move(source)),
        target_(std::move(target)),
        table_(std::move(table)) {}

  Field source_;
  Field target_;
  FnTable table_;
};

// x -> x^p. Errors: kInfiniteField.
FieldHom Frobenius(const Field& field);

// F_p -> F_{p^n}, constants to constants. Errors: kCharacteristicMismatch
// (also raised when `prime` is not a prime field).
FieldHom CanonicalEmbedding(const Field& prime, const Field& extension);

// Basis of a K-linear complement L of theta(K) in M: elements of M taken in
// enumeration order whenever they leave the K-span of 1 and the previously
// chosen vectors. Empty when theta is bijective.
std::vector<Code> ComplementBasis(const FieldHom& theta);

// M = theta(K) ⊕ L decomposition tables, with L the K-span of `complement`.
struct DirectSplit {
  FnTable sub;  // m -> k with m = theta(k) + l
  FnTable rest;  // m -> l
};

// Errors: kBadComplement when {1} ∪ complement is not a K-basis of M.
DirectSplit SplitAlong(const FieldHom& theta, std::span<const Code> complement);

struct LinearRetraction {
  FieldHom theta;
  FnTable eta;  // M -> K, K-linear, eta ∘ theta = id
  // The added basis vectors sent to 0; the retraction depends on this choice.
  std::vector<Code> complement;
};

LinearRetraction RetractionFor(const FieldHom& theta);

// The K-span of `vectors` inside M, i.e. {sum theta(k_i) v_i}, enumerated.
std::vector<Code> KSpan(const FieldHom& theta, std::span<const Code> vectors);

}  // namespace heisenlab

#endif  // HEISENLAB_FIELD_HOM_H_
