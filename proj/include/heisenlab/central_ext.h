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

// Central extensions G = A x B of abelian groups given by a 2-cocycle c,
// with product (a,b)(a',b') = (a+a', b+b'+c(a,a')), and the triangular maps
// Psi(a,b) = (alpha(a), beta(b) + gamma(a)) acting on them.

#ifndef HEISENLAB_CENTRAL_EXT_H_
#define HEISENLAB_CENTRAL_EXT_H_

#include <functional>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "heisenlab/field.h"

namespace heisenlab {

// (K^dim, +) for a finite field K. The tuple (x_0, ..., x_{dim-1}) has code
// x_0 q^{dim-1} + ... + x_{dim-1}, so K^2 codes match the first two
// coordinates of H(K).
class AbGroup {
 public:
  // Errors: kInfiniteField, kTooLarge (more than 2^16 elements).
  AbGroup(Field field, int dim);

  const Field& field() const { return field_; }
  int dim() const { return dim_; }
  std::uint64_t order() const { return order_; }

  Code add(Code x, Code y) const;
  Code neg(Code x) const;
  Code sub(Code x, Code y) const { return add(x, neg(y)); }

  std::vector<Code> components(Code x) const;
  Code compose(std::span<const Code> components) const;

  friend bool operator==(const AbGroup& x, const AbGroup& y) {
    return x.field_ == y.field_ && x.dim_ == y.dim_;
  }

 private:
  Field field_;
  int dim_;
  std::uint64_t order_;
};

// Dense table of c: A x A -> B; entry a * |A| + a'.
struct Cocycle {
  AbGroup domain;
  AbGroup codomain;
  FnTable table;

  Code operator()(Code a, Code a2) const {
    return table[a * domain.order() + a2];
  }

  static Cocycle FromFunction(AbGroup domain, AbGroup codomain,
                              const std::function<Code(Code, Code)>& fn);
  static Cocycle Zero(AbGroup domain, AbGroup codomain);
  // c((x,y),(x',y')) = xy' on K^2 with values in K.
  static Cocycle Heisenberg(const Field& field);
};

class ExtGroup {
 public:
  // Validates the product by associativity on ((a,0),(a',0),(a'',0)) for
  // every triple, which is the cocycle identity. Errors: kShapeMismatch,
  // kNotACocycle (witness = first failing (a,a',a'') in enumeration order).
  static ExtGroup Build(Cocycle cocycle);

  const AbGroup& a_group() const { return cocycle_.domain; }
  const AbGroup& b_group() const { return cocycle_.codomain; }
  const Cocycle& cocycle() const { return cocycle_; }

  std::uint64_t order() const { return a_group().order() * b_group().order(); }
  Code make(Code a, Code b) const {
    return static_cast<Code>(a * b_group().order() + b);
  }
  Code a_of(Code g) const { return static_cast<Code>(g / b_group().order()); }
  Code b_of(Code g) const { return static_cast<Code>(g % b_group().order()); }

  Code mul(Code g, Code h) const;
  Code identity() const;

 private:
  explicit ExtGroup(Cocycle cocycle) : cocycle_(std::move(cocycle)) {}
  Cocycle cocycle_;
};

// alpha: A -> A and beta: B -> B additive bijections, gamma: A -> B any map.
struct TriangularMap {
  FnTable alpha;
  FnTable beta;
  FnTable gamma;

  // Errors: kShapeMismatch, kNotAdditive (alpha or beta not an additive
  // bijection; witness names the first failing pair).
  void Validate(const ExtGroup& group) const;
};

// The bijection Psi(a,b) = (alpha(a), beta(b) + gamma(a)) on group codes.
FnTable PsiFrom(const ExtGroup& group, const TriangularMap& map);

// beta(c(a,a')) + gamma(a+a') == gamma(a) + gamma(a') + c(alpha a, alpha a')
// for all a, a'.
bool HomCondition(const ExtGroup& group, const TriangularMap& map);

// First pair (g, h) in enumeration order with table[gh] != table[g]table[h].
std::optional<std::pair<Code, Code>> FindProductFailure(const ExtGroup& group,
                                                        const FnTable& table);

// Brute force: table is a bijective homomorphism of the group.
bool IsAutomorphism(const ExtGroup& group, const FnTable& table);

}  // namespace heisenlab

#endif  // HEISENLAB_CENTRAL_EXT_H_
