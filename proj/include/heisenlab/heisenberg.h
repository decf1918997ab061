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

// The Heisenberg group H(K) = UT_3(K). The triple (a, b, c) stands for
//
//   | 1 a c |
//   | 0 1 b |
//   | 0 0 1 |
//
// so (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab') and
// [g,h] = g^-1 h^-1 g h = (0, 0, ab' - ba').
//
// Over a finite field of order q the element (a,b,c) has code
// (a*q + b)*q + c, which is also the enumeration order of the group.

#ifndef HEISENLAB_HEISENBERG_H_
#define HEISENLAB_HEISENBERG_H_

#include <cstdint>
#include <optional>
#include <utility>
#include <string>
#include <vector>

#include "heisenlab/field.h"

namespace heisenlab {

struct HElement {
  FieldElement a;
  FieldElement b;
  FieldElement c;

  friend bool operator==(const HElement&, const HElement&) = default;
};

inline constexpr std::uint64_t kMaxEnumeratedGroup = 1u << 16;

class HGroup {
 public:
  explicit HGroup(Field field);

  const Field& field() const { return field_; }

  HElement identity() const;
  HElement u() const;  // (1,0,0)
  HElement v() const;  // (0,1,0)
  // Errors: kFieldMismatch when a coordinate is outside the field.
  HElement make(FieldElement a, FieldElement b, FieldElement c) const;

  HElement mul(const HElement& g, const HElement& h) const;
  HElement inv(const HElement& g) const;
  HElement comm(const HElement& g, const HElement& h) const;
  bool is_central(const HElement& g) const;

  // |K|^3, or 0 over Q.
  std::uint64_t order() const { return order_; }

  // Code-level arithmetic, available when |K|^3 < 2^32.
  bool codable() const { return codable_; }
  Code code(const HElement& g) const;
  HElement decode(Code g) const;
  Code make_code(Code a, Code b, Code c) const {
    return (a * q_ + b) * q_ + c;
  }
  Code a_of(Code g) const { return g / (q_ * q_); }
  Code b_of(Code g) const { return g / q_ % q_; }
  Code c_of(Code g) const { return g % q_; }
  Code identity_code() const { return 0; }
  Code u_code() const { return make_code(1, 0, 0); }
  Code v_code() const { return make_code(0, 1, 0); }

  Code mul(Code g, Code h) const;
  Code inv(Code g) const;
  Code comm(Code g, Code h) const;
  bool is_central(Code g) const { return a_of(g) == 0 && b_of(g) == 0; }

  // {(0,0,c) : c in K} in enumeration order. Errors: kInfiniteField.
  std::vector<HElement> center() const;
  std::vector<Code> center_codes() const;

  // Every element in enumeration order. Errors: kInfiniteField, kTooLarge
  // (more than 2^16 elements).
  std::vector<HElement> enumerate() const;

  std::string format(const HElement& g) const;
  std::string format(Code g) const { return format(decode(g)); }

  friend bool operator==(const HGroup& x, const HGroup& y) {
    return x.field_ == y.field_;
  }

 private:
  void Check(const HElement& g) const;
  void RequireCodable() const;

  Field field_;
  std::uint64_t order_ = 0;
  Code q_ = 0;
  bool codable_ = false;
};

// First pair (g, h) in enumeration order with f(gh) != f(g)f(h) for a table
// f: H(K) -> H(M) on codes; nullopt when f is a homomorphism.
std::optional<std::pair<Code, Code>> FindHomFailure(const HGroup& source,
                                                    const HGroup& target,
                                                    const FnTable& f);

// First code repeated in the table, if any.
std::optional<Code> FindRepeatedValue(const FnTable& f,
                                      std::uint64_t codomain_size);

}  // namespace heisenlab

#endif  // HEISENLAB_HEISENBERG_H_
