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

#include "heisenlab/heisenberg.h"

#include "heisenlab/error.h"

namespace heisenlab {

HGroup::HGroup(Field field) : field_(std::move(field)) {
  if (field_.is_finite()) {
    const std::uint64_t q = field_.order();
    order_ = q * q * q;
    codable_ = order_ < (std::uint64_t{1} << 32);
    q_ = static_cast<Code>(q);
  }
}

HElement HGroup::identity() const {
  return {field_.zero(), field_.zero(), field_.zero()};
}

HElement HGroup::u() const {
  return {field_.one(), field_.zero(), field_.zero()};
}

HElement HGroup::v() const {
  return {field_.zero(), field_.one(), field_.zero()};
}

void HGroup::Check(const HElement& g) const {
  if (!field_.contains(g.a) || !field_.contains(g.b) || !field_.contains(g.c)) {
    throw Error(ErrorCode::kFieldMismatch,
                "element does not belong to H(" + field_.name() + ")");
  }
}

HElement HGroup::make(FieldElement a, FieldElement b, FieldElement c) const {
  HElement g{std::move(a), std::move(b), std::move(c)};
  Check(g);
  return g;
}

HElement HGroup::mul(const HElement& g, const HElement& h) const {
  Check(g);
  Check(h);
  const Field& f = field_;
  return {f.add(g.a, h.a), f.add(g.b, h.b),
          f.add(f.add(g.c, h.c), f.mul(g.a, h.b))};
}

HElement HGroup::inv(const HElement& g) const {
  Check(g);
  const Field& f = field_;
  return {f.neg(g.a), f.neg(g.b), f.add(f.neg(g.c), f.mul(g.a, g.b))};
}

HElement HGroup::comm(const HElement& g, const HElement& h) const {
  Check(g);
  Check(h);
  const Field& f = field_;
  return {f.zero(), f.zero(), f.sub(f.mul(g.a, h.b), f.mul(g.b, h.a))};
}

bool HGroup::is_central(const HElement& g) const {
  Check(g);
  return field_.is_zero(g.a) && field_.is_zero(g.b);
}

void HGroup::RequireCodable() const {
  if (!field_.is_finite()) {
    throw Error(ErrorCode::kInfiniteField,
                "H(" + field_.name() + ") has no element codes");
  }
  if (!codable_) {
    throw Error(ErrorCode::kTooLarge,
                "H(" + field_.name() + ") is too large for element codes");
  }
}

Code HGroup::code(const HElement& g) const {
  RequireCodable();
  Check(g);
  return make_code(g.a.code(), g.b.code(), g.c.code());
}

HElement HGroup::decode(Code g) const {
  RequireCodable();
  if (g >= order_) {
    throw Error(ErrorCode::kFieldMismatch,
                "code " + std::to_string(g) + " outside H(" + field_.name() + ")");
  }
  return {FieldElement(a_of(g)), FieldElement(b_of(g)), FieldElement(c_of(g))};
}

Code HGroup::mul(Code g, Code h) const {
  const Field& f = field_;
  const Code ga = a_of(g), gb = b_of(g), gc = c_of(g);
  const Code ha = a_of(h), hb = b_of(h), hc = c_of(h);
  return make_code(f.add(ga, ha), f.add(gb, hb),
                   f.add(f.add(gc, hc), f.mul(ga, hb)));
}

Code HGroup::inv(Code g) const {
  const Field& f = field_;
  const Code a = a_of(g), b = b_of(g), c = c_of(g);
  return make_code(f.neg(a), f.neg(b), f.add(f.neg(c), f.mul(a, b)));
}

Code HGroup::comm(Code g, Code h) const {
  const Field& f = field_;
  return make_code(0, 0,
                   f.sub(f.mul(a_of(g), b_of(h)), f.mul(b_of(g), a_of(h))));
}

std::vector<HElement> HGroup::center() const {
  if (!field_.is_finite()) {
    throw Error(ErrorCode::kInfiniteField,
                "center of H(" + field_.name() + ") is infinite");
  }
  std::vector<HElement> out;
  out.reserve(q_);
  for (Code c = 0; c < q_; ++c) {
    out.push_back({field_.zero(), field_.zero(), FieldElement(c)});
  }
  return out;
}

std::vector<Code> HGroup::center_codes() const {
  RequireCodable();
  std::vector<Code> out(q_);
  for (Code c = 0; c < q_; ++c) out[c] = make_code(0, 0, c);
  return out;
}

std::vector<HElement> HGroup::enumerate() const {
  RequireCodable();
  if (order_ > kMaxEnumeratedGroup) {
    throw Error(ErrorCode::kTooLarge,
                "H(" + field_.name() + ") has more than 2^16 elements");
  }
  std::vector<HElement> out;
  out.reserve(order_);
  for (Code g = 0; g < order_; ++g) out.push_back(decode(g));
  return out;
}

std::string HGroup::format(const HElement& g) const {
  return "(" + field_.format(g.a) + "," + field_.format(g.b) + "," +
         field_.format(g.c) + ")";
}

std::optional<std::pair<Code, Code>> FindHomFailure(const HGroup& source,
                                                    const HGroup& target,
                                                    const FnTable& f) {
  const std::uint64_t n = source.order();
  for (Code g = 0; g < n; ++g) {
    for (Code h = 0; h < n; ++h) {
      if (f[source.mul(g, h)] != target.mul(f[g], f[h])) {
        return std::make_pair(g, h);
      }
    }
  }
  return std::nullopt;
}

std::optional<Code> FindRepeatedValue(const FnTable& f,
                                      std::uint64_t codomain_size) {
  std::vector<bool> seen(codomain_size, false);
  for (Code g = 0; g < f.size(); ++g) {
    if (seen[f[g]]) return g;
    seen[f[g]] = true;
  }
  return std::nullopt;
}

}  // namespace heisenlab
