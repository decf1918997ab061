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

#include "heisenlab/psi_extend.h"

#include <string>

#include "heisenlab/error.h"

namespace heisenlab {
namespace {

constexpr std::uint64_t kVerifyPairLimit = 1u << 22;

}  // namespace

QuadAdditiveMap QuadAdditiveMap::OnField(const Field& field, Code coeff,
                                         FnTable values) {
  return QuadAdditiveMap{FieldHom::Identity(field), coeff, std::move(values)};
}

std::optional<std::pair<Code, Code>> IdentityFailure(const QuadAdditiveMap& psi) {
  const Field& k = psi.domain.source();
  const Field& m = psi.field();
  for (Code x = 0; x < k.order(); ++x) {
    const Code sx = psi.domain(x);
    for (Code y = 0; y < k.order(); ++y) {
      const Code sy = psi.domain(y);
      const Code rhs = m.add(m.add(psi.values[x], psi.values[y]),
                             m.mul(psi.coeff, m.mul(sx, sy)));
      if (psi.values[k.add(x, y)] != rhs) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

QuadAdditiveMap ExtendPsi(const QuadAdditiveMap& psi,
                          std::span<const Code> complement) {
  const Field& k = psi.domain.source();
  const Field& m = psi.field();
  if (psi.values.size() != k.order() || psi.coeff >= m.order()) {
    throw Error(ErrorCode::kShapeMismatch, "psi table does not match its domain");
  }
  for (Code v : psi.values) {
    if (v >= m.order()) {
      throw Error(ErrorCode::kShapeMismatch, "psi value outside " + m.name());
    }
  }
  const bool char2 = m.characteristic() == 2;
  if (char2 && psi.coeff != 0) {
    // psi(0) = psi(1 + 1) = 2 psi(1) + c forces c = 0.
    throw Error(ErrorCode::kChar2NonzeroCoeff,
                "no such psi exists in characteristic 2 with c != 0");
  }
  if (auto w = IdentityFailure(psi)) {
    throw Error(ErrorCode::kNotQuadAdditive,
                "psi violates its identity at (" + k.format(w->first) + ", " +
                    k.format(w->second) + ")",
                {w->first, w->second});
  }
  const DirectSplit split = SplitAlong(psi.domain, complement);
  const Code c = psi.coeff;
  const Code half_c = char2 ? 0 : m.div(c, m.from_int(2));
  FnTable values(m.order());
  for (Code x = 0; x < m.order(); ++x) {
    const Code sub = split.sub[x];
    const Code s = psi.domain(sub);
    const Code l = split.rest[x];
    Code out = psi.values[sub];
    if (!char2) {
      out = m.add(out, m.mul(half_c, m.mul(l, l)));
      out = m.add(out, m.mul(c, m.mul(s, l)));
    }
    values[x] = out;
  }
  QuadAdditiveMap result = QuadAdditiveMap::OnField(m, c, std::move(values));
  if (m.order() * m.order() <= kVerifyPairLimit) {
    if (auto w = IdentityFailure(result)) {
      throw Error(ErrorCode::kNotQuadAdditive,
                  "extension violates the identity at (" + m.format(w->first) +
                      ", " + m.format(w->second) + ")",
                  {w->first, w->second});
    }
  }
  return result;
}

}  // namespace heisenlab
