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

#include "heisenlab/decompose.h"

#include <string>

#include "heisenlab/error.h"
#include "heisenlab/psi_extend.h"

namespace heisenlab {
namespace {

constexpr std::uint64_t kExhaustivePairLimit = 1u << 22;

void CheckShape(const HGroup& source, const HGroup& target, const FnTable& table) {
  if (!source.field().is_finite() || !target.field().is_finite()) {
    throw Error(ErrorCode::kInfiniteField, "homomorphism tables need finite fields");
  }
  if (!source.codable() || !target.codable()) {
    throw Error(ErrorCode::kTooLarge, "group too large for element tables");
  }
  if (source.field().characteristic() != target.field().characteristic()) {
    throw Error(ErrorCode::kCharacteristicMismatch,
                source.field().name() + " and " + target.field().name() +
                    " have different characteristic");
  }
  if (table.size() != source.order()) {
    throw Error(ErrorCode::kShapeMismatch,
                "table has " + std::to_string(table.size()) + " entries, expected " +
                    std::to_string(source.order()));
  }
  for (Code g = 0; g < table.size(); ++g) {
    if (table[g] >= target.order()) {
      throw Error(ErrorCode::kShapeMismatch, "table value outside target group", {g});
    }
  }
}

// (t^j, 0, 0) and (0, t^j, 0) generate H(K): their commutators give the
// whole center since the products t^i t^j include a basis.
std::vector<Code> Generators(const HGroup& g) {
  const Field& k = g.field();
  std::vector<Code> out;
  Code basis = 1;
  for (int j = 0; j < k.degree(); ++j) {
    out.push_back(g.make_code(basis, 0, 0));
    out.push_back(g.make_code(0, basis, 0));
    basis *= static_cast<Code>(k.characteristic());
  }
  return out;
}

std::optional<std::pair<Code, Code>> HomFailure(const HGroup& source,
                                                const HGroup& target,
                                                const FnTable& f) {
  const std::uint64_t n = source.order();
  if (n * n <= kExhaustivePairLimit) return FindHomFailure(source, target, f);
  // f(s h) = f(s) f(h) for generators s and all h extends to all products
  // by induction on word length.
  for (Code s : Generators(source)) {
    for (Code h = 0; h < n; ++h) {
      if (f[source.mul(s, h)] != target.mul(f[s], f[h])) {
        return std::make_pair(s, h);
      }
    }
  }
  return std::nullopt;
}

std::string Pair(const Field& k, Code x, Code y) {
  return "(" + k.format(x) + ", " + k.format(y) + ")";
}

}  // namespace

GroupHomTable GroupHomTable::Make(HGroup source, HGroup target, FnTable table) {
  CheckShape(source, target, table);
  if (auto w = HomFailure(source, target, table)) {
    throw Error(ErrorCode::kInvalidHomomorphism,
                "f(gh) != f(g)f(h) at g=" + source.format(w->first) +
                    ", h=" + source.format(w->second),
                {w->first, w->second});
  }
  if (auto w = FindRepeatedValue(table, target.order())) {
    throw Error(ErrorCode::kNotInjective,
                "value repeated at " + source.format(*w), {*w});
  }
  return GroupHomTable{std::move(source), std::move(target), std::move(table)};
}

GroupHomTable GroupHomTable::Unchecked(HGroup source, HGroup target,
                                       FnTable table) {
  CheckShape(source, target, table);
  return GroupHomTable{std::move(source), std::move(target), std::move(table)};
}

FnTable ExtendGeneratorImages(const HGroup& source, const HGroup& target,
                              Code u_image, Code v_image) {
  const Field& k = source.field();
  if (!k.is_prime()) {
    throw Error(ErrorCode::kNotPrimeField,
                "generator images determine a map only on H(F_p)");
  }
  if (u_image >= target.order() || v_image >= target.order()) {
    throw Error(ErrorCode::kShapeMismatch, "generator image outside target group");
  }
  const Code p = static_cast<Code>(k.order());
  auto powers = [&](Code g) {
    std::vector<Code> out(p);
    out[0] = target.identity_code();
    for (Code e = 1; e < p; ++e) out[e] = target.mul(out[e - 1], g);
    return out;
  };
  const std::vector<Code> up = powers(u_image);
  const std::vector<Code> vp = powers(v_image);
  const std::vector<Code> zp = powers(target.comm(u_image, v_image));
  FnTable table(source.order());
  for (Code g = 0; g < table.size(); ++g) {
    const Code a = source.a_of(g), b = source.b_of(g), c = source.c_of(g);
    table[g] = target.mul(target.mul(up[a], vp[b]), zp[k.sub(c, k.mul(a, b))]);
  }
  return table;
}

GroupHomTable HFunctor(const FieldHom& theta) {
  HGroup src(theta.source());
  HGroup tgt(theta.target());
  FnTable table(src.order());
  for (Code g = 0; g < table.size(); ++g) {
    table[g] = tgt.make_code(theta(src.a_of(g)), theta(src.b_of(g)),
                             theta(src.c_of(g)));
  }
  return GroupHomTable::Make(std::move(src), std::move(tgt), std::move(table));
}

CoordinateMaps ExtractCoordinateMaps(const GroupHomTable& f) {
  const HGroup& src = f.source;
  const HGroup& tgt = f.target;
  const Code q = static_cast<Code>(src.field().order());
  CoordinateMaps m;
  for (FnTable* t : {&m.f1, &m.g1, &m.i1, &m.f2, &m.g2, &m.i2, &m.i}) {
    t->resize(q);
  }
  for (Code x = 0; x < q; ++x) {
    const Code gx = f.table[src.make_code(x, 0, 0)];
    const Code gy = f.table[src.make_code(0, x, 0)];
    const Code gz = f.table[src.make_code(0, 0, x)];
    if (!tgt.is_central(gz)) {
      throw Error(ErrorCode::kCenterNotPreserved,
                  "f(0,0," + src.field().format(x) + ") = " + tgt.format(gz) +
                      " is not central",
                  {x});
    }
    m.f1[x] = tgt.a_of(gx);
    m.g1[x] = tgt.b_of(gx);
    m.i1[x] = tgt.c_of(gx);
    m.f2[x] = tgt.a_of(gy);
    m.g2[x] = tgt.b_of(gy);
    m.i2[x] = tgt.c_of(gy);
    m.i[x] = tgt.c_of(gz);
  }
  return m;
}

Decomposition Decompose(const GroupHomTable& f) {
  const Field& k = f.source.field();
  const Field& mf = f.target.field();
  const Code q = static_cast<Code>(k.order());
  const CoordinateMaps m = ExtractCoordinateMaps(f);

  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      const Code lhs1 = m.i[k.mul(x, y)];
      const Code rhs1 = mf.sub(mf.mul(m.f1[x], m.g2[y]), mf.mul(m.f2[y], m.g1[x]));
      if (lhs1 != rhs1) {
        throw Error(ErrorCode::kCommutatorIdentity,
                    "i(xy) != f1(x)g2(y) - f2(y)g1(x) at " + Pair(k, x, y), {x, y});
      }
      if (mf.mul(m.f1[x], m.g1[y]) != mf.mul(m.f1[y], m.g1[x])) {
        throw Error(ErrorCode::kCommutatorIdentity,
                    "f1(x)g1(y) != f1(y)g1(x) at " + Pair(k, x, y), {x, y});
      }
      if (mf.mul(m.f2[x], m.g2[y]) != mf.mul(m.f2[y], m.g2[x])) {
        throw Error(ErrorCode::kCommutatorIdentity,
                    "f2(x)g2(y) != f2(y)g2(x) at " + Pair(k, x, y), {x, y});
      }
    }
  }

  const Code d = m.i[1];
  if (d == 0) {
    throw Error(ErrorCode::kDegenerateD, "d = i(1) is zero; f is not injective");
  }
  const Code d_inv = mf.inv(d);
  FnTable theta_table(q);
  for (Code x = 0; x < q; ++x) theta_table[x] = mf.mul(d_inv, m.i[x]);
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      const Code t = theta_table[x], s = theta_table[y];
      if (theta_table[k.add(x, y)] != mf.add(t, s) ||
          theta_table[k.mul(x, y)] != mf.mul(t, s)) {
        throw Error(ErrorCode::kThetaNotHom,
                    "d^-1 i is not a field homomorphism at " + Pair(k, x, y),
                    {x, y});
      }
    }
  }
  FieldHom theta = FieldHom::Make(k, mf, std::move(theta_table));

  const struct {
    const FnTable* map;
    const char* name;
  } props[] = {{&m.f1, "f1"}, {&m.g1, "g1"}, {&m.f2, "f2"}, {&m.g2, "g2"}};
  for (const auto& pr : props) {
    const Code at1 = (*pr.map)[1];
    for (Code x = 0; x < q; ++x) {
      if ((*pr.map)[x] != mf.mul(at1, theta(x))) {
        throw Error(ErrorCode::kProportionalityFailure,
                    std::string(pr.name) + " != " + pr.name + "(1) theta at " +
                        k.format(x),
                    {x});
      }
    }
  }

  Mat2 a{m.f1[1], m.f2[1], m.g1[1], m.g2[1]};
  LinearRetraction eta = RetractionFor(theta);
  // psi_i(theta(k)) = i_i(eta(theta(k))) = i_i(k).
  QuadAdditiveMap psi1{theta, mf.mul(a.a, a.c), m.i1};
  QuadAdditiveMap psi2{theta, mf.mul(a.b, a.d), m.i2};
  QuadAdditiveMap big1 = ExtendPsi(psi1, eta.complement);
  QuadAdditiveMap big2 = ExtendPsi(psi2, eta.complement);

  AutParams params{a, std::move(big1.values), std::move(big2.values)};
  if (f.target.order() <= kMaxEnumeratedGroup) {
    AutMake(f.target, params);
  } else {
    ValidateAutParams(mf, params);
  }
  if (Det(mf, a) != d) {
    throw Error(ErrorCode::kRecompositionMismatch, "det(A) differs from d");
  }

  const GroupHomTable back = Compose(params, theta);
  for (Code g = 0; g < f.table.size(); ++g) {
    if (back.table[g] != f.table[g]) {
      throw Error(ErrorCode::kRecompositionMismatch,
                  "Phi∘H(theta) differs from f at " + f.source.format(g), {g});
    }
  }
  return Decomposition{std::move(theta), std::move(params), d, std::move(eta),
                       true};
}

GroupHomTable Compose(const AutParams& params, const FieldHom& theta) {
  const Field& mf = theta.target();
  ValidateAutParams(mf, params);
  HGroup src(theta.source());
  HGroup tgt(mf);
  const Mat2& a = params.matrix;
  const Code det = Det(mf, a);
  const Code bc = mf.mul(a.b, a.c);
  FnTable table(src.order());
  for (Code g = 0; g < table.size(); ++g) {
    const Code x = theta(src.a_of(g));
    const Code y = theta(src.b_of(g));
    const Code z = theta(src.c_of(g));
    const Code nx = mf.add(mf.mul(a.a, x), mf.mul(a.b, y));
    const Code ny = mf.add(mf.mul(a.c, x), mf.mul(a.d, y));
    Code nz = mf.add(mf.mul(det, z), mf.add(params.psi1[x], params.psi2[y]));
    nz = mf.add(nz, mf.mul(bc, mf.mul(x, y)));
    table[g] = tgt.make_code(nx, ny, nz);
  }
  return GroupHomTable::Make(std::move(src), std::move(tgt), std::move(table));
}

}  // namespace heisenlab
