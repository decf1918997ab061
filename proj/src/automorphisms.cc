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

#include "heisenlab/automorphisms.h"

#include <algorithm>
#include <set>
#include <string>

#include "heisenlab/error.h"

namespace heisenlab {
namespace {

constexpr std::uint64_t kMaxListedMaps = 1u << 16;
constexpr std::uint64_t kVerifyPairLimit = 1u << 20;

void RequireFinite(const Field& f) {
  if (!f.is_finite()) {
    throw Error(ErrorCode::kInfiniteField, f.name() + " is infinite");
  }
}

Code BasisVector(const Field& f, int j) {
  Code x = 1;
  for (int i = 0; i < j; ++i) x *= static_cast<Code>(f.characteristic());
  return x;
}

// Table of x -> sum_j coeff_j(x) images[j].
FnTable LinearFromImages(const Field& f, const std::vector<Code>& images) {
  FnTable table(f.order());
  for (Code x = 0; x < table.size(); ++x) {
    Code acc = 0;
    for (int j = 0; j < f.degree(); ++j) {
      const Code c = f.coeff(x, j);
      if (c != 0) acc = f.add(acc, f.mul(c, images[j]));
    }
    table[x] = acc;
  }
  return table;
}

Code GroupPow(const HGroup& g, Code x, std::uint64_t e) {
  Code r = g.identity_code();
  for (std::uint64_t i = 0; i < e; ++i) r = g.mul(r, x);
  return r;
}

FnTable AutTable(const HGroup& group, const AutParams& params) {
  const Field& f = group.field();
  const Mat2& m = params.matrix;
  const Code det = Det(f, m);
  const Code bc = f.mul(m.b, m.c);
  FnTable table(group.order());
  for (Code g = 0; g < table.size(); ++g) {
    const Code x = group.a_of(g), y = group.b_of(g), z = group.c_of(g);
    const Code nx = f.add(f.mul(m.a, x), f.mul(m.b, y));
    const Code ny = f.add(f.mul(m.c, x), f.mul(m.d, y));
    Code nz = f.add(f.mul(det, z), f.add(params.psi1[x], params.psi2[y]));
    nz = f.add(nz, f.mul(bc, f.mul(x, y)));
    table[g] = group.make_code(nx, ny, nz);
  }
  return table;
}

void VerifyAutomorphism(const HGroup& group, const FnTable& table) {
  if (auto g = FindRepeatedValue(table, group.order())) {
    throw Error(ErrorCode::kInvalidHomomorphism, "table is not a bijection",
                {*g});
  }
  if (group.order() * group.order() > kVerifyPairLimit) return;
  if (auto pair = FindHomFailure(group, group, table)) {
    throw Error(ErrorCode::kInvalidHomomorphism,
                "table is not multiplicative on (" + group.format(pair->first) +
                    ", " + group.format(pair->second) + ")",
                {pair->first, pair->second});
  }
}

void CheckTable(const Field& f, const FnTable& t, const char* what) {
  if (t.size() != f.order()) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(what) + " must have " + std::to_string(f.order()) +
                    " entries");
  }
  for (Code x = 0; x < t.size(); ++x) {
    if (t[x] >= f.order()) {
      throw Error(ErrorCode::kShapeMismatch,
                  std::string(what) + " value outside the field", {x});
    }
  }
}

// Images of (e_j,0,0) and (0,e_j,0) extended to a map on H(K):
// (a,b,c) = X(a) Y(b) Z(c - ab) with Z(e_k) = [X_k, Y_0].
FnTable ExtendFromBasis(const HGroup& group, const std::vector<Code>& xs,
                        const std::vector<Code>& ys) {
  const Field& f = group.field();
  const int n = f.degree();
  std::vector<Code> zs(n);
  for (int k = 0; k < n; ++k) zs[k] = group.comm(xs[k], ys[0]);
  auto combine = [&](const std::vector<Code>& gens) {
    std::vector<Code> out(f.order());
    for (Code s = 0; s < f.order(); ++s) {
      Code acc = group.identity_code();
      for (int j = 0; j < n; ++j) {
        acc = group.mul(acc, GroupPow(group, gens[j], f.coeff(s, j)));
      }
      out[s] = acc;
    }
    return out;
  };
  const std::vector<Code> ximg = combine(xs);
  const std::vector<Code> yimg = combine(ys);
  const std::vector<Code> zimg = combine(zs);
  FnTable table(group.order());
  for (Code g = 0; g < table.size(); ++g) {
    const Code a = group.a_of(g), b = group.b_of(g), c = group.c_of(g);
    table[g] = group.mul(group.mul(ximg[a], yimg[b]),
                         zimg[f.sub(c, f.mul(a, b))]);
  }
  return table;
}

bool IsBijective(const FnTable& t, std::uint64_t n) {
  return t.size() == n && !FindRepeatedValue(t, n).has_value();
}

}  // namespace

Code Det(const Field& field, const Mat2& m) {
  return field.sub(field.mul(m.a, m.d), field.mul(m.b, m.c));
}

std::vector<Mat2> GeneralLinear(const Field& field) {
  RequireFinite(field);
  const auto q = static_cast<Code>(field.order());
  std::vector<Mat2> out;
  for (Code a = 0; a < q; ++a)
    for (Code b = 0; b < q; ++b)
      for (Code c = 0; c < q; ++c)
        for (Code d = 0; d < q; ++d) {
          const Mat2 m{a, b, c, d};
          if (Det(field, m) != 0) out.push_back(m);
        }
  return out;
}

std::vector<FnTable> AdditiveMaps(const Field& field) {
  RequireFinite(field);
  const std::uint64_t q = field.order();
  std::uint64_t count = 1;
  for (int j = 0; j < field.degree(); ++j) {
    count *= q;
    if (count > kMaxListedMaps) {
      throw Error(ErrorCode::kTooLarge,
                  "more than 2^16 additive maps on " + field.name());
    }
  }
  std::vector<FnTable> out;
  out.reserve(count);
  std::vector<Code> images(field.degree());
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    std::uint64_t rest = idx;
    for (int j = 0; j < field.degree(); ++j) {
      images[j] = static_cast<Code>(rest % q);
      rest /= q;
    }
    out.push_back(LinearFromImages(field, images));
  }
  return out;
}

FnTable RandomAdditiveMap(const Field& field, Rng& rng) {
  RequireFinite(field);
  std::vector<Code> images(field.degree());
  for (Code& img : images) img = static_cast<Code>(RandomBelow(rng, field.order()));
  return LinearFromImages(field, images);
}

std::optional<std::pair<Code, Code>> QuadAdditiveFailure(const Field& field,
                                                         const FnTable& psi,
                                                         Code e) {
  const auto q = static_cast<Code>(field.order());
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      const Code rhs =
          field.add(field.add(psi[x], psi[y]), field.mul(e, field.mul(x, y)));
      if (psi[field.add(x, y)] != rhs) return std::make_pair(x, y);
    }
  }
  return std::nullopt;
}

std::vector<FnTable> SolveQuadraticAdditive(const Field& field, Code e) {
  RequireFinite(field);
  if (field.order() > 128) {
    throw Error(ErrorCode::kTooLarge, "solver limited to fields of order 128");
  }
  if (field.characteristic() == 2) {
    if (e != 0) return {};
    return AdditiveMaps(field);
  }
  const Code half = field.div(e, field.from_int(2));
  std::vector<FnTable> out = AdditiveMaps(field);
  for (FnTable& t : out) {
    for (Code x = 0; x < t.size(); ++x) {
      t[x] = field.add(t[x], field.mul(half, field.mul(x, x)));
    }
  }
  return out;
}

void ValidateAutParams(const Field& field, const AutParams& params) {
  RequireFinite(field);
  const Mat2& m = params.matrix;
  for (Code entry : {m.a, m.b, m.c, m.d}) {
    if (entry >= field.order()) {
      throw Error(ErrorCode::kShapeMismatch, "matrix entry outside the field");
    }
  }
  CheckTable(field, params.psi1, "psi1");
  CheckTable(field, params.psi2, "psi2");
  if (Det(field, m) == 0) {
    throw Error(ErrorCode::kInvalidParams, "matrix is singular");
  }
  if (auto w = QuadAdditiveFailure(field, params.psi1, field.mul(m.a, m.c))) {
    throw Error(ErrorCode::kInvalidParams,
                "psi1(x+x') != psi1(x)+psi1(x')+ac*xx' at x=" +
                    field.format(w->first) + ", x'=" + field.format(w->second),
                {w->first, w->second});
  }
  if (auto w = QuadAdditiveFailure(field, params.psi2, field.mul(m.b, m.d))) {
    throw Error(ErrorCode::kInvalidParams,
                "psi2(y+y') != psi2(y)+psi2(y')+bd*yy' at y=" +
                    field.format(w->first) + ", y'=" + field.format(w->second),
                {w->first, w->second});
  }
}

FnTable AutMake(const HGroup& group, const AutParams& params) {
  ValidateAutParams(group.field(), params);
  FnTable table = AutTable(group, params);
  VerifyAutomorphism(group, table);
  return table;
}

AutParams RandomAutParams(const Field& field, Rng& rng) {
  RequireFinite(field);
  const std::uint64_t q = field.order();
  const bool char2 = field.characteristic() == 2;
  Mat2 m;
  while (true) {
    m = Mat2{static_cast<Code>(RandomBelow(rng, q)),
             static_cast<Code>(RandomBelow(rng, q)),
             static_cast<Code>(RandomBelow(rng, q)),
             static_cast<Code>(RandomBelow(rng, q))};
    if (Det(field, m) == 0) continue;
    if (char2 && (field.mul(m.a, m.c) != 0 || field.mul(m.b, m.d) != 0)) {
      continue;
    }
    break;
  }
  auto quadratic = [&](Code e) {
    FnTable t = RandomAdditiveMap(field, rng);
    if (!char2) {
      const Code half = field.div(e, field.from_int(2));
      for (Code x = 0; x < t.size(); ++x) {
        t[x] = field.add(t[x], field.mul(half, field.mul(x, x)));
      }
    }
    return t;
  };
  AutParams params;
  params.matrix = m;
  params.psi1 = quadratic(field.mul(m.a, m.c));
  params.psi2 = quadratic(field.mul(m.b, m.d));
  return params;
}

std::vector<FnTable> AutEnumerateParametrized(const HGroup& group) {
  const Field& f = group.field();
  RequireFinite(f);
  if (f.order() > 4) {
    throw Error(ErrorCode::kTooLarge,
                "parametrized enumeration limited to |K| <= 4");
  }
  std::set<FnTable> found;
  for (const Mat2& m : GeneralLinear(f)) {
    const auto psi1s = SolveQuadraticAdditive(f, f.mul(m.a, m.c));
    const auto psi2s = SolveQuadraticAdditive(f, f.mul(m.b, m.d));
    for (const FnTable& psi1 : psi1s) {
      for (const FnTable& psi2 : psi2s) {
        found.insert(AutMake(group, AutParams{m, psi1, psi2}));
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<FnTable> AutEnumerateBruteforce(const HGroup& group) {
  const Field& f = group.field();
  RequireFinite(f);
  if (!f.is_prime()) {
    throw Error(ErrorCode::kNotPrimeField,
                "u and v generate H(K) only for prime fields");
  }
  if (f.characteristic() > 3) {
    throw Error(ErrorCode::kTooLarge, "brute force limited to p <= 3");
  }
  std::vector<FnTable> found;
  const auto n = static_cast<Code>(group.order());
  for (Code u = 0; u < n; ++u) {
    for (Code v = 0; v < n; ++v) {
      FnTable t = ExtendFromBasis(group, {u}, {v});
      if (!IsBijective(t, n)) continue;
      if (FindHomFailure(group, group, t)) continue;
      found.push_back(std::move(t));
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

std::vector<FnTable> AutEnumerateOverBasis(const HGroup& group) {
  const Field& f = group.field();
  RequireFinite(f);
  if (f.order() > 4) {
    throw Error(ErrorCode::kTooLarge, "basis search limited to |K| <= 4");
  }
  const int n = f.degree();
  const auto p = static_cast<std::uint64_t>(f.characteristic());
  const auto order = static_cast<Code>(group.order());
  const Field prime = Field::Prime(f.characteristic());

  // Elements of exponent p, the only possible images of (e_j,0,0), (0,e_j,0).
  std::vector<Code> candidates;
  for (Code g = 0; g < order; ++g) {
    if (GroupPow(group, g, p) == group.identity_code()) candidates.push_back(g);
  }
  // Image of the generators in G/Z as F_p-vectors of length 2n.
  auto quotient_vector = [&](Code g) {
    std::vector<Code> v;
    for (Code c : f.coeffs(group.a_of(g))) v.push_back(c);
    for (Code c : f.coeffs(group.b_of(g))) v.push_back(c);
    return v;
  };

  std::vector<Code> picks;  // X_0..X_{n-1}, Y_0..Y_{n-1}
  std::vector<std::vector<Code>> rows;  // reduced quotient vectors
  std::vector<int> pivots;
  std::vector<FnTable> found;

  auto reduce = [&](std::vector<Code>& v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Code c = v[pivots[r]];
      if (c == 0) continue;
      for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = prime.sub(v[k], prime.mul(c, rows[r][k]));
      }
    }
  };

  auto relations_hold = [&]() {
    const std::vector<Code> xs(picks.begin(), picks.begin() + n);
    const std::vector<Code> ys(picks.begin() + n, picks.end());
    // The central image is read off [X_k, Y_0]; every [X_i, Y_j] must agree.
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Code z = f.mul(BasisVector(f, i), BasisVector(f, j));
        Code expect = group.identity_code();
        for (int k = 0; k < n; ++k) {
          expect = group.mul(expect, GroupPow(group, group.comm(xs[k], ys[0]),
                                              f.coeff(z, k)));
        }
        if (group.comm(xs[i], ys[j]) != expect) return false;
      }
    }
    return true;
  };

  auto search = [&](auto&& self) -> void {
    const int depth = static_cast<int>(picks.size());
    if (depth == 2 * n) {
      if (!relations_hold()) return;
      FnTable t = ExtendFromBasis(
          group, std::vector<Code>(picks.begin(), picks.begin() + n),
          std::vector<Code>(picks.begin() + n, picks.end()));
      if (!IsBijective(t, order) || FindHomFailure(group, group, t)) return;
      found.push_back(std::move(t));
      return;
    }
    const bool is_x = depth < n;
    const int block_start = is_x ? 0 : n;
    for (Code g : candidates) {
      bool commutes = true;
      for (int k = block_start; k < depth; ++k) {
        if (group.comm(picks[k], g) != group.identity_code()) {
          commutes = false;
          break;
        }
      }
      if (!commutes) continue;
      std::vector<Code> v = quotient_vector(g);
      reduce(v);
      const auto nz = std::find_if(v.begin(), v.end(), [](Code c) { return c != 0; });
      if (nz == v.end()) continue;  // dependent modulo the center
      const int pivot = static_cast<int>(nz - v.begin());
      const Code scale = prime.inv(*nz);
      for (Code& c : v) c = prime.mul(c, scale);
      rows.push_back(std::move(v));
      pivots.push_back(pivot);
      picks.push_back(g);
      self(self);
      picks.pop_back();
      pivots.pop_back();
      rows.pop_back();
    }
  };
  search(search);
  std::sort(found.begin(), found.end());
  return found;
}

FnTable CentralAutMake(const HGroup& group, const CentralAutParams& params) {
  const Field& f = group.field();
  RequireFinite(f);
  CheckTable(f, params.lambda, "lambda");
  CheckTable(f, params.mu, "mu");
  if (auto w = QuadAdditiveFailure(f, params.lambda, 0)) {
    throw Error(ErrorCode::kNotAdditive, "lambda is not additive",
                {w->first, w->second});
  }
  if (auto w = QuadAdditiveFailure(f, params.mu, 0)) {
    throw Error(ErrorCode::kNotAdditive, "mu is not additive",
                {w->first, w->second});
  }
  FnTable table(group.order());
  for (Code g = 0; g < table.size(); ++g) {
    const Code x = group.a_of(g), y = group.b_of(g), z = group.c_of(g);
    table[g] = group.make_code(
        x, y, f.add(z, f.add(params.lambda[x], params.mu[y])));
  }
  VerifyAutomorphism(group, table);
  return table;
}

bool IsAutomorphism(const HGroup& group, const FnTable& table) {
  return IsBijective(table, group.order()) &&
         !FindHomFailure(group, group, table).has_value();
}

}  // namespace heisenlab
