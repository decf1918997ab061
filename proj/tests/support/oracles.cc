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

#include "oracles.h"

#include <stdexcept>

namespace heisenlab::oracle {

Mat3 ToMatrix(const HGroup& g, Code x) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  m[0][1] = g.a_of(x);
  m[1][2] = g.b_of(x);
  m[0][2] = g.c_of(x);
  return m;
}

bool FromMatrix(const HGroup& g, const Mat3& m, Code* out) {
  for (int i = 0; i < 3; ++i) {
    if (m[i][i] != 1) return false;
    for (int j = 0; j < i; ++j) {
      if (m[i][j] != 0) return false;
    }
  }
  *out = g.make_code(m[0][1], m[1][2], m[0][2]);
  return true;
}

Mat3 MatMul(const Field& f, const Mat3& x, const Mat3& y) {
  Mat3 r{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      Code acc = 0;
      for (int k = 0; k < 3; ++k) acc = f.add(acc, f.mul(x[i][k], y[k][j]));
      r[i][j] = acc;
    }
  }
  return r;
}

Mat3 MatInverse(const Field& f, const Mat3& m) {
  std::array<std::array<Code, 6>, 3> w{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) w[i][j] = m[i][j];
    w[i][3 + i] = 1;
  }
  for (int col = 0; col < 3; ++col) {
    int piv = col;
    while (piv < 3 && w[piv][col] == 0) ++piv;
    if (piv == 3) throw std::logic_error("singular matrix");
    std::swap(w[piv], w[col]);
    const Code s = f.inv(w[col][col]);
    for (Code& e : w[col]) e = f.mul(e, s);
    for (int r = 0; r < 3; ++r) {
      if (r == col || w[r][col] == 0) continue;
      const Code factor = w[r][col];
      for (int j = 0; j < 6; ++j) w[r][j] = f.sub(w[r][j], f.mul(factor, w[col][j]));
    }
  }
  Mat3 inv{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) inv[i][j] = w[i][3 + j];
  }
  return inv;
}

namespace {
Code Back(const HGroup& g, const Mat3& m) {
  Code out = 0;
  if (!FromMatrix(g, m, &out)) throw std::logic_error("left the unitriangular group");
  return out;
}
}  // namespace

Code MatrixProduct(const HGroup& g, Code x, Code y) {
  return Back(g, MatMul(g.field(), ToMatrix(g, x), ToMatrix(g, y)));
}

Code MatrixInverse(const HGroup& g, Code x) {
  return Back(g, MatInverse(g.field(), ToMatrix(g, x)));
}

Code MatrixCommutator(const HGroup& g, Code x, Code y) {
  const Field& f = g.field();
  const Mat3 mx = ToMatrix(g, x), my = ToMatrix(g, y);
  const Mat3 r = MatMul(f, MatMul(f, MatInverse(f, mx), MatInverse(f, my)), MatMul(f, mx, my));
  return Back(g, r);
}

std::vector<FnTable> FilterQuadAdditive(const Field& f, Code e) {
  const Code q = static_cast<Code>(f.order());
  if (q > 4) throw std::logic_error("filter limited to |F| <= 4");
  std::uint64_t total = 1;
  for (Code i = 0; i < q; ++i) total *= q;
  std::vector<FnTable> out;
  FnTable psi(q);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t r = idx;
    for (Code i = 0; i < q; ++i) {
      psi[i] = static_cast<Code>(r % q);
      r /= q;
    }
    bool ok = true;
    for (Code x = 0; x < q && ok; ++x) {
      for (Code y = 0; y < q && ok; ++y) {
        ok = psi[f.add(x, y)] == f.add(f.add(psi[x], psi[y]), f.mul(e, f.mul(x, y)));
      }
    }
    if (ok) out.push_back(psi);
  }
  return out;
}

Code ExtProduct(const Cocycle& c, Code g, Code h) {
  const std::uint64_t nb = c.codomain.order();
  const Code a = static_cast<Code>(g / nb), b = static_cast<Code>(g % nb);
  const Code a2 = static_cast<Code>(h / nb), b2 = static_cast<Code>(h % nb);
  const Code na = c.domain.add(a, a2);
  const Code nbv = c.codomain.add(c.codomain.add(b, b2), c.table[a * c.domain.order() + a2]);
  return static_cast<Code>(na * nb + nbv);
}

bool ExtIsAutomorphism(const Cocycle& c, const FnTable& table) {
  const std::uint64_t n = c.domain.order() * c.codomain.order();
  if (table.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Code v : table) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (Code g = 0; g < n; ++g) {
    for (Code h = 0; h < n; ++h) {
      if (table[ExtProduct(c, g, h)] != ExtProduct(c, table[g], table[h])) return false;
    }
  }
  return true;
}

std::uint64_t DigitSpace::size() const {
  std::uint64_t s = 1;
  for (int i = 0; i < dims; ++i) s *= static_cast<std::uint64_t>(p);
  return s;
}

std::vector<Code> DigitSpace::digits(Code x) const {
  std::vector<Code> d(dims);
  for (int i = 0; i < dims; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

Code DigitSpace::compose(const std::vector<Code>& d) const {
  Code x = 0;
  for (int i = dims - 1; i >= 0; --i) x = x * static_cast<Code>(p) + d[i];
  return x;
}

DigitSpace SpaceOf(const AbGroup& g) {
  return DigitSpace{g.field().characteristic(), g.field().degree() * g.dim()};
}

namespace {

std::vector<std::vector<Code>> RandomMatrix(std::int64_t p, int rows, int cols, Rng& rng) {
  std::vector<std::vector<Code>> m(rows, std::vector<Code>(cols));
  for (auto& row : m) {
    for (Code& e : row) e = static_cast<Code>(RandomBelow(rng, p));
  }
  return m;
}

bool Invertible(std::vector<std::vector<Code>> m, std::int64_t p) {
  const int n = static_cast<int>(m.size());
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(m[piv], m[col]);
    // inverse of the pivot mod p by search (p is small)
    Code inv = 1;
    while ((inv * m[col][col]) % p != 1) ++inv;
    for (Code& e : m[col]) e = static_cast<Code>((e * inv) % p);
    for (int r = col + 1; r < n; ++r) {
      const Code factor = m[r][col];
      for (int j = 0; j < n; ++j) {
        m[r][j] = static_cast<Code>((m[r][j] + (p - factor) * m[col][j]) % p);
      }
    }
  }
  return true;
}

FnTable Apply(const DigitSpace& from, const DigitSpace& to,
              const std::vector<std::vector<Code>>& m) {
  FnTable t(from.size());
  for (Code x = 0; x < t.size(); ++x) {
    const std::vector<Code> d = from.digits(x);
    std::vector<Code> out(to.dims, 0);
    for (int i = 0; i < to.dims; ++i) {
      std::uint64_t acc = 0;
      for (int j = 0; j < from.dims; ++j) acc += static_cast<std::uint64_t>(m[i][j]) * d[j];
      out[i] = static_cast<Code>(acc % from.p);
    }
    t[x] = to.compose(out);
  }
  return t;
}

}  // namespace

FnTable RandomLinearBijection(const DigitSpace& s, Rng& rng) {
  while (true) {
    auto m = RandomMatrix(s.p, s.dims, s.dims, rng);
    if (Invertible(m, s.p)) return Apply(s, s, m);
  }
}

FnTable RandomLinearMap(const DigitSpace& from, const DigitSpace& to, Rng& rng) {
  return Apply(from, to, RandomMatrix(from.p, to.dims, from.dims, rng));
}

std::uint64_t ClosureSize(const HGroup& g, const std::vector<Code>& gens) {
  std::vector<bool> seen(g.order(), false);
  std::vector<Code> frontier{g.identity_code()};
  seen[g.identity_code()] = true;
  std::uint64_t count = 1;
  while (!frontier.empty()) {
    const Code x = frontier.back();
    frontier.pop_back();
    for (Code s : gens) {
      const Code y = MatrixProduct(g, x, s);
      if (!seen[y]) {
        seen[y] = true;
        ++count;
        frontier.push_back(y);
      }
    }
  }
  return count;
}

std::vector<FieldHom> AllEmbeddings(const Field& k, const Field& m) {
  std::vector<FieldHom> out;
  if (k.characteristic() != m.characteristic()) return out;
  const Code gen_candidates = k.is_prime() ? 1 : static_cast<Code>(m.order());
  for (Code s = 0; s < gen_candidates; ++s) {
    FnTable t(k.order());
    for (Code x = 0; x < k.order(); ++x) {
      Code acc = 0, power = 1;
      for (int j = 0; j < k.degree(); ++j) {
        acc = m.add(acc, m.mul(m.from_int(k.coeff(x, j)), power));
        power = m.mul(power, s);
      }
      t[x] = acc;
    }
    bool ok = t[1] == 1;
    for (Code x = 0; ok && x < k.order(); ++x)
      for (Code y = 0; ok && y < k.order(); ++y)
        ok = t[k.add(x, y)] == m.add(t[x], t[y]) && t[k.mul(x, y)] == m.mul(t[x], t[y]);
    if (ok) out.push_back(FieldHom::Make(k, m, std::move(t)));
  }
  return out;
}

}  // namespace heisenlab::oracle
