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

#include "heisenlab/field_hom.h"

#include <string>

#include "heisenlab/error.h"

namespace heisenlab {
namespace {

// Pair checks up to this many pairs; beyond it homomorphism checks run over
// (x, basis vector) and (x, primitive element), which is equivalent.
constexpr std::uint64_t kPairCheckLimit = 1u << 20;

// Row echelon basis of a subspace of F_p^dim.
class Echelon {
 public:
  Echelon(const Field& prime, int dim) : prime_(prime), dim_(dim) {}

  int rank() const { return static_cast<int>(rows_.size()); }

  // Adds v to the span; returns false if it was already in it.
  bool Insert(std::vector<Code> v) {
    Reduce(v);
    for (int c = 0; c < dim_; ++c) {
      if (v[c] == 0) continue;
      const Code scale = prime_.inv(v[c]);
      for (Code& x : v) x = prime_.mul(x, scale);
      rows_.push_back(std::move(v));
      pivots_.push_back(c);
      return true;
    }
    return false;
  }

  bool Contains(std::vector<Code> v) const {
    Reduce(v);
    for (Code x : v) {
      if (x != 0) return false;
    }
    return true;
  }

 private:
  void Reduce(std::vector<Code>& v) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Code f = v[pivots_[r]];
      if (f == 0) continue;
      for (int c = 0; c < dim_; ++c) {
        v[c] = prime_.sub(v[c], prime_.mul(f, rows_[r][c]));
      }
    }
  }

  Field prime_;
  int dim_;
  std::vector<std::vector<Code>> rows_;
  std::vector<int> pivots_;
};

// Inverse of a square matrix over F_p, or empty when singular.
std::vector<std::vector<Code>> Invert(const Field& prime,
                                      std::vector<std::vector<Code>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<Code>> inv(n, std::vector<Code>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return {};
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Code scale = prime.inv(a[col][col]);
    for (std::size_t c = 0; c < n; ++c) {
      a[col][c] = prime.mul(a[col][c], scale);
      inv[col][c] = prime.mul(inv[col][c], scale);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Code f = a[r][col];
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = prime.sub(a[r][c], prime.mul(f, a[col][c]));
        inv[r][c] = prime.sub(inv[r][c], prime.mul(f, inv[col][c]));
      }
    }
  }
  return inv;
}

Code BasisVector(const Field& field, int j) {
  Code x = 1;
  for (int i = 0; i < j; ++i) x *= static_cast<Code>(field.characteristic());
  return x;
}

void RequireFinite(const Field& f) {
  if (!f.is_finite()) {
    throw Error(ErrorCode::kInfiniteField, f.name() + " is infinite");
  }
}

[[noreturn]] void NotHom(const std::string& what, Code x, Code y) {
  throw Error(ErrorCode::kNotFieldHom, "table does not preserve " + what,
              {x, y});
}

}  // namespace

FieldHom FieldHom::Make(Field source, Field target, FnTable table) {
  RequireFinite(source);
  RequireFinite(target);
  if (source.characteristic() != target.characteristic()) {
    throw Error(ErrorCode::kCharacteristicMismatch,
                source.name() + " and " + target.name() +
                    " have different characteristic");
  }
  const std::uint64_t q = source.order();
  if (table.size() != q) {
    throw Error(ErrorCode::kShapeMismatch,
                "field map table must have " + std::to_string(q) + " entries");
  }
  for (Code x = 0; x < q; ++x) {
    if (table[x] >= target.order()) {
      throw Error(ErrorCode::kShapeMismatch, "table value outside target",
                  {x});
    }
  }
  if (table[0] != 0) NotHom("0", 0, 0);
  if (table[1] != 1) NotHom("1", 1, 1);
  if (q * q <= kPairCheckLimit) {
    for (Code x = 0; x < q; ++x) {
      for (Code y = 0; y < q; ++y) {
        if (table[source.add(x, y)] != target.add(table[x], table[y])) {
          NotHom("+", x, y);
        }
        if (table[source.mul(x, y)] != target.mul(table[x], table[y])) {
          NotHom("*", x, y);
        }
      }
    }
  } else {
    const Code g = source.primitive_element();
    for (Code x = 0; x < q; ++x) {
      for (int j = 0; j < source.degree(); ++j) {
        const Code e = BasisVector(source, j);
        if (table[source.add(x, e)] != target.add(table[x], table[e])) {
          NotHom("+", x, e);
        }
      }
      if (table[source.mul(x, g)] != target.mul(table[x], table[g])) {
        NotHom("*", x, g);
      }
    }
  }
  std::vector<bool> seen(target.order(), false);
  for (Code x = 0; x < q; ++x) {
    if (seen[table[x]]) throw Error(ErrorCode::kNotInjective, "repeated value", {x});
    seen[table[x]] = true;
  }
  return FieldHom(std::move(source), std::move(target), std::move(table));
}

FieldHom FieldHom::Identity(const Field& field) {
  RequireFinite(field);
  FnTable table(field.order());
  for (Code x = 0; x < table.size(); ++x) table[x] = x;
  return FieldHom(field, field, std::move(table));
}

FieldHom FieldHom::Then(const FieldHom& next) const {
  if (!(target_ == next.source_)) {
    throw Error(ErrorCode::kFieldMismatch, "composition of incompatible maps");
  }
  FnTable table(table_.size());
  for (Code x = 0; x < table.size(); ++x) table[x] = next.table_[table_[x]];
  return FieldHom(source_, next.target_, std::move(table));
}

FieldHom Frobenius(const Field& field) {
  RequireFinite(field);
  FnTable table(field.order());
  const auto p = static_cast<std::uint64_t>(field.characteristic());
  for (Code x = 0; x < table.size(); ++x) table[x] = field.pow(x, p);
  return FieldHom::Make(field, field, std::move(table));
}

FieldHom CanonicalEmbedding(const Field& prime, const Field& extension) {
  RequireFinite(prime);
  RequireFinite(extension);
  if (!prime.is_prime() ||
      prime.characteristic() != extension.characteristic()) {
    throw Error(ErrorCode::kCharacteristicMismatch,
                prime.name() + " is not the prime field of " +
                    extension.name());
  }
  FnTable table(prime.order());
  // Constants have the same code in every F_p[t]/(m).
  for (Code x = 0; x < table.size(); ++x) table[x] = x;
  return FieldHom::Make(prime, extension, std::move(table));
}

std::vector<Code> ComplementBasis(const FieldHom& theta) {
  const Field& k = theta.source();
  const Field& m = theta.target();
  const Field prime = Field::Prime(m.characteristic());
  Echelon span(prime, m.degree());
  auto add_k_multiples = [&](Code v) {
    for (int j = 0; j < k.degree(); ++j) {
      span.Insert(m.coeffs(m.mul(theta(BasisVector(k, j)), v)));
    }
  };
  add_k_multiples(1);
  std::vector<Code> basis;
  for (Code v = 1; v < m.order() && span.rank() < m.degree(); ++v) {
    if (span.Contains(m.coeffs(v))) continue;
    basis.push_back(v);
    add_k_multiples(v);
  }
  return basis;
}

DirectSplit SplitAlong(const FieldHom& theta,
                       std::span<const Code> complement) {
  const Field& k = theta.source();
  const Field& m = theta.target();
  const Field prime = Field::Prime(m.characteristic());
  const int dim = m.degree();
  // Columns theta(e_j) * b_i with b_0 = 1, j running over the F_p-basis of K.
  std::vector<Code> directions = {1};
  directions.insert(directions.end(), complement.begin(), complement.end());
  std::vector<std::vector<Code>> matrix(dim, std::vector<Code>());
  std::size_t columns = 0;
  for (Code b : directions) {
    if (b >= m.order()) {
      throw Error(ErrorCode::kBadComplement, "complement vector outside field",
                  {b});
    }
    for (int j = 0; j < k.degree(); ++j) {
      const std::vector<Code> col = m.coeffs(m.mul(theta(BasisVector(k, j)), b));
      for (int r = 0; r < dim; ++r) matrix[r].push_back(col[r]);
      ++columns;
    }
  }
  if (columns != static_cast<std::size_t>(dim)) {
    throw Error(ErrorCode::kBadComplement,
                "complement has the wrong dimension over " + k.name());
  }
  const auto inverse = Invert(prime, matrix);
  if (inverse.empty()) {
    throw Error(ErrorCode::kBadComplement,
                "complement meets the image of " + k.name());
  }
  DirectSplit split;
  split.sub.resize(m.order());
  split.rest.resize(m.order());
  std::vector<std::int64_t> sub_coeffs(k.degree());
  for (Code x = 0; x < m.order(); ++x) {
    const std::vector<Code> c = m.coeffs(x);
    for (int j = 0; j < k.degree(); ++j) {
      Code acc = 0;
      for (int r = 0; r < dim; ++r) {
        acc = prime.add(acc, prime.mul(inverse[j][r], c[r]));
      }
      sub_coeffs[j] = acc;
    }
    const Code sub = k.from_coeffs(sub_coeffs);
    split.sub[x] = sub;
    split.rest[x] = m.sub(x, theta(sub));
  }
  return split;
}

LinearRetraction RetractionFor(const FieldHom& theta) {
  std::vector<Code> complement = ComplementBasis(theta);
  DirectSplit split = SplitAlong(theta, complement);
  return LinearRetraction{theta, std::move(split.sub), std::move(complement)};
}

std::vector<Code> KSpan(const FieldHom& theta, std::span<const Code> vectors) {
  const Field& k = theta.source();
  const Field& m = theta.target();
  std::vector<Code> out = {0};
  for (Code v : vectors) {
    std::vector<Code> next;
    next.reserve(out.size() * k.order());
    for (Code base : out) {
      for (Code s = 0; s < k.order(); ++s) {
        next.push_back(m.add(base, m.mul(theta(s), v)));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace heisenlab
