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

#include "heisenlab/central_ext.h"

#include <string>

#include "heisenlab/error.h"

namespace heisenlab {

AbGroup::AbGroup(Field field, int dim) : field_(std::move(field)), dim_(dim) {
  if (!field_.is_finite()) {
    throw Error(ErrorCode::kInfiniteField, "abelian carriers must be finite");
  }
  if (dim_ < 1) throw Error(ErrorCode::kShapeMismatch, "dimension must be positive");
  order_ = 1;
  for (int i = 0; i < dim_; ++i) {
    order_ *= field_.order();
    if (order_ > (1u << 16)) {
      throw Error(ErrorCode::kTooLarge, "abelian group larger than 2^16");
    }
  }
}

std::vector<Code> AbGroup::components(Code x) const {
  const auto q = static_cast<Code>(field_.order());
  std::vector<Code> out(dim_);
  for (int i = dim_; i-- > 0;) {
    out[i] = x % q;
    x /= q;
  }
  return out;
}

Code AbGroup::compose(std::span<const Code> components) const {
  if (components.size() != static_cast<std::size_t>(dim_)) {
    throw Error(ErrorCode::kShapeMismatch, "wrong number of components");
  }
  const auto q = static_cast<Code>(field_.order());
  Code x = 0;
  for (Code c : components) x = x * q + c;
  return x;
}

Code AbGroup::add(Code x, Code y) const {
  if (dim_ == 1) return field_.add(x, y);
  const auto q = static_cast<Code>(field_.order());
  Code out = 0, scale = 1;
  for (int i = 0; i < dim_; ++i) {
    out += field_.add(x % q, y % q) * scale;
    x /= q;
    y /= q;
    scale *= q;
  }
  return out;
}

Code AbGroup::neg(Code x) const {
  if (dim_ == 1) return field_.neg(x);
  const auto q = static_cast<Code>(field_.order());
  Code out = 0, scale = 1;
  for (int i = 0; i < dim_; ++i) {
    out += field_.neg(x % q) * scale;
    x /= q;
    scale *= q;
  }
  return out;
}

Cocycle Cocycle::FromFunction(AbGroup domain, AbGroup codomain,
                              const std::function<Code(Code, Code)>& fn) {
  const std::uint64_t n = domain.order();
  FnTable table(n * n);
  for (Code a = 0; a < n; ++a) {
    for (Code b = 0; b < n; ++b) table[a * n + b] = fn(a, b);
  }
  return Cocycle{std::move(domain), std::move(codomain), std::move(table)};
}

Cocycle Cocycle::Zero(AbGroup domain, AbGroup codomain) {
  const std::uint64_t n = domain.order();
  return Cocycle{std::move(domain), std::move(codomain), FnTable(n * n, 0)};
}

Cocycle Cocycle::Heisenberg(const Field& field) {
  const AbGroup a(field, 2);
  const auto q = static_cast<Code>(field.order());
  return FromFunction(a, AbGroup(field, 1), [&](Code g, Code h) {
    return field.mul(g / q, h % q);
  });
}

ExtGroup ExtGroup::Build(Cocycle cocycle) {
  const std::uint64_t na = cocycle.domain.order();
  if (cocycle.table.size() != na * na) {
    throw Error(ErrorCode::kShapeMismatch, "cocycle table must cover A x A");
  }
  for (Code v : cocycle.table) {
    if (v >= cocycle.codomain.order()) {
      throw Error(ErrorCode::kShapeMismatch, "cocycle value outside B");
    }
  }
  ExtGroup group(std::move(cocycle));
  for (Code a = 0; a < na; ++a) {
    const Code ga = group.make(a, 0);
    for (Code a2 = 0; a2 < na; ++a2) {
      const Code gab = group.mul(ga, group.make(a2, 0));
      for (Code a3 = 0; a3 < na; ++a3) {
        const Code g3 = group.make(a3, 0);
        if (group.mul(gab, g3) !=
            group.mul(ga, group.mul(group.make(a2, 0), g3))) {
          throw Error(ErrorCode::kNotACocycle,
                      "product is not associative on (" + std::to_string(a) +
                          "," + std::to_string(a2) + "," + std::to_string(a3) +
                          ")",
                      {a, a2, a3});
        }
      }
    }
  }
  return group;
}

Code ExtGroup::mul(Code g, Code h) const {
  const AbGroup& A = a_group();
  const AbGroup& B = b_group();
  const Code a = a_of(g), a2 = a_of(h);
  return make(A.add(a, a2),
              B.add(B.add(b_of(g), b_of(h)), cocycle_(a, a2)));
}

Code ExtGroup::identity() const {
  return make(0, b_group().neg(cocycle_(0, 0)));
}

namespace {

void CheckAdditiveBijection(const AbGroup& group, const FnTable& table,
                            const char* what) {
  const std::uint64_t n = group.order();
  if (table.size() != n) {
    throw Error(ErrorCode::kShapeMismatch,
                std::string(what) + " table has the wrong size");
  }
  std::vector<bool> seen(n, false);
  for (Code x = 0; x < n; ++x) {
    if (table[x] >= n) {
      throw Error(ErrorCode::kShapeMismatch,
                  std::string(what) + " value out of range", {x});
    }
    if (seen[table[x]]) {
      throw Error(ErrorCode::kNotAdditive,
                  std::string(what) + " is not a bijection", {x});
    }
    seen[table[x]] = true;
  }
  for (Code x = 0; x < n; ++x) {
    for (Code y = 0; y < n; ++y) {
      if (table[group.add(x, y)] != group.add(table[x], table[y])) {
        throw Error(ErrorCode::kNotAdditive,
                    std::string(what) + " is not additive", {x, y});
      }
    }
  }
}

}  // namespace

void TriangularMap::Validate(const ExtGroup& group) const {
  CheckAdditiveBijection(group.a_group(), alpha, "alpha");
  CheckAdditiveBijection(group.b_group(), beta, "beta");
  if (gamma.size() != group.a_group().order()) {
    throw Error(ErrorCode::kShapeMismatch, "gamma table has the wrong size");
  }
  for (Code x = 0; x < gamma.size(); ++x) {
    if (gamma[x] >= group.b_group().order()) {
      throw Error(ErrorCode::kShapeMismatch, "gamma value out of range", {x});
    }
  }
}

FnTable PsiFrom(const ExtGroup& group, const TriangularMap& map) {
  map.Validate(group);
  const AbGroup& B = group.b_group();
  FnTable out(group.order());
  for (Code g = 0; g < out.size(); ++g) {
    const Code a = group.a_of(g);
    out[g] = group.make(map.alpha[a], B.add(map.beta[group.b_of(g)], map.gamma[a]));
  }
  return out;
}

bool HomCondition(const ExtGroup& group, const TriangularMap& map) {
  map.Validate(group);
  const AbGroup& A = group.a_group();
  const AbGroup& B = group.b_group();
  const Cocycle& c = group.cocycle();
  for (Code a = 0; a < A.order(); ++a) {
    for (Code a2 = 0; a2 < A.order(); ++a2) {
      const Code lhs = B.add(map.beta[c(a, a2)], map.gamma[A.add(a, a2)]);
      const Code rhs = B.add(B.add(map.gamma[a], map.gamma[a2]),
                             c(map.alpha[a], map.alpha[a2]));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::optional<std::pair<Code, Code>> FindProductFailure(const ExtGroup& group,
                                                        const FnTable& table) {
  const std::uint64_t n = group.order();
  for (Code g = 0; g < n; ++g) {
    for (Code h = 0; h < n; ++h) {
      if (table[group.mul(g, h)] != group.mul(table[g], table[h])) {
        return std::make_pair(g, h);
      }
    }
  }
  return std::nullopt;
}

bool IsAutomorphism(const ExtGroup& group, const FnTable& table) {
  const std::uint64_t n = group.order();
  if (table.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (Code v : table) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  return !FindProductFailure(group, table).has_value();
}

}  // namespace heisenlab
