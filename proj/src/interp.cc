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

#include "heisenlab/interp.h"

#include <string>

#include "heisenlab/error.h"

namespace heisenlab {
namespace {

constexpr std::uint64_t kMaxReconstructOrder = 8;

void RequireCentral(const InterpContext& ctx, Code g) {
  if (g >= ctx.group.order() || !ctx.group.is_central(g)) {
    throw Error(ErrorCode::kNotCentral,
                (g < ctx.group.order() ? ctx.group.format(g) : std::to_string(g)) +
                    " is not in the center",
                {g});
  }
}

}  // namespace

InterpContext InterpContext::Make(HGroup group) {
  if (!group.field().is_finite()) {
    throw Error(ErrorCode::kInfiniteField,
                "witness search over H(" + group.field().name() + ") is unbounded");
  }
  if (!group.codable() || group.order() > kMaxEnumeratedGroup) {
    throw Error(ErrorCode::kTooLarge,
                "H(" + group.field().name() + ") has more than 2^16 elements");
  }
  InterpContext ctx{group, group.u_code(), group.v_code(), group.center_codes(),
                    {}, {}};
  for (Code w = 0; w < group.order(); ++w) {
    if (group.comm(w, ctx.u) == 0) ctx.centralizer_u.push_back(w);
    if (group.comm(w, ctx.v) == 0) ctx.centralizer_v.push_back(w);
  }
  return ctx;
}

Code Oplus(const InterpContext& ctx, Code x, Code y) {
  RequireCentral(ctx, x);
  RequireCentral(ctx, y);
  return ctx.group.mul(x, y);
}

bool WitnessSatisfies(const InterpContext& ctx, Code x, Code y, Code z,
                      Code xp, Code yp) {
  const HGroup& g = ctx.group;
  const Code id = g.identity_code();
  return g.comm(xp, ctx.u) == id && g.comm(yp, ctx.v) == id &&
         g.comm(xp, ctx.v) == x && g.comm(ctx.u, yp) == y && g.comm(xp, yp) == z;
}

OtimesResult OtimesHolds(const InterpContext& ctx, Code x, Code y, Code z,
                         WitnessSearch mode) {
  RequireCentral(ctx, x);
  RequireCentral(ctx, y);
  RequireCentral(ctx, z);
  const HGroup& g = ctx.group;
  const Code n = static_cast<Code>(g.order());
  if (mode == WitnessSearch::kExhaustive) {
    for (Code xp = 0; xp < n; ++xp) {
      for (Code yp = 0; yp < n; ++yp) {
        if (WitnessSatisfies(ctx, x, y, z, xp, yp)) {
          return {true, std::make_pair(xp, yp)};
        }
      }
    }
    return {};
  }
  for (Code xp : ctx.centralizer_u) {
    if (g.comm(xp, ctx.v) != x) continue;
    for (Code yp : ctx.centralizer_v) {
      if (g.comm(ctx.u, yp) == y && g.comm(xp, yp) == z) {
        return {true, std::make_pair(xp, yp)};
      }
    }
  }
  return {};
}

ReconstructedField ReconstructField(const InterpContext& ctx) {
  const Field& k = ctx.group.field();
  const Code q = static_cast<Code>(k.order());
  if (q > kMaxReconstructOrder) {
    throw Error(ErrorCode::kTooLarge, "reconstruction is limited to |K| <= 8");
  }
  const HGroup& g = ctx.group;
  ReconstructedField out;
  out.add.assign(q, std::vector<Code>(q));
  out.mul.assign(q, std::vector<Code>(q));
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      const Code cx = ctx.domain[x], cy = ctx.domain[y];
      out.add[x][y] = g.c_of(Oplus(ctx, cx, cy));
      std::optional<Code> product;
      for (Code z = 0; z < q; ++z) {
        if (!OtimesHolds(ctx, cx, cy, ctx.domain[z]).holds) continue;
        if (product) {
          throw Error(ErrorCode::kInterpretationFailure,
                      "two products for (" + k.format(x) + ", " + k.format(y) + ")",
                      {x, y, z});
        }
        product = z;
      }
      if (!product) {
        throw Error(ErrorCode::kInterpretationFailure,
                    "no product for (" + k.format(x) + ", " + k.format(y) + ")",
                    {x, y});
      }
      out.mul[x][y] = *product;
    }
  }
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      if (out.add[x][y] != k.add(x, y)) {
        throw Error(ErrorCode::kInterpretationFailure, "sum table differs",
                    {x, y, out.add[x][y]});
      }
      if (out.mul[x][y] != k.mul(x, y)) {
        throw Error(ErrorCode::kInterpretationFailure, "product table differs",
                    {x, y, out.mul[x][y]});
      }
    }
  }
  return out;
}

InterpCheck CheckInterpretation(const InterpContext& ctx, WitnessSearch mode) {
  const Field& k = ctx.group.field();
  const Code q = static_cast<Code>(k.order());
  InterpCheck check;
  for (Code x = 0; x < q; ++x) {
    for (Code y = 0; y < q; ++y) {
      for (Code z = 0; z < q; ++z) {
        ++check.total;
        const bool holds =
            OtimesHolds(ctx, ctx.domain[x], ctx.domain[y], ctx.domain[z], mode).holds;
        if (holds == (k.mul(x, y) == z)) {
          ++check.passed;
        } else if (!check.first_failure) {
          check.first_failure = std::vector<Code>{x, y, z};
        }
      }
    }
  }
  return check;
}

}  // namespace heisenlab
