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

// Seeded randomness for property checks. Only the raw mt19937_64 stream is
// used, so values are reproducible across standard library implementations.

#ifndef HEISENLAB_RANDOM_H_
#define HEISENLAB_RANDOM_H_

#include <cstdint>
#include <random>

namespace heisenlab {

using Rng = std::mt19937_64;

inline std::uint64_t RandomBelow(Rng& rng, std::uint64_t n) { return rng() % n; }

}  // namespace heisenlab

#endif  // HEISENLAB_RANDOM_H_
