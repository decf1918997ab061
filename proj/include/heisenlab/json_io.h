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

// JSON encodings.
//
//   field      {"kind": "prime"|"extension"|"rationals", "p", "n", "modulus": [c0..cn]}
//   element    [c0, ..., c_{n-1}] (finite), {"num": "..", "den": ".."} (Q)
//   H element  {"a": element, "b": element, "c": element}
//   field map  [element, ...] in source enumeration order
//   AbGroup    field descriptor plus "dim"
//   cocycle    {"domain": AbGroup, "codomain": AbGroup, "table": [[a, a', b], ...]}
//              with a, a', b AbGroup element codes
//   AutParams  {"A": [[a, b], [c, d]], "psi1": field map, "psi2": field map}
//   hom file   {"images": [H element, ...]} in source enumeration order, or
//              {"u": H element, "v": H element} for prime-field sources
//
// Decoding failures raise kParseError.

#ifndef HEISENLAB_JSON_IO_H_
#define HEISENLAB_JSON_IO_H_

#include <json.hpp>

#include "heisenlab/automorphisms.h"
#include "heisenlab/central_ext.h"
#include "heisenlab/decompose.h"
#include "heisenlab/field.h"
#include "heisenlab/heisenberg.h"

namespace heisenlab {

using Json = nlohmann::json;

Json FieldToJson(const Field& field);
Field FieldFromJson(const Json& j);

Json ElementToJson(const Field& field, Code x);
Json ElementToJson(const Field& field, const FieldElement& x);
// Also accepts a bare integer for finite fields.
Code ElementFromJson(const Field& field, const Json& j);
FieldElement FieldElementFromJson(const Field& field, const Json& j);

Json HElementToJson(const HGroup& group, Code g);
Json HElementToJson(const HGroup& group, const HElement& g);
Code HElementFromJson(const HGroup& group, const Json& j);

Json FieldMapToJson(const Field& target, const FnTable& table);
FnTable FieldMapFromJson(const Field& target, const Json& j);

Json CocycleToJson(const Cocycle& c);
Cocycle CocycleFromJson(const Json& j);

Json AutParamsToJson(const Field& field, const AutParams& p);
AutParams AutParamsFromJson(const Field& field, const Json& j);

Json DecompositionToJson(const Decomposition& d);

Json HomToJson(const GroupHomTable& f);
// Table only; validation is left to GroupHomTable::Make.
FnTable HomTableFromJson(const HGroup& source, const HGroup& target, const Json& j);

}  // namespace heisenlab

#endif  // HEISENLAB_JSON_IO_H_
