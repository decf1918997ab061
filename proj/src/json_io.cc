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

#include "heisenlab/json_io.h"

#include <string>

#include "heisenlab/error.h"

namespace heisenlab {
namespace {

[[noreturn]] void Bad(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

const Json& Member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    Bad(std::string("missing key \"") + key + "\"");
  }
  return j.at(key);
}

std::int64_t Int(const Json& j, const char* what) {
  if (!j.is_number_integer()) Bad(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t Residue(std::int64_t v, std::int64_t p) {
  v %= p;
  return v < 0 ? v + p : v;
}

Json AbGroupToJson(const AbGroup& g) {
  Json j = FieldToJson(g.field());
  j["dim"] = g.dim();
  return j;
}

AbGroup AbGroupFromJson(const Json& j) {
  const int dim = j.contains("dim") ? static_cast<int>(Int(j.at("dim"), "dim")) : 1;
  if (dim < 1) Bad("dim must be positive");
  return AbGroup(FieldFromJson(j), dim);
}

}  // namespace

Json FieldToJson(const Field& field) {
  Json j;
  switch (field.kind()) {
    case FieldKind::kRationals:
      j["kind"] = "rationals";
      j["p"] = 0;
      j["n"] = 1;
      return j;
    case FieldKind::kPrime:
      j["kind"] = "prime";
      break;
    case FieldKind::kExtension:
      j["kind"] = "extension";
      j["modulus"] = field.modulus();
      break;
  }
  j["p"] = field.characteristic();
  j["n"] = field.degree();
  return j;
}

Field FieldFromJson(const Json& j) {
  const Json& kind = Member(j, "kind");
  if (!kind.is_string()) Bad("\"kind\" must be a string");
  const std::string k = kind.get<std::string>();
  if (k == "rationals") return Field::Rationals();
  const std::int64_t p = Int(Member(j, "p"), "p");
  if (k == "prime") return Field::Prime(p);
  if (k != "extension") Bad("unknown field kind \"" + k + "\"");
  const int n = static_cast<int>(Int(Member(j, "n"), "n"));
  std::vector<std::int64_t> modulus;
  if (j.contains("modulus")) {
    if (!j.at("modulus").is_array()) Bad("\"modulus\" must be an array");
    for (const Json& c : j.at("modulus")) modulus.push_back(Int(c, "modulus coefficient"));
  }
  return Field::Extension(p, n, modulus);
}

Json ElementToJson(const Field& field, Code x) {
  Json arr = Json::array();
  for (Code c : field.coeffs(x)) arr.push_back(c);
  return arr;
}

Json ElementToJson(const Field& field, const FieldElement& x) {
  if (!x.is_rational()) return ElementToJson(field, x.code());
  Json j;
  j["num"] = numerator(x.rational()).str();
  j["den"] = denominator(x.rational()).str();
  return j;
}

Code ElementFromJson(const Field& field, const Json& j) {
  if (!field.is_finite()) Bad("rational elements have no code");
  const std::int64_t p = field.characteristic();
  if (j.is_number_integer()) {
    return field.from_int(Residue(j.get<std::int64_t>(), p));
  }
  if (!j.is_array()) Bad("field element must be a coefficient array");
  if (j.size() > static_cast<std::size_t>(field.degree())) {
    Bad("too many coefficients for " + field.name());
  }
  std::vector<std::int64_t> coeffs;
  for (const Json& c : j) coeffs.push_back(Residue(Int(c, "coefficient"), p));
  return field.from_coeffs(coeffs);
}

FieldElement FieldElementFromJson(const Field& field, const Json& j) {
  if (field.is_finite()) return field.element(ElementFromJson(field, j));
  if (j.is_number_integer()) return field.integer(j.get<std::int64_t>());
  const Json& num = Member(j, "num");
  const Json& den = Member(j, "den");
  if (!num.is_string() || !den.is_string()) Bad("num/den must be decimal strings");
  try {
    BigInt d(den.get<std::string>());
    if (d == 0) Bad("zero denominator");
    return field.fraction(BigInt(num.get<std::string>()), d);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    Bad("num/den must be decimal strings");
  }
}

Json HElementToJson(const HGroup& group, Code g) {
  const Field& f = group.field();
  Json j;
  j["a"] = ElementToJson(f, group.a_of(g));
  j["b"] = ElementToJson(f, group.b_of(g));
  j["c"] = ElementToJson(f, group.c_of(g));
  return j;
}

Json HElementToJson(const HGroup& group, const HElement& g) {
  const Field& f = group.field();
  Json j;
  j["a"] = ElementToJson(f, g.a);
  j["b"] = ElementToJson(f, g.b);
  j["c"] = ElementToJson(f, g.c);
  return j;
}

Code HElementFromJson(const HGroup& group, const Json& j) {
  const Field& f = group.field();
  return group.make_code(ElementFromJson(f, Member(j, "a")),
                         ElementFromJson(f, Member(j, "b")),
                         ElementFromJson(f, Member(j, "c")));
}

Json FieldMapToJson(const Field& target, const FnTable& table) {
  Json arr = Json::array();
  for (Code x : table) arr.push_back(ElementToJson(target, x));
  return arr;
}

FnTable FieldMapFromJson(const Field& target, const Json& j) {
  if (!j.is_array()) Bad("field map must be an array");
  FnTable out;
  for (const Json& e : j) out.push_back(ElementFromJson(target, e));
  return out;
}

Json CocycleToJson(const Cocycle& c) {
  Json j;
  j["domain"] = AbGroupToJson(c.domain);
  j["codomain"] = AbGroupToJson(c.codomain);
  Json rows = Json::array();
  const Code n = static_cast<Code>(c.domain.order());
  for (Code a = 0; a < n; ++a) {
    for (Code a2 = 0; a2 < n; ++a2) rows.push_back({a, a2, c(a, a2)});
  }
  j["table"] = std::move(rows);
  return j;
}

Cocycle CocycleFromJson(const Json& j) {
  AbGroup domain = AbGroupFromJson(Member(j, "domain"));
  AbGroup codomain = AbGroupFromJson(Member(j, "codomain"));
  const Json& rows = Member(j, "table");
  if (!rows.is_array()) Bad("cocycle table must be an array");
  const std::uint64_t n = domain.order();
  FnTable table(n * n, 0);
  std::vector<bool> seen(n * n, false);
  for (const Json& row : rows) {
    if (!row.is_array() || row.size() != 3) Bad("cocycle rows are [a, a', b]");
    const std::int64_t a = Int(row[0], "a"), a2 = Int(row[1], "a'"), b = Int(row[2], "b");
    if (a < 0 || a2 < 0 || static_cast<std::uint64_t>(a) >= n ||
        static_cast<std::uint64_t>(a2) >= n || b < 0 ||
        static_cast<std::uint64_t>(b) >= codomain.order()) {
      Bad("cocycle entry out of range");
    }
    const std::uint64_t idx = static_cast<std::uint64_t>(a) * n + a2;
    if (seen[idx]) Bad("duplicate cocycle entry");
    seen[idx] = true;
    table[idx] = static_cast<Code>(b);
  }
  for (bool s : seen) {
    if (!s) Bad("cocycle table is not total on A x A");
  }
  return Cocycle{std::move(domain), std::move(codomain), std::move(table)};
}

Json AutParamsToJson(const Field& field, const AutParams& p) {
  Json j;
  j["A"] = Json::array({Json::array({ElementToJson(field, p.matrix.a),
                                     ElementToJson(field, p.matrix.b)}),
                        Json::array({ElementToJson(field, p.matrix.c),
                                     ElementToJson(field, p.matrix.d)})});
  j["psi1"] = FieldMapToJson(field, p.psi1);
  j["psi2"] = FieldMapToJson(field, p.psi2);
  return j;
}

AutParams AutParamsFromJson(const Field& field, const Json& j) {
  const Json& a = Member(j, "A");
  if (!a.is_array() || a.size() != 2 || !a[0].is_array() || a[0].size() != 2 ||
      !a[1].is_array() || a[1].size() != 2) {
    Bad("\"A\" must be a 2x2 array");
  }
  AutParams p;
  p.matrix = Mat2{ElementFromJson(field, a[0][0]), ElementFromJson(field, a[0][1]),
                  ElementFromJson(field, a[1][0]), ElementFromJson(field, a[1][1])};
  p.psi1 = FieldMapFromJson(field, Member(j, "psi1"));
  p.psi2 = FieldMapFromJson(field, Member(j, "psi2"));
  return p;
}

Json DecompositionToJson(const Decomposition& d) {
  const Field& m = d.theta.target();
  Json j;
  j["theta"] = FieldMapToJson(m, d.theta.table());
  const Json params = AutParamsToJson(m, d.params);
  j["A"] = params["A"];
  j["psi1"] = params["psi1"];
  j["psi2"] = params["psi2"];
  j["d"] = ElementToJson(m, d.d);
  Json comp = Json::array();
  for (Code c : d.eta.complement) comp.push_back(ElementToJson(m, c));
  j["complement"] = std::move(comp);
  j["verified"] = d.verified;
  return j;
}

Json HomToJson(const GroupHomTable& f) {
  Json j;
  j["source"] = FieldToJson(f.source.field());
  j["target"] = FieldToJson(f.target.field());
  Json images = Json::array();
  for (Code g : f.table) images.push_back(HElementToJson(f.target, g));
  j["images"] = std::move(images);
  return j;
}

FnTable HomTableFromJson(const HGroup& source, const HGroup& target, const Json& j) {
  if (j.is_object() && j.contains("images")) {
    const Json& images = j.at("images");
    if (!images.is_array()) Bad("\"images\" must be an array");
    FnTable table;
    for (const Json& e : images) table.push_back(HElementFromJson(target, e));
    return table;
  }
  if (j.is_object() && j.contains("u") && j.contains("v")) {
    return ExtendGeneratorImages(source, target, HElementFromJson(target, j.at("u")),
                                 HElementFromJson(target, j.at("v")));
  }
  Bad("hom file needs \"images\" or \"u\" and \"v\"");
}

}  // namespace heisenlab
