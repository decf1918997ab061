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

// Exact fields: prime fields F_p, extensions F_p[t]/(m), and the rationals.
//
// A finite field element is addressed by its code, the integer
// c_0 + c_1 p + ... + c_{n-1} p^{n-1} built from its coefficient vector over
// the power basis 1, t, ..., t^{n-1}. Codes 0..q-1 are the enumeration order
// of the field and every FnTable over a field is indexed by them. The order
// is lexicographic on coefficient vectors read from the leading coefficient
// down, so the prime subfield occupies codes 0..p-1.

#ifndef HEISENLAB_FIELD_H_
#define HEISENLAB_FIELD_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace heisenlab {

using Code = std::uint32_t;

// Dense value table of a map between finite carriers, indexed by the source
// enumeration order and holding target codes.
using FnTable = std::vector<Code>;

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class FieldKind { kPrime, kExtension, kRationals };

inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

class FieldElement {
 public:
  FieldElement() = default;
  explicit FieldElement(Code code) : value_(code) {}
  explicit FieldElement(Rational q) : value_(std::move(q)) {}

  bool is_rational() const { return value_.index() == 1; }
  // Throws kInfiniteField on a rational element.
  Code code() const;
  // Throws kFieldMismatch on a finite element.
  const Rational& rational() const;

  friend bool operator==(const FieldElement&, const FieldElement&) = default;
  friend bool operator<(const FieldElement& x, const FieldElement& y) {
    return x.value_ < y.value_;
  }

 private:
  std::variant<Code, Rational> value_{Code{0}};
};

class Field {
 public:
  // The field_make entry point. `modulus` lists c_0..c_n of a monic
  // polynomial of degree n; when empty and p^n <= 49 the built-in default is
  // used. Errors: kNotPrime, kReducibleModulus, kUnsupportedSize,
  // kMissingModulus.
  static Field Make(FieldKind kind, std::int64_t p = 0, int n = 1,
                    std::span<const std::int64_t> modulus = {});
  static Field Prime(std::int64_t p);
  static Field Extension(std::int64_t p, int n,
                         std::span<const std::int64_t> modulus = {});
  static Field Rationals();

  // Smallest monic irreducible polynomial of degree n over F_p, by the
  // enumeration order of its lower coefficients. Only defined for
  // 4 <= p^n <= 49; returns nullopt otherwise.
  static std::optional<std::vector<std::int64_t>> DefaultModulus(
      std::int64_t p, int n);

  FieldKind kind() const;
  bool is_finite() const { return kind() != FieldKind::kRationals; }
  bool is_prime() const { return kind() == FieldKind::kPrime; }
  // 0 for the rationals.
  std::int64_t characteristic() const;
  // Degree over the prime field; 1 for F_p, n for F_{p^n}, 0 for Q.
  int degree() const;
  // Number of elements; 0 for the rationals.
  std::uint64_t order() const;
  // Coefficients c_0..c_n of the modulus (empty unless kExtension).
  const std::vector<Code>& modulus() const;

  // "F5", "F9:t^2+1", "Q".
  std::string name() const;

  // --- Finite arithmetic on codes. Behaviour is undefined for codes outside
  // [0, order()); calling these on Q throws kInfiniteField.
  Code add(Code x, Code y) const;
  Code sub(Code x, Code y) const;
  Code neg(Code x) const;
  Code mul(Code x, Code y) const;
  // Throws kDivisionByZero on 0.
  Code inv(Code x) const;
  Code div(Code x, Code y) const { return mul(x, inv(y)); }
  Code pow(Code x, std::uint64_t e) const;
  // Image of an integer under Z -> F_p -> this field.
  Code from_int(std::int64_t value) const;
  Code from_coeffs(std::span<const std::int64_t> coeffs) const;
  std::vector<Code> coeffs(Code x) const;
  // Coefficient of t^i.
  Code coeff(Code x, int i) const;
  // Generator of the multiplicative group (the first one in code order).
  Code primitive_element() const;

  // --- Element-level arithmetic, valid for every kind.
  FieldElement zero() const;
  FieldElement one() const;
  FieldElement element(Code code) const;
  FieldElement integer(std::int64_t value) const;
  // Throws kDivisionByZero when den == 0.
  FieldElement fraction(const BigInt& num, const BigInt& den) const;
  FieldElement add(const FieldElement& x, const FieldElement& y) const;
  FieldElement sub(const FieldElement& x, const FieldElement& y) const;
  FieldElement neg(const FieldElement& x) const;
  FieldElement mul(const FieldElement& x, const FieldElement& y) const;
  FieldElement inv(const FieldElement& x) const;
  FieldElement div(const FieldElement& x, const FieldElement& y) const;
  bool is_zero(const FieldElement& x) const;
  // Membership check used when elements cross API boundaries.
  bool contains(const FieldElement& x) const;

  // Integers for prime fields, coefficient lists "[c0,c1]" for extensions,
  // "n/d" for rationals.
  std::string format(Code x) const;
  std::string format(const FieldElement& x) const;

  friend bool operator==(const Field& x, const Field& y);

 private:
  friend struct FieldTableBuilder;
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  const Impl& finite() const;

  std::shared_ptr<const Impl> impl_;
};

// Parses "F5", "F9", "F9:t^2+1", "F8:t^3+t+1", "Q". Throws kParseError on
// malformed text and the field_make errors otherwise.
Field ParseFieldSpec(std::string_view spec);

// `true` iff p is prime (trial division).
bool IsPrime(std::int64_t p);

// Trial division of a monic polynomial over F_p by every monic polynomial of
// degree 1..n/2. Coefficients are c_0..c_n.
bool IsIrreducible(std::int64_t p, std::span<const std::int64_t> monic);

}  // namespace heisenlab

#endif  // HEISENLAB_FIELD_H_
