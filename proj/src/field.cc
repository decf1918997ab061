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

#include "heisenlab/field.h"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

#include "heisenlab/error.h"

namespace heisenlab {

struct Field::Impl {
  FieldKind kind = FieldKind::kRationals;
  std::int64_t p = 0;
  int n = 0;
  std::uint64_t q = 0;
  std::vector<Code> modulus;
  std::vector<Code> powers;  // p^i, i = 0..n
  // Discrete log tables w.r.t. the first primitive element in code order.
  std::vector<Code> exp_table;  // size q - 1
  std::vector<Code> log_table;  // size q, log_table[0] unused
  // Dense addition table for small extension fields.
  std::vector<std::uint16_t> add_table;
};

namespace {

using Poly = std::vector<std::int64_t>;  // c_0..c_k over F_p

std::int64_t Mod(std::int64_t x, std::int64_t p) {
  const std::int64_t r = x % p;
  return r < 0 ? r + p : r;
}

void Trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

// Remainder of f modulo a monic g, both reduced mod p.
Poly PolyRem(Poly f, const Poly& g, std::int64_t p) {
  const std::size_t dg = g.size() - 1;
  Trim(f);
  while (f.size() > dg) {
    const std::int64_t lead = f.back();
    const std::size_t shift = f.size() - 1 - dg;
    for (std::size_t j = 0; j <= dg; ++j) {
      f[shift + j] = Mod(f[shift + j] - lead * g[j], p);
    }
    Trim(f);
  }
  return f;
}

// Product of two residues modulo the monic modulus, as coefficient vectors of
// length n.
std::vector<Code> MulMod(const std::vector<Code>& x, const std::vector<Code>& y,
                         const std::vector<Code>& modulus, std::int64_t p) {
  const std::size_t n = modulus.size() - 1;
  std::vector<std::int64_t> r(2 * n - 1, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      r[i + j] = (r[i + j] + static_cast<std::int64_t>(x[i]) * y[j]) % p;
    }
  }
  for (std::size_t k = r.size(); k-- > n;) {
    const std::int64_t c = r[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      r[k - n + j] = Mod(r[k - n + j] - c * modulus[j], p);
    }
  }
  std::vector<Code> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Code>(r[i]);
  return out;
}

std::vector<std::int64_t> PrimeFactors(std::uint64_t m) {
  std::vector<std::int64_t> out;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      out.push_back(static_cast<std::int64_t>(d));
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) out.push_back(static_cast<std::int64_t>(m));
  return out;
}

std::string FormatPoly(const std::vector<Code>& c) {
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0 || c[k] != 1) out += std::to_string(c[k]);
    if (k >= 1) out += "t";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

[[noreturn]] void ThrowInfinite() {
  throw Error(ErrorCode::kInfiniteField,
              "operation requires a finite field");
}

}  // namespace

struct FieldTableBuilder {
  static void Build(Field::Impl& f) {
    const std::uint64_t q = f.q;
    f.log_table.assign(q, 0);
    f.exp_table.assign(q - 1, 0);
    if (q == 2) {
      f.exp_table[0] = 1;
      return;
    }
    auto to_vec = [&](Code x) {
      std::vector<Code> v(f.n);
      for (int i = 0; i < f.n; ++i) {
        v[i] = x % f.p;
        x /= f.p;
      }
      return v;
    };
    auto to_code = [&](const std::vector<Code>& v) {
      Code x = 0;
      for (int i = f.n; i-- > 0;) x = x * f.p + v[i];
      return x;
    };
    std::vector<Code> modulus = f.modulus;
    if (f.kind == FieldKind::kPrime) modulus = {0, 1};  // arithmetic mod t
    auto mul = [&](const std::vector<Code>& x, const std::vector<Code>& y) {
      if (f.kind == FieldKind::kPrime) {
        return std::vector<Code>{static_cast<Code>(
            static_cast<std::uint64_t>(x[0]) * y[0] % f.p)};
      }
      return MulMod(x, y, modulus, f.p);
    };
    auto pow = [&](std::vector<Code> x, std::uint64_t e) {
      std::vector<Code> r = to_vec(1);
      while (e > 0) {
        if (e & 1) r = mul(r, x);
        x = mul(x, x);
        e >>= 1;
      }
      return r;
    };
    const std::vector<std::int64_t> factors = PrimeFactors(q - 1);
    Code generator = 0;
    for (Code g = 2; g < q; ++g) {
      bool primitive = true;
      for (std::int64_t r : factors) {
        if (to_code(pow(to_vec(g), (q - 1) / r)) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
    const std::vector<Code> g = to_vec(generator);
    std::vector<Code> x = to_vec(1);
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      const Code code = to_code(x);
      f.exp_table[k] = code;
      f.log_table[code] = static_cast<Code>(k);
      x = mul(x, g);
    }
    if (f.kind == FieldKind::kExtension && q <= 256) {
      f.add_table.resize(q * q);
      for (Code a = 0; a < q; ++a) {
        for (Code b = 0; b < q; ++b) {
          Code sum = 0;
          for (int i = f.n; i-- > 0;) {
            const Code da = a / f.powers[i] % f.p;
            const Code db = b / f.powers[i] % f.p;
            sum = sum * f.p + (da + db) % f.p;
          }
          f.add_table[a * q + b] = static_cast<std::uint16_t>(sum);
        }
      }
    }
  }
};

Code FieldElement::code() const {
  if (is_rational()) {
    throw Error(ErrorCode::kInfiniteField, "rational element has no code");
  }
  return std::get<Code>(value_);
}

const Rational& FieldElement::rational() const {
  if (!is_rational()) {
    throw Error(ErrorCode::kFieldMismatch, "finite element is not rational");
  }
  return std::get<Rational>(value_);
}

bool IsPrime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool IsIrreducible(std::int64_t p, std::span<const std::int64_t> monic) {
  Poly f;
  for (std::int64_t c : monic) f.push_back(Mod(c, p));
  Trim(f);
  if (f.size() < 2) return false;
  const int n = static_cast<int>(f.size()) - 1;
  if (n == 1) return true;
  for (int d = 1; d <= n / 2; ++d) {
    // All monic polynomials of degree d: p^d choices of lower coefficients.
    std::uint64_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::uint64_t>(p);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1);
      std::uint64_t rest = idx;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<std::int64_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (PolyRem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::optional<std::vector<std::int64_t>> Field::DefaultModulus(std::int64_t p,
                                                               int n) {
  struct Entry {
    std::int64_t p;
    int n;
    std::vector<std::int64_t> modulus;
  };
  static const std::vector<Entry> kTable = {
      {2, 2, {1, 1, 1}},          // t^2+t+1
      {2, 3, {1, 1, 0, 1}},       // t^3+t+1
      {3, 2, {1, 0, 1}},          // t^2+1
      {2, 4, {1, 1, 0, 0, 1}},    // t^4+t+1
      {5, 2, {2, 0, 1}},          // t^2+2
      {3, 3, {1, 2, 0, 1}},       // t^3+2t+1
      {2, 5, {1, 0, 1, 0, 0, 1}}, // t^5+t^2+1
      {7, 2, {1, 0, 1}},          // t^2+1
  };
  for (const Entry& e : kTable) {
    if (e.p == p && e.n == n) return e.modulus;
  }
  return std::nullopt;
}

Field Field::Make(FieldKind kind, std::int64_t p, int n,
                  std::span<const std::int64_t> modulus) {
  if (kind == FieldKind::kRationals) {
    auto impl = std::make_shared<Impl>();
    impl->kind = kind;
    return Field(std::move(impl));
  }
  if (!IsPrime(p)) {
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  }
  if (kind == FieldKind::kPrime) n = 1;
  if (n < 1) {
    throw Error(ErrorCode::kUnsupportedSize, "degree must be positive");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < n; ++i) {
    q *= static_cast<std::uint64_t>(p);
    if (q > kMaxFieldOrder) {
      throw Error(ErrorCode::kUnsupportedSize,
                  "finite fields are limited to order 2^16");
    }
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = kind;
  impl->p = p;
  impl->n = n;
  impl->q = q;
  impl->powers.resize(n + 1);
  impl->powers[0] = 1;
  for (int i = 1; i <= n; ++i) {
    impl->powers[i] = impl->powers[i - 1] * static_cast<Code>(p);
  }
  if (kind == FieldKind::kExtension) {
    std::vector<std::int64_t> m(modulus.begin(), modulus.end());
    if (m.empty()) {
      auto def = DefaultModulus(p, n);
      if (!def) {
        throw Error(ErrorCode::kMissingModulus,
                    "no built-in modulus for order " + std::to_string(q));
      }
      m = *def;
    }
    if (m.size() != static_cast<std::size_t>(n) + 1 || Mod(m.back(), p) != 1) {
      throw Error(ErrorCode::kShapeMismatch,
                  "modulus must be monic of degree " + std::to_string(n));
    }
    if (!IsIrreducible(p, m)) {
      throw Error(ErrorCode::kReducibleModulus,
                  FormatPoly([&] {
                    std::vector<Code> c;
                    for (std::int64_t x : m) c.push_back(Mod(x, p));
                    return c;
                  }()) + " is reducible over F" + std::to_string(p));
    }
    for (std::int64_t c : m) impl->modulus.push_back(static_cast<Code>(Mod(c, p)));
  }
  FieldTableBuilder::Build(*impl);
  return Field(std::move(impl));
}

Field Field::Prime(std::int64_t p) { return Make(FieldKind::kPrime, p); }

Field Field::Extension(std::int64_t p, int n,
                       std::span<const std::int64_t> modulus) {
  return Make(FieldKind::kExtension, p, n, modulus);
}

Field Field::Rationals() {
  static const Field kQ = Make(FieldKind::kRationals);
  return kQ;
}

FieldKind Field::kind() const { return impl_->kind; }
std::int64_t Field::characteristic() const { return impl_->p; }
int Field::degree() const { return impl_->n; }
std::uint64_t Field::order() const { return impl_->q; }
const std::vector<Code>& Field::modulus() const { return impl_->modulus; }

std::string Field::name() const {
  switch (impl_->kind) {
    case FieldKind::kRationals:
      return "Q";
    case FieldKind::kPrime:
      return "F" + std::to_string(impl_->q);
    case FieldKind::kExtension:
      return "F" + std::to_string(impl_->q) + ":" + FormatPoly(impl_->modulus);
  }
  return "?";
}

const Field::Impl& Field::finite() const {
  if (impl_->kind == FieldKind::kRationals) ThrowInfinite();
  return *impl_;
}

Code Field::add(Code x, Code y) const {
  const Impl& f = finite();
  if (f.kind == FieldKind::kPrime) {
    const Code s = x + y;
    return s >= f.p ? s - static_cast<Code>(f.p) : s;
  }
  if (!f.add_table.empty()) return f.add_table[x * f.q + y];
  Code sum = 0;
  for (int i = f.n; i-- > 0;) {
    const Code dx = x / f.powers[i] % f.p;
    const Code dy = y / f.powers[i] % f.p;
    sum = sum * static_cast<Code>(f.p) + (dx + dy) % f.p;
  }
  return sum;
}

Code Field::neg(Code x) const {
  const Impl& f = finite();
  if (f.kind == FieldKind::kPrime) return x == 0 ? 0 : static_cast<Code>(f.p) - x;
  Code out = 0;
  for (int i = f.n; i-- > 0;) {
    const Code d = x / f.powers[i] % f.p;
    out = out * static_cast<Code>(f.p) + (d == 0 ? 0 : static_cast<Code>(f.p) - d);
  }
  return out;
}

Code Field::sub(Code x, Code y) const { return add(x, neg(y)); }

Code Field::mul(Code x, Code y) const {
  const Impl& f = finite();
  if (f.kind == FieldKind::kPrime) {
    return static_cast<Code>(static_cast<std::uint64_t>(x) * y % f.p);
  }
  if (x == 0 || y == 0) return 0;
  const std::uint64_t e =
      (static_cast<std::uint64_t>(f.log_table[x]) + f.log_table[y]) % (f.q - 1);
  return f.exp_table[e];
}

Code Field::inv(Code x) const {
  const Impl& f = finite();
  if (x == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const std::uint64_t e = (f.q - 1 - f.log_table[x]) % (f.q - 1);
  return f.exp_table[e];
}

Code Field::pow(Code x, std::uint64_t e) const {
  Code r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, x);
    x = mul(x, x);
    e >>= 1;
  }
  return r;
}

Code Field::from_int(std::int64_t value) const {
  return static_cast<Code>(Mod(value, finite().p));
}

Code Field::from_coeffs(std::span<const std::int64_t> coeffs) const {
  const Impl& f = finite();
  if (coeffs.size() > static_cast<std::size_t>(f.n)) {
    throw Error(ErrorCode::kShapeMismatch,
                "element has more than " + std::to_string(f.n) +
                    " coefficients");
  }
  Code out = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    out = out * static_cast<Code>(f.p) + static_cast<Code>(Mod(coeffs[i], f.p));
  }
  return out;
}

std::vector<Code> Field::coeffs(Code x) const {
  const Impl& f = finite();
  std::vector<Code> out(f.n);
  for (int i = 0; i < f.n; ++i) {
    out[i] = x % f.p;
    x /= static_cast<Code>(f.p);
  }
  return out;
}

Code Field::coeff(Code x, int i) const {
  const Impl& f = finite();
  return x / f.powers[i] % f.p;
}

Code Field::primitive_element() const {
  const Impl& f = finite();
  return f.q == 2 ? 1 : f.exp_table[1];
}

FieldElement Field::zero() const {
  return is_finite() ? FieldElement(Code{0}) : FieldElement(Rational(0));
}

FieldElement Field::one() const {
  return is_finite() ? FieldElement(Code{1}) : FieldElement(Rational(1));
}

FieldElement Field::element(Code code) const {
  if (code >= finite().q) {
    throw Error(ErrorCode::kFieldMismatch,
                "code " + std::to_string(code) + " outside " + name());
  }
  return FieldElement(code);
}

FieldElement Field::integer(std::int64_t value) const {
  if (!is_finite()) return FieldElement(Rational(value));
  return FieldElement(from_int(value));
}

FieldElement Field::fraction(const BigInt& num, const BigInt& den) const {
  if (den == 0) throw Error(ErrorCode::kDivisionByZero, "zero denominator");
  if (!is_finite()) {
    // Boost rejects negative denominators; move the sign to the numerator.
    return den < 0 ? FieldElement(Rational(-num, -den)) : FieldElement(Rational(num, den));
  }
  const std::int64_t p = impl_->p;
  const auto reduce = [p](const BigInt& v) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<Code>(r);
  };
  return FieldElement(div(reduce(num), reduce(den)));
}

namespace {

void CheckMember(const Field& f, const FieldElement& x) {
  if (!f.contains(x)) {
    throw Error(ErrorCode::kFieldMismatch, "element does not belong to " + f.name());
  }
}

}  // namespace

bool Field::contains(const FieldElement& x) const {
  if (!is_finite()) return x.is_rational();
  return !x.is_rational() && x.code() < impl_->q;
}

FieldElement Field::add(const FieldElement& x, const FieldElement& y) const {
  CheckMember(*this, x);
  CheckMember(*this, y);
  if (!is_finite()) return FieldElement(Rational(x.rational() + y.rational()));
  return FieldElement(add(x.code(), y.code()));
}

FieldElement Field::sub(const FieldElement& x, const FieldElement& y) const {
  CheckMember(*this, x);
  CheckMember(*this, y);
  if (!is_finite()) return FieldElement(Rational(x.rational() - y.rational()));
  return FieldElement(sub(x.code(), y.code()));
}

FieldElement Field::neg(const FieldElement& x) const {
  CheckMember(*this, x);
  if (!is_finite()) return FieldElement(Rational(-x.rational()));
  return FieldElement(neg(x.code()));
}

FieldElement Field::mul(const FieldElement& x, const FieldElement& y) const {
  CheckMember(*this, x);
  CheckMember(*this, y);
  if (!is_finite()) return FieldElement(Rational(x.rational() * y.rational()));
  return FieldElement(mul(x.code(), y.code()));
}

FieldElement Field::inv(const FieldElement& x) const {
  CheckMember(*this, x);
  if (!is_finite()) {
    if (x.rational() == 0) {
      throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
    }
    return FieldElement(Rational(1 / x.rational()));
  }
  return FieldElement(inv(x.code()));
}

FieldElement Field::div(const FieldElement& x, const FieldElement& y) const {
  return mul(x, inv(y));
}

bool Field::is_zero(const FieldElement& x) const {
  return x.is_rational() ? x.rational() == 0 : x.code() == 0;
}

std::string Field::format(Code x) const {
  const Impl& f = finite();
  if (f.kind == FieldKind::kPrime) return std::to_string(x);
  std::string out = "[";
  const std::vector<Code> c = coeffs(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(c[i]);
  }
  return out + "]";
}

std::string Field::format(const FieldElement& x) const {
  CheckMember(*this, x);
  if (is_finite()) return format(x.code());
  std::ostringstream os;
  os << x.rational();
  return os.str();
}

bool operator==(const Field& x, const Field& y) {
  if (x.impl_ == y.impl_) return true;
  return x.impl_->kind == y.impl_->kind && x.impl_->p == y.impl_->p &&
         x.impl_->n == y.impl_->n && x.impl_->modulus == y.impl_->modulus;
}

namespace {

[[noreturn]] void SpecError(std::string_view spec, const std::string& why) {
  throw Error(ErrorCode::kParseError,
              "bad field spec '" + std::string(spec) + "': " + why);
}

// Parses "t^2+2t+1", "t^2 + 2*t + 1", "t^3-t+1" into c_0..c_n (unreduced).
std::vector<std::int64_t> ParsePoly(std::string_view spec, std::string_view text) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  }
  if (s.empty()) SpecError(spec, "empty modulus");
  std::vector<std::int64_t> c;
  std::size_t i = 0;
  while (i < s.size()) {
    std::int64_t sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (i != 0) {
      SpecError(spec, "expected '+' or '-'");
    }
    std::int64_t coef = 1;
    bool has_coef = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      const char* begin = s.data() + i;
      auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), coef);
      if (ec != std::errc()) SpecError(spec, "bad coefficient");
      i += static_cast<std::size_t>(ptr - begin);
      has_coef = true;
      if (i < s.size() && s[i] == '*') ++i;
    }
    std::size_t degree = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      degree = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        const char* begin = s.data() + i;
        auto [ptr, ec] = std::from_chars(begin, s.data() + s.size(), degree);
        if (ec != std::errc()) SpecError(spec, "bad exponent");
        i += static_cast<std::size_t>(ptr - begin);
      }
    } else if (!has_coef) {
      SpecError(spec, "expected a term");
    }
    if (degree > 64) SpecError(spec, "degree too large");
    if (c.size() <= degree) c.resize(degree + 1, 0);
    c[degree] += sign * coef;
  }
  return c;
}

}  // namespace

Field ParseFieldSpec(std::string_view spec) {
  if (spec == "Q") return Field::Rationals();
  if (spec.size() < 2 || spec[0] != 'F') SpecError(spec, "expected F<q> or Q");
  const std::size_t colon = spec.find(':');
  const std::string_view order_text = spec.substr(1, colon - 1);
  std::uint64_t q = 0;
  auto [ptr, ec] = std::from_chars(order_text.data(),
                                   order_text.data() + order_text.size(), q);
  if (ec != std::errc() || ptr != order_text.data() + order_text.size()) {
    SpecError(spec, "bad order");
  }
  if (q < 2) SpecError(spec, "order must be at least 2");
  if (q > kMaxFieldOrder) {
    throw Error(ErrorCode::kUnsupportedSize,
                "finite fields are limited to order 2^16");
  }
  std::int64_t p = 2;
  while (q % static_cast<std::uint64_t>(p) != 0) ++p;
  int n = 0;
  std::uint64_t rest = q;
  while (rest % static_cast<std::uint64_t>(p) == 0) {
    rest /= static_cast<std::uint64_t>(p);
    ++n;
  }
  if (rest != 1) {
    throw Error(ErrorCode::kNotPrime,
                std::to_string(q) + " is not a prime power");
  }
  if (colon == std::string_view::npos) {
    return n == 1 ? Field::Prime(p) : Field::Extension(p, n);
  }
  std::vector<std::int64_t> modulus = ParsePoly(spec, spec.substr(colon + 1));
  return Field::Extension(p, n, modulus);
}

}  // namespace heisenlab
