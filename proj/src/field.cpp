// Copyright 2026 The wdist Authors
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

#include "wdist/field.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

#include "wdist/error.hpp"

namespace wdist {

namespace internal {

struct FieldTables {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> modulus;
  // exp has 2(q-1) entries so that exp[log a + log b] needs no reduction.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;
  std::vector<std::uint32_t> neg;
  // q*q addition table, only for odd characteristic with q <= 256.
  std::vector<std::uint16_t> add;

  std::uint32_t AddSlow(std::uint32_t a, std::uint32_t b) const {
    if (m == 1) return (a + b) % p;
    std::uint32_t out = 0;
    std::uint32_t scale = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
};

}  // namespace internal

namespace {

using Poly = std::vector<std::uint32_t>;
using internal::FieldTables;

struct BuiltinModulusRow {
  std::uint32_t p;
  std::uint32_t m;
  std::uint32_t coefficients[17];
};

constexpr BuiltinModulusRow kBuiltinTable[] = {
#include "poly_table.inc"
};

void Trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t InvModP(std::uint32_t a, std::uint32_t p) {
  // a^(p-2) mod p
  std::uint64_t result = 1, base = a % p;
  std::uint32_t e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// a mod f over GF(p); f is monic and nonzero.
Poly PolyMod(Poly a, const Poly& f, std::uint32_t p) {
  Trim(a);
  const std::size_t df = f.size() - 1;
  while (a.size() > df && !a.empty()) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      const std::uint64_t sub = lead * f[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    Trim(a);
  }
  return a;
}

Poly PolyMulMod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      out[i + j] = static_cast<std::uint32_t>(
          (out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return PolyMod(std::move(out), f, p);
}

Poly PolyPowMod(Poly base, std::uint64_t e, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = PolyMod(std::move(base), f, p);
  while (e) {
    if (e & 1) result = PolyMulMod(result, base, f, p);
    base = PolyMulMod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

Poly PolyGcd(Poly a, Poly b, std::uint32_t p) {
  Trim(a);
  Trim(b);
  while (!b.empty()) {
    // Make b monic, then a <- a mod b.
    const std::uint64_t inv = InvModP(b.back(), p);
    for (auto& c : b) c = static_cast<std::uint32_t>(c * inv % p);
    Poly r = PolyMod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly Digits(std::uint32_t e, std::uint32_t p, std::uint32_t m) {
  Poly out(m);
  for (std::uint32_t i = 0; i < m; ++i) {
    out[i] = e % p;
    e /= p;
  }
  Trim(out);
  return out;
}

std::uint32_t Encode(const Poly& a, std::uint32_t p) {
  std::uint32_t out = 0;
  for (std::size_t i = a.size(); i-- > 0;) out = out * p + a[i];
  return out;
}

std::vector<std::uint64_t> PrimeFactors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::shared_ptr<const FieldTables> BuildTables(std::uint32_t p, std::uint32_t m,
                                               Poly modulus) {
  auto t = std::make_shared<FieldTables>();
  t->p = p;
  t->m = m;
  t->q = 1;
  for (std::uint32_t i = 0; i < m; ++i) t->q *= p;
  t->modulus = std::move(modulus);
  const std::uint32_t q = t->q;

  auto slow_mul = [&](std::uint32_t a, std::uint32_t b) -> std::uint32_t {
    if (m == 1) return static_cast<std::uint32_t>(std::uint64_t{a} * b % p);
    return Encode(PolyMulMod(Digits(a, p, m), Digits(b, p, m), t->modulus, p),
                  p);
  };
  auto slow_pow = [&](std::uint32_t a, std::uint64_t e) {
    std::uint32_t result = 1;
    while (e) {
      if (e & 1) result = slow_mul(result, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return result;
  };

  std::uint32_t generator = 1;
  if (q > 2) {
    const auto factors = PrimeFactors(q - 1);
    for (std::uint32_t g = 2; g < q; ++g) {
      bool primitive = true;
      for (auto r : factors) {
        if (slow_pow(g, (q - 1) / r) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        generator = g;
        break;
      }
    }
  }

  t->exp.assign(2 * (q - 1), 0);
  t->log.assign(q, 0);
  std::uint32_t x = 1;
  for (std::uint32_t i = 0; i < q - 1; ++i) {
    t->exp[i] = t->exp[i + q - 1] = x;
    t->log[x] = i;
    x = slow_mul(x, generator);
  }

  t->neg.resize(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    std::uint32_t out = 0, scale = 1, v = a;
    for (std::uint32_t i = 0; i < m; ++i) {
      out += ((p - v % p) % p) * scale;
      v /= p;
      scale *= p;
    }
    t->neg[a] = out;
  }

  if (p != 2 && m > 1 && q <= 256) {
    t->add.resize(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        t->add[std::size_t{a} * q + b] =
            static_cast<std::uint16_t>(t->AddSlow(a, b));
  }
  return t;
}

std::mutex& CacheMutex() {
  static std::mutex mu;
  return mu;
}

std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>,
         std::shared_ptr<const FieldTables>>&
Cache() {
  static std::map<std::tuple<std::uint32_t, std::uint32_t, Poly>,
                  std::shared_ptr<const FieldTables>>
      cache;
  return cache;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f)
    if (n % f == 0) return false;
  return true;
}

bool IsIrreducible(const std::vector<std::uint32_t>& coefficients,
                   std::uint32_t p) {
  Poly f = coefficients;
  Trim(f);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Ben-Or: f has no factor of degree i iff gcd(f, x^(p^i) - x) = 1.
  Poly h{0, 1};
  for (std::size_t i = 1; i <= m / 2; ++i) {
    h = PolyPowMod(h, p, f, p);
    Poly diff = h;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = (diff[1] + p - 1) % p;
    Trim(diff);
    if (diff.empty()) return false;
    const Poly g = PolyGcd(f, diff, p);
    if (g.size() > 1) return false;
  }
  return true;
}

std::optional<std::vector<std::uint32_t>> BuiltinModulus(std::uint32_t p,
                                                         std::uint32_t m) {
  for (const auto& row : kBuiltinTable) {
    if (row.p == p && row.m == m)
      return std::vector<std::uint32_t>(row.coefficients,
                                        row.coefficients + m + 1);
  }
  return std::nullopt;
}

Field Field::Make(std::uint32_t p, std::uint32_t m,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "extension degree must be >= 1");
  if (!IsPrime(p))
    throw Error(ErrorCode::kNotPrime, std::to_string(p) + " is not prime");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < m; ++i) {
    q *= p;
    if (q > kMaxOrder)
      throw Error(ErrorCode::kUnsupportedOrder,
                  "field order " + std::to_string(p) + "^" +
                      std::to_string(m) + " exceeds 2^16");
  }
  Poly poly;
  if (m == 1) {
    if (modulus && !modulus->empty())
      throw Error(ErrorCode::kInvalidArgument,
                  "prime fields take no modulus polynomial");
  } else if (!modulus) {
    auto builtin = BuiltinModulus(p, m);
    if (!builtin)
      throw Error(ErrorCode::kUnsupportedOrder,
                  "no built-in modulus for " + std::to_string(p) + "^" +
                      std::to_string(m));
    poly = std::move(*builtin);
  } else {
    poly = std::move(*modulus);
    if (poly.size() != m + 1 || poly.back() != 1)
      throw Error(ErrorCode::kInvalidArgument,
                  "modulus must be monic of degree " + std::to_string(m));
    for (auto c : poly)
      if (c >= p)
        throw Error(ErrorCode::kInvalidArgument,
                    "modulus coefficient out of range");
    if (!IsIrreducible(poly, p))
      throw Error(ErrorCode::kReduciblePolynomial,
                  "modulus is reducible over GF(" + std::to_string(p) + ")");
  }

  std::lock_guard<std::mutex> lock(CacheMutex());
  auto key = std::make_tuple(p, m, poly);
  auto& cache = Cache();
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, BuildTables(p, m, std::move(poly))).first;
  return Field(it->second);
}

Field Field::OfOrder(std::uint32_t q) {
  if (q < 2) throw Error(ErrorCode::kNotPrime, "field order must be >= 2");
  std::uint32_t p = 2;
  while (q % p) ++p;
  std::uint32_t m = 0;
  std::uint32_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++m;
  }
  if (rest != 1)
    throw Error(ErrorCode::kNotPrime,
                std::to_string(q) + " is not a prime power");
  return Make(p, m);
}

std::uint32_t Field::p() const { return tables_->p; }
std::uint32_t Field::m() const { return tables_->m; }
std::uint32_t Field::q() const { return tables_->q; }
const std::vector<std::uint32_t>& Field::modulus() const {
  return tables_->modulus;
}

std::uint32_t Field::Add(std::uint32_t a, std::uint32_t b) const {
  const auto& t = *tables_;
  if (t.p == 2) return a ^ b;
  if (t.m == 1) {
    const std::uint32_t s = a + b;
    return s >= t.p ? s - t.p : s;
  }
  if (!t.add.empty()) return t.add[std::size_t{a} * t.q + b];
  return t.AddSlow(a, b);
}

std::uint32_t Field::Neg(std::uint32_t a) const { return tables_->neg[a]; }

std::uint32_t Field::Sub(std::uint32_t a, std::uint32_t b) const {
  return Add(a, tables_->neg[b]);
}

std::uint32_t Field::Mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const auto& t = *tables_;
  return t.exp[t.log[a] + t.log[b]];
}

std::uint32_t Field::Inv(std::uint32_t a) const {
  if (a == 0) throw Error(ErrorCode::kDivisionByZero, "inverse of zero");
  const auto& t = *tables_;
  return t.exp[(t.q - 1 - t.log[a]) % (t.q - 1)];
}

std::uint32_t Field::Div(std::uint32_t a, std::uint32_t b) const {
  if (b == 0) throw Error(ErrorCode::kDivisionByZero, "division by zero");
  return Mul(a, Inv(b));
}

std::uint32_t Field::Pow(std::uint32_t a, long long exponent) const {
  if (a == 0) {
    if (exponent < 0)
      throw Error(ErrorCode::kDivisionByZero, "negative power of zero");
    return exponent == 0 ? 1 : 0;
  }
  const auto& t = *tables_;
  const long long order = t.q - 1;
  long long e = exponent % order;
  if (e < 0) e += order;
  const long long idx = (static_cast<long long>(t.log[a]) * e) % order;
  return t.exp[static_cast<std::size_t>(idx)];
}

FieldElement Field::Element(std::uint32_t value) const {
  return FieldElement(*this, value);
}
FieldElement Field::Zero() const { return FieldElement(*this, 0); }
FieldElement Field::One() const { return FieldElement(*this, 1); }

std::string Field::Designator() const {
  std::ostringstream out;
  out << "q=" << p() << "^" << m();
  if (m() > 1) {
    out << " poly=";
    for (std::size_t i = 0; i < modulus().size(); ++i)
      out << (i ? "," : "") << modulus()[i];
  }
  return out.str();
}

bool operator==(const Field& a, const Field& b) {
  if (a.tables_ == b.tables_) return true;
  return a.p() == b.p() && a.m() == b.m() && a.modulus() == b.modulus();
}

FieldElement::FieldElement(Field field, std::uint32_t value)
    : field_(std::move(field)), value_(value) {
  if (value_ >= field_.q())
    throw Error(ErrorCode::kInvalidArgument,
                "element " + std::to_string(value) + " outside GF(" +
                    std::to_string(field_.q()) + ")");
}

namespace {
const Field& Common(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field()))
    throw Error(ErrorCode::kFieldMismatch, "operands belong to different fields");
  return a.field();
}
}  // namespace

FieldElement FieldElement::Inverse() const {
  return FieldElement(field_, field_.Inv(value_));
}

FieldElement FieldElement::Pow(long long exponent) const {
  return FieldElement(field_, field_.Pow(value_, exponent));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  const Field& f = Common(a, b);
  return FieldElement(f, f.Add(a.value_, b.value_));
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  const Field& f = Common(a, b);
  return FieldElement(f, f.Sub(a.value_, b.value_));
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  const Field& f = Common(a, b);
  return FieldElement(f, f.Mul(a.value_, b.value_));
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  const Field& f = Common(a, b);
  return FieldElement(f, f.Div(a.value_, b.value_));
}
FieldElement operator-(const FieldElement& a) {
  return FieldElement(a.field_, a.field_.Neg(a.value_));
}
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

}  // namespace wdist
