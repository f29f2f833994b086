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

#include "wdist/code.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "wdist/error.hpp"

namespace wdist {

LinearCode LinearCode::FromGenerator(CodeMatrix generator) {
  const std::size_t rank = GfRank(generator);
  if (rank != generator.rows())
    throw Error(ErrorCode::kRankDeficientGenerator,
                "generator has rank " + std::to_string(rank) + " but " +
                    std::to_string(generator.rows()) + " rows");
  CodeMatrix parity = GfKernelBasis(generator);
  return LinearCode(std::move(generator), std::move(parity));
}

LinearCode Dual(const LinearCode& code) {
  return LinearCode(code.parity_check_, code.generator_);
}

WeightDistribution::WeightDistribution(std::size_t n, std::uint32_t q,
                                       std::size_t k,
                                       std::vector<BigInt> counts)
    : q_(q), k_(k), counts_(std::move(counts)) {
  if (counts_.size() != n + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "distribution of length " + std::to_string(n) + " needs " +
                    std::to_string(n + 1) + " counts, got " +
                    std::to_string(counts_.size()));
  if (k > n)
    throw Error(ErrorCode::kInvalidArgument, "dimension exceeds length");
}

std::optional<std::size_t> WeightDistribution::MinWeight() const {
  for (std::size_t i = 1; i < counts_.size(); ++i)
    if (counts_[i] != 0) return i;
  return std::nullopt;
}

BigInt WeightDistribution::Total() const {
  BigInt total = 0;
  for (const auto& a : counts_) total += a;
  return total;
}

std::vector<std::string> WeightDistribution::Violations() const {
  std::vector<std::string> out;
  if (counts_[0] != 1) out.push_back("A_0 = " + ToDecimal(counts_[0]) + " != 1");
  for (std::size_t i = 0; i < counts_.size(); ++i)
    if (counts_[i] < 0)
      out.push_back("A_" + std::to_string(i) + " = " + ToDecimal(counts_[i]) +
                    " is negative");
  const BigInt expected = Power(q_, k_);
  const BigInt total = Total();
  if (total != expected)
    out.push_back("sum of A_i = " + ToDecimal(total) + " != q^k = " +
                  ToDecimal(expected));
  return out;
}

CodeParameters CodeParameters::Make(std::size_t n, std::size_t k,
                                    std::uint32_t q, std::size_t d,
                                    std::size_t d_perp) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "length must be >= 1");
  if (k > n) throw Error(ErrorCode::kInvalidArgument, "dimension exceeds length");
  if (q < 2) throw Error(ErrorCode::kInvalidArgument, "q must be >= 2");
  if (d < 1 || d > n - k + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "d = " + std::to_string(d) + " violates 1 <= d <= n-k+1");
  if (d_perp < 1 || d_perp > k + 1)
    throw Error(ErrorCode::kInvalidArgument,
                "d_perp = " + std::to_string(d_perp) +
                    " violates 1 <= d_perp <= k+1");
  return CodeParameters{n, k, d, d_perp, q};
}

namespace {

// One nonzero coordinate of a step vector.
struct Delta {
  std::uint32_t column;
  std::uint32_t value;
};

struct EnumerationPlan {
  std::size_t n = 0;
  std::size_t k = 0;
  std::uint32_t q = 0;
  // steps[i * q + e]: support of (enc(e+1 mod q) - enc(e)) * row_i.
  std::vector<std::vector<Delta>> steps;
};

// q-ary reflected counting: with counter digits c_i, Gray digits
// g_i = (c_i - c_{i+1}) mod q change one at a time, the changed digit being
// the number of trailing (q-1) digits of the counter. Each step therefore
// adds exactly one precomputed vector.
template <typename AddFn>
void EnumerateChunk(const EnumerationPlan& plan, std::size_t low_digits, std::uint64_t prefix,
                    const AddFn& add, std::vector<std::uint64_t>& counts) {
  const std::size_t n = plan.n;
  const std::uint32_t q = plan.q;
  const auto& gen_steps = plan.steps;
  std::vector<std::uint32_t> word(n, 0);

  // Start from the fixed high digits: sum of digit * row.
  for (std::size_t i = low_digits; i < plan.k; ++i) {
    const std::uint32_t digit = static_cast<std::uint32_t>(prefix % q);
    prefix /= q;
    // Walk 0 -> digit along the step vectors of row i.
    for (std::uint32_t e = 0; e < digit; ++e)
      for (const auto& d : gen_steps[i * q + e])
        word[d.column] = add(word[d.column], d.value);
  }
  std::size_t weight = 0;
  for (auto x : word) weight += x != 0;
  ++counts[weight];

  std::vector<std::uint32_t> counter(low_digits + 1, 0);
  std::vector<std::uint32_t> gray(low_digits, 0);
  while (true) {
    std::size_t t = 0;
    while (t < low_digits && counter[t] == q - 1) {
      counter[t] = 0;
      ++t;
    }
    if (t == low_digits) break;
    ++counter[t];
    const std::uint32_t e = gray[t];
    gray[t] = e + 1 == q ? 0 : e + 1;
    for (const auto& d : gen_steps[t * q + e]) {
      const std::uint32_t old = word[d.column];
      const std::uint32_t now = add(old, d.value);
      word[d.column] = now;
      weight += (now != 0);
      weight -= (old != 0);
    }
    ++counts[weight];
  }
}

template <typename AddFn>
std::vector<std::uint64_t> RunEnumeration(const EnumerationPlan& plan,
                                          unsigned workers, const AddFn& add) {
  const std::uint32_t q = plan.q;
  // Split on the top digits when running in parallel.
  std::size_t high = 0;
  std::uint64_t chunks = 1;
  if (workers > 1) {
    while (high < plan.k && chunks < 8ull * workers) {
      chunks *= q;
      ++high;
    }
  }
  const std::size_t low = plan.k - high;
  std::vector<std::uint64_t> total(plan.n + 1, 0);
  if (workers <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c)
      EnumerateChunk(plan, low, c, add, total);
    return total;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::vector<std::uint64_t>> partial(
      workers, std::vector<std::uint64_t>(plan.n + 1, 0));
  {
    std::vector<std::jthread> threads;
    for (unsigned w = 0; w < workers; ++w) {
      threads.emplace_back([&, w] {
        for (std::uint64_t c = next++; c < chunks; c = next++)
          EnumerateChunk(plan, low, c, add, partial[w]);
      });
    }
  }
  for (const auto& p : partial)
    for (std::size_t i = 0; i <= plan.n; ++i) total[i] += p[i];
  return total;
}

}  // namespace

WeightDistribution BruteWeightDistribution(const LinearCode& code,
                                           const EnumerationOptions& options) {
  const Field& field = code.field();
  const std::size_t n = code.n();
  const std::size_t k = code.k();
  const std::uint32_t q = field.q();

  const BigInt size = Power(q, k);
  if (size > BigInt(std::to_string(options.budget)))
    throw Error(ErrorCode::kBudgetExceeded,
                "enumerating " + ToDecimal(size) +
                    " codewords exceeds the budget of " +
                    std::to_string(options.budget));

  EnumerationPlan plan;
  plan.n = n;
  plan.k = k;
  plan.q = q;
  plan.steps.resize(k * q);
  const CodeMatrix& g = code.generator();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::uint32_t e = 0; e < q; ++e) {
      const std::uint32_t next = e + 1 == q ? 0 : e + 1;
      const std::uint32_t scale = field.Sub(next, e);
      auto& step = plan.steps[i * q + e];
      for (std::size_t j = 0; j < n; ++j) {
        const std::uint32_t v = field.Mul(scale, g.at(i, j));
        if (v) step.push_back({static_cast<std::uint32_t>(j), v});
      }
    }
  }

  const unsigned workers = std::max(1u, options.workers);
  std::vector<std::uint64_t> counts;
  if (field.p() == 2) {
    counts = RunEnumeration(plan, workers,
                            [](std::uint32_t a, std::uint32_t b) { return a ^ b; });
  } else if (q <= 256) {
    std::vector<std::uint16_t> table(std::size_t{q} * q);
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b)
        table[std::size_t{a} * q + b] = static_cast<std::uint16_t>(field.Add(a, b));
    counts = RunEnumeration(plan, workers,
                            [&table, q](std::uint32_t a, std::uint32_t b) {
                              return static_cast<std::uint32_t>(
                                  table[std::size_t{a} * q + b]);
                            });
  } else {
    counts = RunEnumeration(plan, workers,
                            [&field](std::uint32_t a, std::uint32_t b) {
                              return field.Add(a, b);
                            });
  }

  std::vector<BigInt> out(n + 1);
  for (std::size_t i = 0; i <= n; ++i)
    out[i] = BigInt(std::to_string(counts[i]));
  return WeightDistribution(n, q, k, std::move(out));
}

std::size_t MinDistance(const LinearCode& code,
                        const EnumerationOptions& options) {
  if (code.k() == 0)
    throw Error(ErrorCode::kZeroCode, "the zero code has no nonzero codeword");
  return *BruteWeightDistribution(code, options).MinWeight();
}

CodeParameters ParametersFromDistribution(const WeightDistribution& a) {
  if (a.k() == 0)
    throw Error(ErrorCode::kZeroCode, "the zero code has no nonzero codeword");
  const auto d = a.MinWeight();
  if (!d)
    throw Error(ErrorCode::kInvalidArgument,
                "distribution has no nonzero codeword");
  const WeightDistribution b = MacWilliamsTransform(a);
  const std::size_t d_perp = b.MinWeight().value_or(a.n() + 1);
  return CodeParameters::Make(a.n(), a.k(), a.q(), *d, d_perp);
}

CodeParameters Parameters(const LinearCode& code,
                          const EnumerationOptions& options) {
  if (code.k() == 0)
    throw Error(ErrorCode::kZeroCode, "the zero code has no nonzero codeword");
  return ParametersFromDistribution(BruteWeightDistribution(code, options));
}

BigInt Krawtchouk(std::size_t n, std::uint32_t q, std::size_t j,
                  std::size_t i) {
  BigInt out = 0;
  for (std::size_t l = 0; l <= j; ++l) {
    BigInt term = Binomial(static_cast<long>(i), static_cast<long>(l)) *
                  Binomial(static_cast<long>(n - i), static_cast<long>(j - l)) *
                  Power(q - 1, j - l);
    if (l % 2) out -= term;
    else out += term;
  }
  return out;
}

WeightDistribution MacWilliamsTransform(const WeightDistribution& a) {
  const std::size_t n = a.n();
  const std::uint32_t q = a.q();
  const BigInt scale = Power(q, a.k());
  std::vector<BigInt> b(n + 1);
  for (std::size_t j = 0; j <= n; ++j) {
    BigInt sum = 0;
    for (std::size_t i = 0; i <= n; ++i)
      if (a[i] != 0) sum += a[i] * Krawtchouk(n, q, j, i);
    if (!mpz_divisible_p(sum.get_mpz_t(), scale.get_mpz_t()))
      throw Error(ErrorCode::kNonIntegralResult,
                  "B_" + std::to_string(j) + " is not integral");
    mpz_divexact(b[j].get_mpz_t(), sum.get_mpz_t(), scale.get_mpz_t());
    if (b[j] < 0)
      throw Error(ErrorCode::kNonIntegralResult,
                  "B_" + std::to_string(j) + " = " + ToDecimal(b[j]) +
                      " is negative");
  }
  return WeightDistribution(n, q, n - a.k(), std::move(b));
}

LinearCode RandomCode(const Field& field, std::size_t n, std::size_t k,
                      std::uint64_t seed) {
  if (k == 0 || k >= n)
    throw Error(ErrorCode::kInvalidArgument, "random codes need 0 < k < n");
  std::mt19937_64 engine(seed);
  const std::uint32_t q = field.q();
  while (true) {
    CodeMatrix g(field, k, n);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        g.set(r, c, static_cast<std::uint32_t>(engine() % q));
    if (GfRank(g) == k) return LinearCode::FromGenerator(std::move(g));
  }
}

}  // namespace wdist
