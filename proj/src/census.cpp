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

#include "wdist/census.hpp"

#include <atomic>
#include <thread>
#include <vector>

#include "wdist/error.hpp"

namespace wdist {

BigInt RankCensus::Total() const {
  BigInt total = 0;
  for (const auto& [rank, count] : counts) total += count;
  return total;
}

BigInt RankCensus::BinomTotal() const {
  return Binomial(static_cast<long>(source_cols), static_cast<long>(nu));
}

BigInt RankCensus::Count(std::size_t rank) const {
  auto it = counts.find(rank);
  return it == counts.end() ? BigInt(0) : it->second;
}

namespace {

// Depth-first walk over column subsets that keeps an echelon basis of the
// columns chosen so far, so each subset costs one column reduction on top of
// its parent. Once the basis spans all rows every completion has full rank
// and is counted in one step.
class CensusWalker {
 public:
  CensusWalker(const CodeMatrix& m, std::size_t nu)
      : m_(m),
        field_(m.field()),
        rows_(m.rows()),
        cols_(m.cols()),
        nu_(nu),
        basis_(std::min(rows_, nu) + 1, std::vector<std::uint32_t>(rows_)),
        pivots_(std::min(rows_, nu) + 1),
        leaf_counts_(std::min(rows_, nu) + 1, 0) {}

  // Counts all subsets whose smallest column is `first`.
  void WalkFrom(std::size_t first) { Visit(first, 0, 0, true); }

  void Merge(std::map<std::size_t, BigInt>& counts) const {
    for (std::size_t r = 0; r < leaf_counts_.size(); ++r)
      if (leaf_counts_[r]) counts[r] += BigInt(std::to_string(leaf_counts_[r]));
    for (const auto& [r, c] : bulk_counts_) counts[r] += c;
  }

 private:
  // `only` restricts the first level to the single column `first`.
  void Visit(std::size_t first, std::size_t depth, std::size_t rank,
             bool only) {
    if (depth == nu_) {
      ++leaf_counts_[rank];
      return;
    }
    if (rank == rows_ && !only) {
      bulk_counts_[rank] += Binomial(static_cast<long>(cols_ - first),
                                     static_cast<long>(nu_ - depth));
      return;
    }
    const std::size_t last = only ? first : cols_ - (nu_ - depth);
    for (std::size_t c = first; c <= last; ++c) {
      const bool grew = Reduce(c, rank);
      Visit(c + 1, depth + 1, grew ? rank + 1 : rank, false);
    }
  }

  // Reduces column c against basis_[0..rank); on independence stores the
  // normalized remainder as basis_[rank].
  bool Reduce(std::size_t c, std::size_t rank) {
    if (rank == rows_) return false;
    auto& v = basis_[rank];
    for (std::size_t i = 0; i < rows_; ++i) v[i] = m_.at(i, c);
    for (std::size_t b = 0; b < rank; ++b) {
      const std::uint32_t x = v[pivots_[b]];
      if (!x) continue;
      const std::uint32_t factor = field_.Neg(x);
      const auto& bv = basis_[b];
      for (std::size_t i = 0; i < rows_; ++i)
        if (bv[i]) v[i] = field_.Add(v[i], field_.Mul(factor, bv[i]));
    }
    std::size_t p = 0;
    while (p < rows_ && v[p] == 0) ++p;
    if (p == rows_) return false;
    const std::uint32_t inv = field_.Inv(v[p]);
    for (std::size_t i = p; i < rows_; ++i) v[i] = field_.Mul(v[i], inv);
    pivots_[rank] = p;
    return true;
  }

  const CodeMatrix& m_;
  const Field& field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nu_;
  std::vector<std::vector<std::uint32_t>> basis_;
  std::vector<std::size_t> pivots_;
  std::vector<std::uint64_t> leaf_counts_;
  std::map<std::size_t, BigInt> bulk_counts_;
};

}  // namespace

RankCensus Census(const CodeMatrix& m, std::size_t nu,
                  const CensusOptions& options) {
  if (nu < 1 || nu > m.cols())
    throw Error(ErrorCode::kInvalidArgument,
                "census needs 1 <= nu <= " + std::to_string(m.cols()) +
                    ", got " + std::to_string(nu));
  const BigInt subsets =
      Binomial(static_cast<long>(m.cols()), static_cast<long>(nu));
  if (subsets > BigInt(std::to_string(options.budget)))
    throw Error(ErrorCode::kBudgetExceeded,
                "census over " + ToDecimal(subsets) +
                    " column subsets exceeds the budget of " +
                    std::to_string(options.budget));

  RankCensus out;
  out.nu = nu;
  out.source_rows = m.rows();
  out.source_cols = m.cols();

  const std::size_t branches = m.cols() - nu + 1;
  const unsigned workers =
      static_cast<unsigned>(std::min<std::size_t>(std::max(1u, options.workers),
                                                  branches));
  if (workers == 1) {
    CensusWalker walker(m, nu);
    for (std::size_t first = 0; first < branches; ++first)
      walker.WalkFrom(first);
    walker.Merge(out.counts);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<CensusWalker> walkers(workers, CensusWalker(m, nu));
    {
      std::vector<std::jthread> threads;
      for (unsigned w = 0; w < workers; ++w) {
        threads.emplace_back([&, w] {
          for (std::size_t first = next++; first < branches; first = next++)
            walkers[w].WalkFrom(first);
        });
      }
    }
    for (const auto& w : walkers) w.Merge(out.counts);
  }
  for (auto it = out.counts.begin(); it != out.counts.end();) {
    if (it->second == 0) it = out.counts.erase(it);
    else ++it;
  }
  return out;
}

const RankCensus& CensusCache::Get(std::size_t nu) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = cache_.find(nu);
  if (it == cache_.end())
    it = cache_.emplace(nu, Census(matrix_, nu, options_)).first;
  return it->second;
}

IdentityCheck VerifyCountingIdentity(const LinearCode& code,
                                     const WeightDistribution& a,
                                     std::size_t nu, CensusCache* cache,
                                     const CensusOptions& options) {
  const std::size_t n = code.n();
  if (nu < 1 || nu > n)
    throw Error(ErrorCode::kInvalidArgument,
                "nu must lie in [1, " + std::to_string(n) + "]");
  if (a.n() != n)
    throw Error(ErrorCode::kInvalidArgument,
                "distribution length does not match the code");
  const std::uint32_t q = code.field().q();

  IdentityCheck out;
  for (std::size_t s = 0; s <= nu; ++s)
    out.lhs += Binomial(static_cast<long>(n - s), static_cast<long>(nu - s)) *
               a[s];

  RankCensus local;
  const RankCensus* census = nullptr;
  if (cache) {
    census = &cache->Get(nu);
  } else {
    local = Census(code.parity_check(), nu, options);
    census = &local;
  }
  for (const auto& [rank, count] : census->counts)
    out.rhs += count * Power(q, nu - rank);
  out.holds = out.lhs == out.rhs;
  return out;
}

bool CheckFullRankRegime(const LinearCode& code, std::size_t nu,
                         std::size_t d_perp, CensusCache* cache,
                         const CensusOptions& options) {
  const std::size_t n = code.n();
  if (nu > n || nu + d_perp <= n)
    throw Error(ErrorCode::kRegimeViolation,
                "nu = " + std::to_string(nu) + " is outside (n - d_perp, n] = (" +
                    std::to_string(static_cast<long>(n) -
                                   static_cast<long>(d_perp)) +
                    ", " + std::to_string(n) + "]");
  RankCensus local;
  const RankCensus* census = nullptr;
  if (cache) {
    census = &cache->Get(nu);
  } else {
    local = Census(code.parity_check(), nu, options);
    census = &local;
  }
  const std::size_t full = n - code.k();
  return census->counts.size() == 1 && census->counts.count(full) == 1 &&
         census->Count(full) == census->BinomTotal();
}

}  // namespace wdist
