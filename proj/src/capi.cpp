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

#include "wdist/wdist.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <utility>

#include "json.hpp"
#include "wdist/census.hpp"
#include "wdist/closed_forms.hpp"
#include "wdist/code.hpp"
#include "wdist/error.hpp"
#include "wdist/io.hpp"
#include "wdist/moments.hpp"

struct wd_config {
  wdist::EnumerationOptions enumeration;
  wdist::CensusOptions census;
};

struct wd_code {
  wdist::LinearCode code;
};

struct wd_distribution {
  wdist::WeightDistribution a;
};

namespace {

using nlohmann::json;
using wdist::ErrorCode;

thread_local std::string last_error;

static_assert(static_cast<int>(ErrorCode::kSingularSelection) + 1 ==
              WD_ERR_SINGULAR_SELECTION);

wd_status StatusOf(ErrorCode code) {
  return static_cast<wd_status>(static_cast<int>(code) + 1);
}

wd_status Fail(wd_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

template <typename F>
wd_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return WD_OK;
  } catch (const wdist::Error& e) {
    return Fail(StatusOf(e.code()), e.what());
  } catch (const json::exception& e) {
    return Fail(WD_ERR_PARSE, e.what());
  } catch (const std::bad_alloc&) {
    return Fail(WD_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return Fail(WD_ERR_INTERNAL, e.what());
  } catch (...) {
    return Fail(WD_ERR_INTERNAL, "unknown failure");
  }
}

void Require(bool ok, const char* what) {
  if (!ok) throw wdist::Error(ErrorCode::kInvalidArgument, what);
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

wdist::EnumerationOptions Enumeration(const wd_config* config) {
  return config ? config->enumeration : wdist::EnumerationOptions{};
}

wdist::CensusOptions CensusLimits(const wd_config* config) {
  return config ? config->census : wdist::CensusOptions{};
}

wdist::CodeParameters ToParams(const wd_params* p) {
  Require(p != nullptr, "params is NULL");
  return wdist::CodeParameters::Make(p->n, p->k, p->q, p->d, p->d_perp);
}

wd_params FromParams(const wdist::CodeParameters& p) {
  return wd_params{p.n, p.k, p.d, p.d_perp, p.q};
}

wdist::Knowns ParseKnowns(const char* text) {
  Require(text != nullptr, "knowns is NULL");
  return wdist::KnownsFromJson(json::parse(text));
}

wd_distribution* Wrap(wdist::WeightDistribution a) {
  return new wd_distribution{std::move(a)};
}

json VerifyReport(const wdist::LinearCode& code,
                  const wdist::WeightDistribution* claimed, unsigned checks,
                  const wd_config* config, bool* passed) {
  const auto actual = wdist::BruteWeightDistribution(code, Enumeration(config));
  const auto params = wdist::ParametersFromDistribution(actual);
  const wdist::WeightDistribution& a = claimed ? *claimed : actual;
  if (claimed && (claimed->n() != code.n() || claimed->q() != code.field().q() ||
                  claimed->k() != code.k()))
    throw wdist::Error(ErrorCode::kInvalidArgument,
                       "claimed distribution does not match the code's n, k, q");
  wdist::CensusCache cache(code.parity_check(), CensusLimits(config));
  const std::size_t n = code.n();
  bool ok = true;
  json report;
  report["params"] = wdist::ParametersToJson(params);
  report["distribution"] = wdist::DistributionToJson(a);
  report["claimed"] = claimed != nullptr;

  if (checks & WD_CHECK_IDENTITY) {
    auto& rows = report["identity"] = json::array();
    for (std::size_t nu = 1; nu <= n; ++nu) {
      const auto c = wdist::VerifyCountingIdentity(code, a, nu, &cache);
      ok &= c.holds;
      rows.push_back({{"nu", nu},
                      {"lhs", wdist::ToDecimal(c.lhs)},
                      {"rhs", wdist::ToDecimal(c.rhs)},
                      {"holds", c.holds}});
    }
  }
  if (checks & WD_CHECK_PLESS) {
    // The dual distribution always comes from the code itself so that a
    // corrupted claim cannot agree with its own transform.
    const auto b = wdist::MacWilliamsTransform(actual);
    auto& rows = report["pless"] = json::array();
    for (std::size_t nu = 0; nu <= n; ++nu) {
      const auto c = wdist::VerifyPlessFull(a, b, nu);
      ok &= c.holds;
      rows.push_back({{"nu", nu},
                      {"lhs", wdist::ToDecimal(c.lhs)},
                      {"rhs", wdist::ToDecimal(c.rhs)},
                      {"holds", c.holds}});
    }
  }
  if (checks & WD_CHECK_REGIME) {
    auto& rows = report["regime"] = json::array();
    const std::size_t first =
        params.d_perp > n ? 1 : n - params.d_perp + 1;
    for (std::size_t nu = first; nu <= n; ++nu) {
      const bool full =
          wdist::CheckFullRankRegime(code, nu, params.d_perp, &cache);
      ok &= full;
      rows.push_back({{"nu", nu}, {"full_rank", full}});
    }
  }
  if (checks & WD_CHECK_CROSSCHECK) {
    wdist::Knowns knowns;
    for (std::size_t i = 0; i + params.d_perp <= n; ++i) knowns[i] = a[i];
    const auto cc = wdist::CrossCheckSystems(params, knowns);
    bool matches = true;
    for (std::size_t i = 0; i <= n; ++i)
      matches &= cc.pascal[i] == wdist::Rational(a[i]);
    ok &= cc.agree && matches;
    report["crosscheck"] = {{"knowns", wdist::KnownsToJson(knowns)},
                            {"pascal", wdist::RationalVectorToJson(cc.pascal)},
                            {"pless", wdist::RationalVectorToJson(cc.pless)},
                            {"agree", cc.agree},
                            {"matches", matches}};
  }
  report["passed"] = ok;
  *passed = ok;
  return report;
}

}  // namespace

extern "C" {

const char* wd_status_name(wd_status status) {
  if (status == WD_OK) return "Ok";
  if (status == WD_ERR_INTERNAL) return "Internal";
  if (status < WD_ERR_INVALID_ARGUMENT || status > WD_ERR_SINGULAR_SELECTION)
    return "Unknown";
  return wdist::ErrorCodeName(static_cast<ErrorCode>(status - 1));
}

const char* wd_last_error(void) { return last_error.c_str(); }

int wd_status_exit_code(wd_status status) {
  switch (status) {
    case WD_OK:
      return 0;
    case WD_ERR_BUDGET_EXCEEDED:
      return 3;
    case WD_ERR_DIVISION_BY_ZERO:
    case WD_ERR_SINGULAR_MATRIX:
    case WD_ERR_NON_INTEGRAL_RESULT:
    case WD_ERR_NEGATIVE_ENTRY:
    case WD_ERR_SINGULAR_REDUCED_SYSTEM:
    case WD_ERR_INCONSISTENT_KNOWNS:
    case WD_ERR_NON_INTEGRAL_SOLUTION:
    case WD_ERR_NEGATIVE_SOLUTION:
    case WD_ERR_SINGULAR_SELECTION:
    case WD_ERR_INTERNAL:
      return 1;
    default:
      return 2;
  }
}

void wd_string_free(char* s) { std::free(s); }

wd_status wd_config_create(wd_config** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = new wd_config{};
  });
}

void wd_config_destroy(wd_config* config) { delete config; }

wd_status wd_config_set_budget(wd_config* config, uint64_t codewords) {
  return Guard([&] {
    Require(config != nullptr, "config is NULL");
    Require(codewords > 0, "budget must be positive");
    config->enumeration.budget = codewords;
  });
}

wd_status wd_config_set_census_budget(wd_config* config, uint64_t subsets) {
  return Guard([&] {
    Require(config != nullptr, "config is NULL");
    Require(subsets > 0, "census budget must be positive");
    config->census.budget = subsets;
  });
}

wd_status wd_config_set_workers(wd_config* config, unsigned workers) {
  return Guard([&] {
    Require(config != nullptr, "config is NULL");
    Require(workers > 0, "workers must be positive");
    config->enumeration.workers = workers;
    config->census.workers = workers;
  });
}

wd_status wd_code_parse(const char* text, wd_code** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "NULL argument");
    *out = new wd_code{wdist::ParseCode(text)};
  });
}

wd_status wd_code_load(const char* path, wd_code** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "NULL argument");
    *out = new wd_code{wdist::ReadCodeFile(path)};
  });
}

wd_status wd_code_random(uint32_t q, size_t n, size_t k, uint64_t seed,
                         wd_code** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = new wd_code{
        wdist::RandomCode(wdist::Field::OfOrder(q), n, k, seed)};
  });
}

wd_status wd_code_dual(const wd_code* code, wd_code** out) {
  return Guard([&] {
    Require(code != nullptr && out != nullptr, "NULL argument");
    *out = new wd_code{wdist::Dual(code->code)};
  });
}

wd_status wd_code_format(const wd_code* code, char** out) {
  return Guard([&] {
    Require(code != nullptr && out != nullptr, "NULL argument");
    *out = CopyString(wdist::FormatCode(code->code));
  });
}

size_t wd_code_length(const wd_code* code) {
  return code ? code->code.n() : 0;
}

size_t wd_code_dimension(const wd_code* code) {
  return code ? code->code.k() : 0;
}

uint32_t wd_code_field_order(const wd_code* code) {
  return code ? code->code.field().q() : 0;
}

wd_status wd_code_parameters(const wd_code* code, const wd_config* config,
                             wd_params* out) {
  return Guard([&] {
    Require(code != nullptr && out != nullptr, "NULL argument");
    *out = FromParams(wdist::Parameters(code->code, Enumeration(config)));
  });
}

void wd_code_destroy(wd_code* code) { delete code; }

wd_status wd_code_enumerate(const wd_code* code, const wd_config* config,
                            wd_distribution** out) {
  return Guard([&] {
    Require(code != nullptr && out != nullptr, "NULL argument");
    *out = Wrap(wdist::BruteWeightDistribution(code->code, Enumeration(config)));
  });
}

wd_status wd_distribution_parse_json(const char* text, wd_distribution** out) {
  return Guard([&] {
    Require(text != nullptr && out != nullptr, "NULL argument");
    *out = Wrap(wdist::DistributionFromJson(json::parse(text)));
  });
}

wd_status wd_distribution_to_json(const wd_distribution* a, char** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "NULL argument");
    *out = CopyString(wdist::DistributionToJson(a->a).dump());
  });
}

size_t wd_distribution_length(const wd_distribution* a) {
  return a ? a->a.n() : 0;
}

size_t wd_distribution_dimension(const wd_distribution* a) {
  return a ? a->a.k() : 0;
}

uint32_t wd_distribution_field_order(const wd_distribution* a) {
  return a ? a->a.q() : 0;
}

wd_status wd_distribution_get(const wd_distribution* a, size_t i, char** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "NULL argument");
    if (i > a->a.n())
      throw wdist::Error(ErrorCode::kIndexOutOfRange,
                         "weight " + std::to_string(i) + " exceeds n");
    *out = CopyString(wdist::ToDecimal(a->a[i]));
  });
}

int wd_distribution_is_valid(const wd_distribution* a) {
  return a && a->a.IsValid() ? 1 : 0;
}

int wd_distribution_equal(const wd_distribution* a, const wd_distribution* b) {
  return a && b && a->a == b->a ? 1 : 0;
}

wd_status wd_distribution_macwilliams(const wd_distribution* a,
                                      wd_distribution** out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "NULL argument");
    *out = Wrap(wdist::MacWilliamsTransform(a->a));
  });
}

wd_status wd_distribution_parameters(const wd_distribution* a,
                                     wd_params* out) {
  return Guard([&] {
    Require(a != nullptr && out != nullptr, "NULL argument");
    *out = FromParams(wdist::ParametersFromDistribution(a->a));
  });
}

void wd_distribution_destroy(wd_distribution* a) { delete a; }

wd_status wd_params_validate(const wd_params* params) {
  return Guard([&] { ToParams(params); });
}

wd_status wd_census_json(const wd_code* code, size_t nu,
                         const wd_config* config, char** out) {
  return Guard([&] {
    Require(code != nullptr && out != nullptr, "NULL argument");
    const auto census =
        wdist::Census(code->code.parity_check(), nu, CensusLimits(config));
    *out = CopyString(wdist::CensusToJson(census).dump());
  });
}

wd_status wd_verify(const wd_code* code, const wd_distribution* claimed,
                    unsigned checks, const wd_config* config, char** report,
                    int* passed) {
  return Guard([&] {
    Require(code != nullptr && report != nullptr && passed != nullptr,
            "NULL argument");
    Require(checks != 0 && (checks & ~unsigned{WD_CHECK_ALL}) == 0,
            "unknown check selection");
    bool ok = false;
    const json r = VerifyReport(code->code, claimed ? &claimed->a : nullptr,
                                checks, config, &ok);
    *report = CopyString(r.dump());
    *passed = ok ? 1 : 0;
  });
}

wd_status wd_solve(const wd_params* params, wd_system system,
                   const char* knowns_json, wd_distribution** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    const auto p = ToParams(params);
    const auto knowns = ParseKnowns(knowns_json);
    Require(system == WD_SYSTEM_PASCAL || system == WD_SYSTEM_PLESS,
            "unknown system");
    const auto s = system == WD_SYSTEM_PASCAL ? wdist::BuildPascalSystem(p)
                                              : wdist::BuildPlessSystem(p);
    *out = Wrap(wdist::SolveWithKnowns(s, knowns));
  });
}

wd_status wd_crosscheck_json(const wd_params* params, const char* knowns_json,
                             char** out, int* agree) {
  return Guard([&] {
    Require(out != nullptr && agree != nullptr, "NULL argument");
    const auto p = ToParams(params);
    const auto knowns = ParseKnowns(knowns_json);
    const auto cc = wdist::CrossCheckSystems(p, knowns);
    const json r = {{"params", wdist::ParametersToJson(p)},
                    {"knowns", wdist::KnownsToJson(knowns)},
                    {"pascal", wdist::RationalVectorToJson(cc.pascal)},
                    {"pless", wdist::RationalVectorToJson(cc.pless)},
                    {"agree", cc.agree}};
    *out = CopyString(r.dump());
    *agree = cc.agree ? 1 : 0;
  });
}

wd_status wd_pless_report_json(const wd_params* params, char** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    const auto p = ToParams(params);
    const auto r = wdist::RankRelationshipReport(p);
    const json j = {{"params", wdist::ParametersToJson(p)},
                    {"pascal_rank", r.pascal_rank},
                    {"pless_rank", r.pless_rank},
                    {"joint_rank", r.joint_rank},
                    {"joint_augmented_rank", r.joint_augmented_rank},
                    {"pascal_in_pless_span", r.pascal_in_pless_span()},
                    {"pless_in_pascal_span", r.pless_in_pascal_span()},
                    {"consistent", r.joint_rank == r.joint_augmented_rank}};
    *out = CopyString(j.dump());
  });
}

wd_status wd_mds(size_t n, size_t k, uint32_t q, wd_distribution** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = Wrap(wdist::MdsDistribution(n, k, q));
  });
}

wd_status wd_nmds(size_t n, size_t k, uint32_t q, const char* a_d,
                  wd_distribution** out) {
  return Guard([&] {
    Require(a_d != nullptr && out != nullptr, "NULL argument");
    *out = Wrap(wdist::NmdsDistribution(n, k, q, wdist::ParseDecimal(a_d)));
  });
}

wd_status wd_amds(size_t n, size_t k, uint32_t q, size_t sigma,
                  const char* const* seeds, size_t seed_count,
                  wd_distribution** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    Require(seeds != nullptr || seed_count == 0, "seeds is NULL");
    wdist::AmdsInput input{n, k, q, sigma, {}};
    for (size_t i = 0; i < seed_count; ++i) {
      Require(seeds[i] != nullptr, "seed is NULL");
      input.seed_weights.push_back(wdist::ParseDecimal(seeds[i]));
    }
    *out = Wrap(wdist::AmdsDistribution(input));
  });
}

wd_status wd_extremal(size_t m, wd_distribution** out) {
  return Guard([&] {
    Require(out != nullptr, "out is NULL");
    *out = Wrap(wdist::ExtremalDistribution(m));
  });
}

wd_status wd_extremal_system_json(size_t m, const size_t* nus,
                                  size_t nu_count, int include_symmetry,
                                  char** out) {
  std::optional<json> singular;
  const wd_status status = Guard([&] {
    Require(nus != nullptr || nu_count == 0, "nus is NULL");
    const std::vector<std::size_t> rows(nus, nus + nu_count);
    const auto system = wdist::ExtremalSystem(m, rows, include_symmetry != 0);
    json j = {{"m", m},
              {"nus", rows},
              {"symmetry", include_symmetry != 0},
              {"columns", system.columns}};
    try {
      j["solution"] =
          wdist::RationalVectorToJson(wdist::SolveExact(system.matrix, system.rhs));
      if (out) *out = CopyString(j.dump());
    } catch (const wdist::SingularError& e) {
      j["rank"] = e.rank();
      j["kernel_witness"] = wdist::RationalVectorToJson(e.kernel_witness());
      singular = std::move(j);
      throw;
    }
  });
  if (status != WD_OK && singular && out) {
    const std::string message = last_error;
    wd_status copy = Guard([&] { *out = CopyString(singular->dump()); });
    if (copy != WD_OK) return copy;
    return Fail(status, message);
  }
  return status;
}

}  // extern "C"
