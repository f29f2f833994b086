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

#include "wdist/io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "wdist/error.hpp"

namespace wdist {

namespace {

[[noreturn]] void Fail(const std::string& what) {
  throw Error(ErrorCode::kParseError, what);
}

std::uint64_t ParseUnsigned(std::string_view text, const char* what) {
  if (text.empty() || text.size() > 18)
    Fail(std::string("bad ") + what + " '" + std::string(text) + "'");
  std::uint64_t out = 0;
  for (char c : text) {
    if (c < '0' || c > '9')
      Fail(std::string("bad ") + what + " '" + std::string(text) + "'");
    out = out * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return out;
}

std::vector<std::string> Tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

}  // namespace

Field ParseFieldDesignator(std::string_view line) {
  const auto tokens = Tokens(line);
  if (tokens.empty() || tokens.size() > 2 || tokens[0].rfind("q=", 0) != 0)
    Fail("expected 'q=p^m [poly=c0,...,cm]', got '" + std::string(line) +
                "'");
  const std::string order = tokens[0].substr(2);
  std::optional<std::vector<std::uint32_t>> poly;
  if (tokens.size() == 2) {
    if (tokens[1].rfind("poly=", 0) != 0)
      Fail("expected 'poly=c0,...,cm', got '" + tokens[1] + "'");
    std::vector<std::uint32_t> coeffs;
    std::string_view rest = std::string_view(tokens[1]).substr(5);
    while (true) {
      const auto comma = rest.find(',');
      coeffs.push_back(static_cast<std::uint32_t>(
          ParseUnsigned(rest.substr(0, comma), "coefficient")));
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
    poly = std::move(coeffs);
  }
  const auto caret = order.find('^');
  if (caret == std::string::npos) {
    const auto q = ParseUnsigned(order, "field order");
    if (q > Field::kMaxOrder)
      throw Error(ErrorCode::kUnsupportedOrder, "field order exceeds 2^16");
    if (!poly) return Field::OfOrder(static_cast<std::uint32_t>(q));
    // Bare order with an explicit modulus: recover p from the modulus degree.
    const std::size_t m = poly->size() - 1;
    for (std::uint32_t p = 2; p <= q; ++p) {
      if (!IsPrime(p)) continue;
      std::uint64_t pm = 1;
      for (std::size_t i = 0; i < m; ++i) pm *= p;
      if (pm == q) return Field::Make(p, static_cast<std::uint32_t>(m), poly);
      if (pm > q) break;
    }
    Fail("q=" + order + " does not match the modulus degree");
  }
  const auto p = ParseUnsigned(std::string_view(order).substr(0, caret),
                               "characteristic");
  const auto m = ParseUnsigned(std::string_view(order).substr(caret + 1),
                               "extension degree");
  if (p > Field::kMaxOrder || m > 64)
    throw Error(ErrorCode::kUnsupportedOrder, "field order exceeds 2^16");
  return Field::Make(static_cast<std::uint32_t>(p),
                     static_cast<std::uint32_t>(m), poly);
}

LinearCode ParseCode(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string>> lines;
  {
    std::istringstream in{std::string(text)};
    std::size_t number = 0;
    for (std::string line; std::getline(in, line);) {
      ++number;
      const auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') continue;
      lines.emplace_back(number, line);
    }
  }
  std::size_t current = lines.empty() ? 1 : lines.back().first + 1;
  try {
    if (lines.size() < 2) Fail("missing field or size line");
    current = lines[0].first;
    const Field field = ParseFieldDesignator(lines[0].second);
    current = lines[1].first;
    const auto dims = Tokens(lines[1].second);
    if (dims.size() != 2) Fail("expected 'n k'");
    const auto n = ParseUnsigned(dims[0], "length");
    const auto k = ParseUnsigned(dims[1], "dimension");
    if (n == 0) Fail("length must be positive");
    if (k > n) Fail("dimension exceeds length");
    if (lines.size() != 2 + k) {
      current = lines.back().first;
      Fail("expected " + std::to_string(k) + " generator rows, found " +
           std::to_string(lines.size() - 2));
    }
    std::vector<std::vector<std::uint32_t>> rows;
    for (std::size_t r = 0; r < k; ++r) {
      current = lines[2 + r].first;
      const auto toks = Tokens(lines[2 + r].second);
      if (toks.size() != n)
        Fail("expected " + std::to_string(n) + " entries, found " +
             std::to_string(toks.size()));
      std::vector<std::uint32_t> row;
      for (const auto& t : toks) {
        const auto v = ParseUnsigned(t, "entry");
        if (v >= field.q())
          Fail("entry " + t + " outside [0, " + std::to_string(field.q()) +
               ")");
        row.push_back(static_cast<std::uint32_t>(v));
      }
      rows.push_back(std::move(row));
    }
    return LinearCode::FromGenerator(
        CodeMatrix::FromRows(field, rows, static_cast<std::size_t>(n)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kParseError) throw;
    throw Error(ErrorCode::kParseError,
                "line " + std::to_string(current) + ": " + e.what());
  }
}

LinearCode ReadCodeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseCode(buffer.str());
}

std::string FormatCode(const LinearCode& code) {
  std::ostringstream out;
  out << code.field().Designator() << "\n" << code.n() << " " << code.k()
      << "\n";
  const CodeMatrix& g = code.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t c = 0; c < g.cols(); ++c) out << (c ? " " : "") << g.at(r, c);
    out << "\n";
  }
  return out.str();
}

nlohmann::json DistributionToJson(const WeightDistribution& a) {
  nlohmann::json j;
  j["n"] = a.n();
  j["k"] = a.k();
  j["q"] = a.q();
  auto& counts = j["A"] = nlohmann::json::array();
  for (const auto& c : a.counts()) counts.push_back(ToDecimal(c));
  const auto problems = a.Violations();
  if (!problems.empty()) j["violations"] = problems;
  return j;
}

namespace {

BigInt JsonInteger(const nlohmann::json& v) {
  if (v.is_string()) return ParseDecimal(v.get<std::string>());
  if (v.is_number_unsigned()) return BigInt(std::to_string(v.get<std::uint64_t>()));
  if (v.is_number_integer()) return BigInt(std::to_string(v.get<std::int64_t>()));
  throw Error(ErrorCode::kParseError,
              "expected an integer or decimal string, got " + v.dump());
}

std::size_t JsonSize(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw Error(ErrorCode::kParseError,
                std::string("missing or invalid '") + key + "'");
  return j[key].get<std::size_t>();
}

}  // namespace

WeightDistribution DistributionFromJson(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("A") || !j["A"].is_array())
    throw Error(ErrorCode::kParseError, "distribution JSON needs an 'A' array");
  const std::size_t n = JsonSize(j, "n");
  const std::size_t k = JsonSize(j, "k");
  const std::size_t q = JsonSize(j, "q");
  std::vector<BigInt> counts;
  for (const auto& v : j["A"]) counts.push_back(JsonInteger(v));
  if (counts.size() != n + 1)
    throw Error(ErrorCode::kParseError, "'A' must have n+1 entries");
  if (k > n || q < 2 || q > Field::kMaxOrder)
    throw Error(ErrorCode::kParseError, "inconsistent n, k, q");
  return WeightDistribution(n, static_cast<std::uint32_t>(q), k,
                            std::move(counts));
}

nlohmann::json CensusToJson(const RankCensus& census) {
  nlohmann::json j;
  j["nu"] = census.nu;
  auto& counts = j["counts"] = nlohmann::json::object();
  for (const auto& [rank, count] : census.counts)
    counts[std::to_string(rank)] = ToDecimal(count);
  j["binom_total"] = ToDecimal(census.BinomTotal());
  return j;
}

nlohmann::json ParametersToJson(const CodeParameters& p) {
  return {{"n", p.n},           {"k", p.k},         {"q", p.q},
          {"d", p.d},           {"d_perp", p.d_perp}, {"sigma", p.sigma()}};
}

Knowns KnownsFromJson(const nlohmann::json& j) {
  Knowns out;
  if (j.is_object() && j.contains("A")) {
    if (!j["A"].is_array())
      throw Error(ErrorCode::kParseError, "'A' must be an array");
    std::size_t i = 0;
    for (const auto& v : j["A"]) out[i++] = JsonInteger(v);
    return out;
  }
  if (!j.is_object())
    throw Error(ErrorCode::kParseError, "knowns must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    std::size_t index = 0;
    for (char c : key) {
      if (c < '0' || c > '9' || key.size() > 9)
        throw Error(ErrorCode::kParseError, "bad weight index '" + key + "'");
      index = index * 10 + static_cast<std::size_t>(c - '0');
    }
    if (key.empty())
      throw Error(ErrorCode::kParseError, "empty weight index");
    out[index] = JsonInteger(value);
  }
  return out;
}

nlohmann::json KnownsToJson(const Knowns& knowns) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [i, v] : knowns) j[std::to_string(i)] = ToDecimal(v);
  return j;
}

nlohmann::json RationalVectorToJson(const std::vector<Rational>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& x : v) out.push_back(ToDecimal(x));
  return out;
}

}  // namespace wdist
