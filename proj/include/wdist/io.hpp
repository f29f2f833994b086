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

#ifndef WDIST_IO_HPP_
#define WDIST_IO_HPP_

#include <string>
#include <string_view>

#include "json.hpp"
#include "wdist/census.hpp"
#include "wdist/code.hpp"
#include "wdist/field.hpp"
#include "wdist/moments.hpp"

namespace wdist {

// Code file format:
//
//   q=p^m [poly=c0,c1,...,cm]
//   n k
//   <k rows of n integers in [0, q)>
//
// Blank lines and lines starting with '#' are ignored. `q=4` (a bare prime
// power) is accepted as well. All failures raise kParseError, except field
// construction errors, which keep their own codes.
Field ParseFieldDesignator(std::string_view line);
LinearCode ParseCode(std::string_view text);
LinearCode ReadCodeFile(const std::string& path);  // kIoError if unreadable
std::string FormatCode(const LinearCode& code);

// {"n":…, "k":…, "q":…, "A":["1","0",…]}; counts are decimal strings.
nlohmann::json DistributionToJson(const WeightDistribution& a);
WeightDistribution DistributionFromJson(const nlohmann::json& j);

// {"nu":…, "counts":{"r":"N",…}, "binom_total":"…"}
nlohmann::json CensusToJson(const RankCensus& census);

nlohmann::json ParametersToJson(const CodeParameters& p);

// Accepts a map {"index":"value",…} or a distribution object with an "A"
// array, in which case every entry becomes a known.
Knowns KnownsFromJson(const nlohmann::json& j);
nlohmann::json KnownsToJson(const Knowns& knowns);

nlohmann::json RationalVectorToJson(const std::vector<Rational>& v);

}  // namespace wdist

#endif  // WDIST_IO_HPP_
