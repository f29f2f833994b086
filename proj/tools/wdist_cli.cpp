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

// wdist command-line tool. Talks to the library only through wdist.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wdist/wdist.h"

namespace {

using nlohmann::json;

// Carries a library status up to main().
struct Failure {
  wd_status status;
  std::string message;
};

void Check(wd_status s) {
  if (s != WD_OK) throw Failure{s, wd_last_error()};
}

[[noreturn]] void InputError(const std::string& message) {
  throw Failure{WD_ERR_INVALID_ARGUMENT, message};
}

struct StringDeleter {
  void operator()(char* s) const { wd_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct CodeDeleter {
  void operator()(wd_code* c) const { wd_code_destroy(c); }
};
using Code = std::unique_ptr<wd_code, CodeDeleter>;

struct DistributionDeleter {
  void operator()(wd_distribution* d) const { wd_distribution_destroy(d); }
};
using Distribution = std::unique_ptr<wd_distribution, DistributionDeleter>;

struct ConfigDeleter {
  void operator()(wd_config* c) const { wd_config_destroy(c); }
};
using Config = std::unique_ptr<wd_config, ConfigDeleter>;

std::string Take(char* s) {
  OwnedString owned(s);
  return owned.get();
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure{WD_ERR_IO, "cannot read " + path};
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteFile(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure{WD_ERR_IO, "cannot write " + path.string()};
  out << text;
}

Code LoadCode(const std::string& path) {
  wd_code* c = nullptr;
  Check(wd_code_load(path.c_str(), &c));
  return Code(c);
}

Code ParseCode(const std::string& text) {
  wd_code* c = nullptr;
  Check(wd_code_parse(text.c_str(), &c));
  return Code(c);
}

Distribution LoadDistribution(const std::string& path) {
  wd_distribution* d = nullptr;
  Check(wd_distribution_parse_json(ReadFile(path).c_str(), &d));
  return Distribution(d);
}

json DistributionJson(const wd_distribution* d) {
  char* s = nullptr;
  Check(wd_distribution_to_json(d, &s));
  return json::parse(Take(s));
}

json ParamsJson(const wd_params& p) {
  return {{"n", p.n},           {"k", p.k},
          {"q", p.q},           {"d", p.d},
          {"d_perp", p.d_perp},
          {"sigma", static_cast<long>(p.n) + 2 - static_cast<long>(p.d) -
                        static_cast<long>(p.d_perp)}};
}

// Tabular view of a result: used for csv and table output.
struct Rows {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> preamble;  // table format only
};

std::string Cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "pass" : "FAIL";
  return v.dump();
}

Rows DistributionRows(const json& d) {
  Rows r{{"i", "A_i"}, {}, {}};
  for (std::size_t i = 0; i < d["A"].size(); ++i)
    r.rows.push_back({std::to_string(i), Cell(d["A"][i])});
  return r;
}

std::string RenderCsv(const Rows& r) {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i)
      out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(r.header);
  for (const auto& row : r.rows) line(row);
  return out.str();
}

std::string RenderTable(const Rows& r) {
  std::vector<std::size_t> width(r.header.size(), 0);
  auto widen = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], cells[i].size());
  };
  widen(r.header);
  for (const auto& row : r.rows) widen(row);
  std::ostringstream out;
  for (const auto& p : r.preamble) out << p << "\n";
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out << "  ";
      out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
    }
    out << "\n";
  };
  line(r.header);
  std::size_t total = 0;
  for (auto w : width) total += w;
  out << std::string(total + 2 * (width.size() - 1), '-') << "\n";
  for (const auto& row : r.rows) line(row);
  return out.str();
}

struct Settings {
  std::uint64_t budget = 0;
  std::uint64_t census_budget = 0;
  unsigned workers = 0;
  std::string format = "json";
  std::uint64_t seed = 1;
  std::string output;
};

class Runner {
 public:
  explicit Runner(const Settings& s) : settings_(s) {
    wd_config* c = nullptr;
    Check(wd_config_create(&c));
    config_.reset(c);
    if (s.budget) Check(wd_config_set_budget(c, s.budget));
    if (s.census_budget) Check(wd_config_set_census_budget(c, s.census_budget));
    if (s.workers) Check(wd_config_set_workers(c, s.workers));
  }

  const wd_config* config() const { return config_.get(); }

  void Emit(const json& j, const Rows& rows) const {
    std::string text;
    if (settings_.format == "csv") {
      text = RenderCsv(rows);
    } else if (settings_.format == "table") {
      text = RenderTable(rows);
    } else {
      text = j.dump(2) + "\n";
    }
    EmitText(text);
  }

  void EmitText(const std::string& text) const {
    if (settings_.output.empty()) {
      std::cout << text;
    } else {
      WriteFile(settings_.output, text);
    }
  }

 private:
  Settings settings_;
  Config config_;
};

wd_params ParamsFromList(const std::vector<std::size_t>& v) {
  if (v.size() != 5) InputError("--params expects n,k,q,d,d_perp");
  wd_params p{v[0], v[1], v[3], v[4], static_cast<std::uint32_t>(v[2])};
  Check(wd_params_validate(&p));
  return p;
}

wd_params ResolveParams(const Runner& run, const std::vector<std::size_t>& list,
                        const std::string& code_path) {
  if (!list.empty() && !code_path.empty())
    InputError("give either --params or --code, not both");
  if (!code_path.empty()) {
    const Code code = LoadCode(code_path);
    wd_params p{};
    Check(wd_code_parameters(code.get(), run.config(), &p));
    return p;
  }
  if (list.empty()) InputError("parameters required: --params or --code");
  return ParamsFromList(list);
}

std::string KnownsText(const std::string& arg) {
  const auto first = arg.find_first_not_of(" \t\n");
  if (first != std::string::npos && arg[first] == '{') return arg;
  return ReadFile(arg);
}

// Golden codes over GF(4), alpha = 2 and alpha^2 = 3 under x^2 + x + 1.
constexpr const char* kG1 =
    "q=2^2 poly=1,1,1\n"
    "8 4\n"
    "1 0 0 0 1 3 2 0\n"
    "0 1 0 0 0 1 3 2\n"
    "0 0 1 0 2 2 0 1\n"
    "0 0 0 1 1 3 1 1\n";
constexpr const char* kG2 =
    "q=2^2 poly=1,1,1\n"
    "8 4\n"
    "1 0 0 0 1 3 2 0\n"
    "0 1 0 0 3 0 1 1\n"
    "0 0 1 0 0 1 3 3\n"
    "0 0 0 1 2 2 0 1\n";

json ExtremalSystemJson(std::size_t m, const std::vector<std::size_t>& nus,
                        bool symmetry, wd_status* status) {
  char* s = nullptr;
  *status = wd_extremal_system_json(m, nus.data(), nus.size(), symmetry, &s);
  if (s == nullptr) Check(*status);
  json j = json::parse(Take(s));
  j["status"] = wd_status_name(*status);
  return j;
}

int CmdFixtures(const Runner& run, const std::string& dir_arg,
                std::uint64_t seed) {
  const std::filesystem::path dir = dir_arg.empty() ? "fixtures" : dir_arg;
  std::filesystem::create_directories(dir / "corpus");
  json index = json::array();
  auto write = [&](const std::string& name, const std::string& text) {
    WriteFile(dir / name, text);
    index.push_back(name);
  };
  for (const auto& [name, text] :
       {std::pair{"c1", kG1}, std::pair{"c2", kG2}}) {
    const Code code = ParseCode(text);
    write(std::string(name) + ".code", text);
    wd_distribution* d = nullptr;
    Check(wd_code_enumerate(code.get(), run.config(), &d));
    Distribution dist(d);
    json j = DistributionJson(dist.get());
    wd_params p{};
    Check(wd_distribution_parameters(dist.get(), &p));
    j["params"] = ParamsJson(p);
    write(std::string(name) + ".json", j.dump(2) + "\n");
    json census = json::array();
    for (std::size_t nu = 1; nu <= wd_code_length(code.get()); ++nu) {
      char* s = nullptr;
      Check(wd_census_json(code.get(), nu, run.config(), &s));
      census.push_back(json::parse(Take(s)));
    }
    write(std::string(name) + "_census.json", census.dump(2) + "\n");
    // NMDS closed form at the observed A_d.
    char* ad = nullptr;
    Check(wd_distribution_get(dist.get(), p.d, &ad));
    const std::string a_d = Take(ad);
    wd_distribution* nm = nullptr;
    Check(wd_nmds(p.n, p.k, p.q, a_d.c_str(), &nm));
    Distribution nmds(nm);
    write(std::string(name) + "_nmds.json",
          DistributionJson(nmds.get()).dump(2) + "\n");
  }
  wd_status status = WD_OK;
  write("system12.json",
        ExtremalSystemJson(1, {22, 24}, true, &status).dump(2) + "\n");
  Check(status);
  const json s13 = ExtremalSystemJson(1, {23, 24}, true, &status);
  if (status != WD_ERR_SINGULAR_MATRIX)
    throw Failure{WD_ERR_INTERNAL, "system (23, 24) unexpectedly solvable"};
  write("system13.json", s13.dump(2) + "\n");

  json mds = json::array();
  const std::size_t table[][3] = {{7, 3, 8}, {4, 2, 3}, {5, 3, 4}, {6, 2, 5},
                                  {8, 4, 7}, {9, 5, 8}, {10, 5, 9}};
  for (const auto& row : table) {
    wd_distribution* d = nullptr;
    Check(wd_mds(row[0], row[1], static_cast<std::uint32_t>(row[2]), &d));
    Distribution dist(d);
    mds.push_back(DistributionJson(dist.get()));
  }
  write("mds.json", mds.dump(2) + "\n");

  json extremal = json::array();
  for (std::size_t m = 1; m <= 5; ++m) {
    wd_distribution* d = nullptr;
    Check(wd_extremal(m, &d));
    Distribution dist(d);
    extremal.push_back(DistributionJson(dist.get()));
  }
  write("extremal.json", extremal.dump(2) + "\n");

  // Seeded random corpus for the brute-force cross checks.
  const std::uint32_t qs[] = {2, 3, 4, 5};
  for (std::size_t i = 0; i < 24; ++i) {
    const std::uint32_t q = qs[i % 4];
    const std::size_t n = 4 + (i * 7 + seed) % 5;
    const std::size_t k = 1 + (i * 3 + seed) % (n - 1);
    wd_code* c = nullptr;
    Check(wd_code_random(q, n, k, seed * 1000 + i, &c));
    Code code(c);
    char* s = nullptr;
    Check(wd_code_format(code.get(), &s));
    char name[32];
    std::snprintf(name, sizeof(name), "corpus/random_%02zu.code", i);
    write(name, Take(s));
  }
  WriteFile(dir / "index.json", index.dump(2) + "\n");
  std::cout << "wrote " << index.size() << " fixtures to " << dir.string()
            << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact weight distributions of linear codes over finite fields"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--budget", settings.budget,
                 "maximum codewords to enumerate")
      ->check(CLI::PositiveNumber);
  app.add_option("--census-budget", settings.census_budget,
                 "maximum column subsets per census")
      ->check(CLI::PositiveNumber);
  app.add_option("--workers", settings.workers, "worker threads")
      ->check(CLI::PositiveNumber);
  app.add_option("--format", settings.format, "output format")
      ->check(CLI::IsMember({"json", "csv", "table"}));
  app.add_option("--seed", settings.seed, "seed for the random corpus");
  app.add_option("--output", settings.output,
                 "output file (directory for fixtures)");

  std::string code_path;
  std::string distribution_path;
  std::string check = "all";
  std::size_t nu = 0;
  std::vector<std::size_t> params_list;
  std::string knowns_arg;
  std::string system_name = "pascal";
  std::size_t n = 0, k = 0, q = 0, sigma = 0, m = 0;
  std::string a_d, seeds;
  std::vector<std::size_t> nus;
  bool no_symmetry = false;

  auto* enumerate = app.add_subcommand("enumerate", "weight distribution by enumeration");
  enumerate->add_option("code", code_path, "code file")->required();
  auto* dual = app.add_subcommand("dual", "print the dual code");
  dual->add_option("code", code_path, "code file")->required();
  auto* census = app.add_subcommand("census", "rank census of the parity-check matrix");
  census->add_option("code", code_path, "code file")->required();
  census->add_option("nu", nu, "subset size (all sizes if omitted)");
  auto* verify = app.add_subcommand("verify", "check the identities on a code");
  verify->add_option("code", code_path, "code file")->required();
  verify->add_option("--check", check, "which checks")
      ->check(CLI::IsMember({"identity", "pless", "regime", "crosscheck", "all"}));
  verify->add_option("--distribution", distribution_path,
                     "distribution JSON to test instead of the enumerated one");
  auto add_params = [&](CLI::App* cmd) {
    cmd->add_option("--params", params_list, "n,k,q,d,d_perp")->delimiter(',');
    cmd->add_option("--code", code_path, "derive parameters from a code file");
  };
  auto* solve = app.add_subcommand("solve", "recover a distribution from knowns");
  add_params(solve);
  solve->add_option("--knowns", knowns_arg, "knowns JSON file or inline JSON")
      ->required();
  solve->add_option("--system", system_name, "moment system")
      ->check(CLI::IsMember({"pascal", "pless"}));
  auto* crosscheck = app.add_subcommand("crosscheck", "solve both systems and compare");
  add_params(crosscheck);
  crosscheck->add_option("--knowns", knowns_arg, "knowns JSON file or inline JSON")
      ->required();
  auto* pless_report = app.add_subcommand("pless-report", "rank relationship of the two systems");
  add_params(pless_report);
  auto* mds = app.add_subcommand("mds", "MDS distribution");
  mds->add_option("n", n)->required();
  mds->add_option("k", k)->required();
  mds->add_option("q", q)->required();
  auto* nmds = app.add_subcommand("nmds", "NMDS distribution from A_d");
  nmds->add_option("n", n)->required();
  nmds->add_option("k", k)->required();
  nmds->add_option("q", q)->required();
  nmds->add_option("A_d", a_d)->required();
  auto* amds = app.add_subcommand("amds", "distribution from sigma-1 seed weights");
  amds->add_option("n", n)->required();
  amds->add_option("k", k)->required();
  amds->add_option("q", q)->required();
  amds->add_option("sigma", sigma)->required();
  amds->add_option("seeds", seeds, "comma separated A_{n-k}, ...");
  auto* extremal = app.add_subcommand("extremal", "extremal doubly-even self-dual distribution");
  extremal->add_option("m", m)->required();
  extremal->add_option("--nu", nus, "solve only these moment rows")->delimiter(',');
  extremal->add_flag("--no-symmetry", no_symmetry, "omit the symmetry rows");
  auto* fixtures = app.add_subcommand("fixtures", "regenerate golden files");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const Runner run(settings);

    if (*enumerate) {
      const Code code = LoadCode(code_path);
      wd_distribution* d = nullptr;
      Check(wd_code_enumerate(code.get(), run.config(), &d));
      Distribution dist(d);
      json j = DistributionJson(dist.get());
      wd_params p{};
      Check(wd_distribution_parameters(dist.get(), &p));
      j["params"] = ParamsJson(p);
      Rows rows = DistributionRows(j);
      rows.preamble.push_back("n=" + std::to_string(p.n) + " k=" +
                              std::to_string(p.k) + " q=" + std::to_string(p.q) +
                              " d=" + std::to_string(p.d) + " d_perp=" +
                              std::to_string(p.d_perp) + " sigma=" +
                              j["params"]["sigma"].dump());
      run.Emit(j, rows);
      return 0;
    }
    if (*dual) {
      const Code code = LoadCode(code_path);
      wd_code* c = nullptr;
      Check(wd_code_dual(code.get(), &c));
      Code d(c);
      char* s = nullptr;
      Check(wd_code_format(d.get(), &s));
      run.EmitText(Take(s));
      return 0;
    }
    if (*census) {
      const Code code = LoadCode(code_path);
      std::vector<std::size_t> sizes;
      if (nu) {
        sizes.push_back(nu);
      } else {
        for (std::size_t v = 1; v <= wd_code_length(code.get()); ++v)
          sizes.push_back(v);
      }
      json all = json::array();
      Rows rows{{"nu", "r", "count"}, {}, {}};
      for (auto v : sizes) {
        char* s = nullptr;
        Check(wd_census_json(code.get(), v, run.config(), &s));
        json c = json::parse(Take(s));
        for (const auto& [r, count] : c["counts"].items())
          rows.rows.push_back({std::to_string(v), r, Cell(count)});
        all.push_back(std::move(c));
      }
      run.Emit(nu ? all[0] : all, rows);
      return 0;
    }
    if (*verify) {
      const Code code = LoadCode(code_path);
      Distribution claimed;
      if (!distribution_path.empty()) claimed = LoadDistribution(distribution_path);
      unsigned which = WD_CHECK_ALL;
      if (check == "identity") which = WD_CHECK_IDENTITY;
      if (check == "pless") which = WD_CHECK_PLESS;
      if (check == "regime") which = WD_CHECK_REGIME;
      if (check == "crosscheck") which = WD_CHECK_CROSSCHECK;
      char* s = nullptr;
      int passed = 0;
      Check(wd_verify(code.get(), claimed.get(), which, run.config(), &s,
                      &passed));
      const json report = json::parse(Take(s));
      Rows rows{{"check", "nu", "lhs", "rhs", "result"}, {}, {}};
      for (const char* name : {"identity", "pless"}) {
        if (!report.contains(name)) continue;
        for (const auto& r : report[name])
          rows.rows.push_back({name, r["nu"].dump(), Cell(r["lhs"]),
                               Cell(r["rhs"]), Cell(r["holds"])});
      }
      if (report.contains("regime")) {
        for (const auto& r : report["regime"])
          rows.rows.push_back({"regime", r["nu"].dump(), "full rank", "",
                               Cell(r["full_rank"])});
      }
      if (report.contains("crosscheck")) {
        const auto& c = report["crosscheck"];
        rows.rows.push_back({"crosscheck", "", "agree", "",
                             Cell(c["agree"])});
        rows.rows.push_back({"crosscheck", "", "matches", "",
                             Cell(c["matches"])});
      }
      rows.preamble.push_back(std::string("overall: ") +
                              (passed ? "pass" : "FAIL"));
      run.Emit(report, rows);
      return passed ? 0 : 1;
    }
    if (*solve) {
      const wd_params p = ResolveParams(run, params_list, code_path);
      const std::string knowns = KnownsText(knowns_arg);
      wd_distribution* d = nullptr;
      Check(wd_solve(&p, system_name == "pless" ? WD_SYSTEM_PLESS
                                                : WD_SYSTEM_PASCAL,
                     knowns.c_str(), &d));
      Distribution dist(d);
      const json j = DistributionJson(dist.get());
      run.Emit(j, DistributionRows(j));
      return 0;
    }
    if (*crosscheck) {
      const wd_params p = ResolveParams(run, params_list, code_path);
      const std::string knowns = KnownsText(knowns_arg);
      char* s = nullptr;
      int agree = 0;
      Check(wd_crosscheck_json(&p, knowns.c_str(), &s, &agree));
      const json j = json::parse(Take(s));
      Rows rows{{"i", "pascal", "pless"}, {}, {}};
      for (std::size_t i = 0; i < j["pascal"].size(); ++i)
        rows.rows.push_back({std::to_string(i), Cell(j["pascal"][i]),
                             Cell(j["pless"][i])});
      rows.preamble.push_back(std::string("agree: ") + (agree ? "yes" : "NO"));
      run.Emit(j, rows);
      return agree ? 0 : 1;
    }
    if (*pless_report) {
      const wd_params p = ResolveParams(run, params_list, code_path);
      char* s = nullptr;
      Check(wd_pless_report_json(&p, &s));
      const json j = json::parse(Take(s));
      Rows rows{{"quantity", "value"}, {}, {}};
      for (const char* key :
           {"pascal_rank", "pless_rank", "joint_rank", "joint_augmented_rank",
            "pascal_in_pless_span", "pless_in_pascal_span", "consistent"}) {
        const auto& v = j[key];
        rows.rows.push_back(
            {key, v.is_boolean() ? (v.get<bool>() ? "yes" : "no") : v.dump()});
      }
      run.Emit(j, rows);
      return 0;
    }
    if (*mds || *nmds || *amds || (*extremal && nus.empty())) {
      wd_distribution* d = nullptr;
      if (*mds) {
        Check(wd_mds(n, k, static_cast<std::uint32_t>(q), &d));
      } else if (*nmds) {
        Check(wd_nmds(n, k, static_cast<std::uint32_t>(q), a_d.c_str(), &d));
      } else if (*amds) {
        std::vector<std::string> parts;
        std::stringstream in(seeds);
        for (std::string part; std::getline(in, part, ',');)
          if (!part.empty()) parts.push_back(part);
        std::vector<const char*> ptrs;
        for (const auto& s : parts) ptrs.push_back(s.c_str());
        Check(wd_amds(n, k, static_cast<std::uint32_t>(q), sigma, ptrs.data(),
                      ptrs.size(), &d));
      } else {
        Check(wd_extremal(m, &d));
      }
      Distribution dist(d);
      const json j = DistributionJson(dist.get());
      run.Emit(j, DistributionRows(j));
      if (!wd_distribution_is_valid(dist.get())) {
        std::cerr << "wdist: result is not a valid weight distribution\n";
        return 1;
      }
      return 0;
    }
    if (*extremal) {
      wd_status status = WD_OK;
      const json j = ExtremalSystemJson(m, nus, !no_symmetry, &status);
      Rows rows{{"weight", "value"}, {}, {}};
      const json& values =
          j.contains("solution") ? j["solution"] : j["kernel_witness"];
      for (std::size_t i = 0; i < values.size(); ++i)
        rows.rows.push_back({j["columns"][i].dump(), Cell(values[i])});
      if (j.contains("rank"))
        rows.preamble.push_back("singular, rank " + j["rank"].dump() +
                                "; kernel witness:");
      run.Emit(j, rows);
      if (status != WD_OK) {
        std::cerr << "wdist: " << wd_status_name(status) << ": "
                  << wd_last_error() << "\n";
      }
      return wd_status_exit_code(status);
    }
    if (*fixtures) return CmdFixtures(run, settings.output, settings.seed);
  } catch (const Failure& f) {
    std::cerr << "wdist: " << wd_status_name(f.status) << ": " << f.message
              << "\n";
    return wd_status_exit_code(f.status);
  } catch (const std::exception& e) {
    std::cerr << "wdist: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
