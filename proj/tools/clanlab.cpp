// Command-line front end: counting, enumeration, bijection translation,
// poset emission, representative matrices, and the verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error,
// 3 internal invariant violation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "clanlab/clanlab.hpp"
#include "clanlab/verification.hpp"

namespace {

using clanlab::Clan;
using clanlab::Integer;
using nlohmann::json;

constexpr const char* kSchema = "clan-lab/1";
constexpr int kEnumerateLimit = 7;
constexpr int kHasseLimit = 5;

// CLAN_LAB_MAX_N raises (or lowers) the enumeration and poset bounds.
int bound_override(int fallback) {
  const char* env = std::getenv("CLAN_LAB_MAX_N");
  if (env == nullptr || *env == '\0') return fallback;
  return std::atoi(env);
}

json integer_json(const Integer& value) {
  if (value >= std::numeric_limits<long long>::min() && value <= std::numeric_limits<long long>::max())
    return static_cast<long long>(value);
  return value.str();
}

json clan_json(const Clan& c) {
  json symbols = json::array();
  for (const auto& s : c.symbols()) symbols.push_back(s.str());
  return json{{"n", c.length() / 2}, {"symbols", symbols}};
}

json qsqrt2_json(const clanlab::QSqrt2& x) {
  auto rational_str = [](const clanlab::Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
  };
  return json{{"a", rational_str(x.rational_part())}, {"b", rational_str(x.sqrt2_part())}};
}

struct CountOptions {
  int n = 1;
  bool table = false;
  bool as_json = false;
  std::string sect;
};

int run_count(const CountOptions& opt) {
  if (opt.sect == "big") {
    std::cout << clanlab::big_sect_count(opt.n).str() << "\n";
    return 0;
  }
  if (opt.as_json) {
    json out{{"schema", kSchema}, {"n", opt.n}, {"Z", integer_json(clanlab::skew_clan_count(opt.n))}};
    json zeta = json::array();
    for (int k = 0; k <= opt.n; ++k) zeta.push_back(integer_json(clanlab::skew_clan_count_by_pairs(k, opt.n)));
    out["zeta"] = zeta;
    if (opt.n <= bound_override(kEnumerateLimit)) {
      json sects = json::object();
      std::map<std::string, int> sizes;
      for (const Clan& c : clanlab::enumerate_skew_clans(opt.n, bound_override(kEnumerateLimit)))
        ++sizes[clanlab::base_clan(c).str()];
      for (const auto& [base, size] : sizes) sects[base] = size;
      out["sects"] = sects;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  if (opt.table) {
    clanlab::CountTable t = clanlab::count_table(opt.n);
    for (int k = 0; k <= opt.n; ++k)
      std::cout << k << "\t" << t.by_pairs[static_cast<size_t>(k)].str() << "\n";
    std::cout << "total\t" << t.total.str() << "\n";
    return 0;
  }
  std::cout << clanlab::skew_clan_count(opt.n).str() << "\n";
  return 0;
}

struct EnumerateOptions {
  int n = 1;
  std::string sect;
  bool as_json = false;
};

int run_enumerate(const EnumerateOptions& opt) {
  int limit = bound_override(kEnumerateLimit);
  std::vector<Clan> clans;
  if (opt.sect.empty()) {
    clans = clanlab::enumerate_skew_clans(opt.n, limit);
  } else if (opt.sect == "big") {
    clans = clanlab::big_sect(opt.n, limit);
  } else {
    Clan base = Clan::parse(opt.sect);
    if (base.length() != 2 * opt.n) throw clanlab::SizeMismatch("sect base does not match --n");
    clans = clanlab::enumerate_sect(base, limit);
  }
  if (opt.as_json) {
    json list = json::array();
    for (const Clan& c : clans) list.push_back(clan_json(c));
    std::cout << json{{"schema", kSchema}, {"n", opt.n}, {"clans", list}}.dump(2) << "\n";
  } else {
    for (const Clan& c : clans) std::cout << c.str() << "\n";
  }
  return 0;
}

struct MapOptions {
  std::string from;
  std::string to;
  std::string input;
};

int run_map(const MapOptions& opt) {
  Clan c = [&] {
    if (opt.from == "clan") return Clan::parse(opt.input);
    if (opt.from == "restricted")
      return clanlab::restricted_to_clan(clanlab::SignedPermutation::parse(opt.input));
    if (opt.from == "path") return clanlab::path_to_clan(clanlab::WeightedDelannoyPath::parse(opt.input));
    if (opt.from == "pinv")
      return clanlab::partial_involution_to_clan(clanlab::PartialInvolution::parse(opt.input));
    throw clanlab::ParseError("unknown --from kind: " + opt.from);
  }();
  if (opt.to == "clan") {
    std::cout << c.str() << "\n";
  } else if (opt.to == "restricted") {
    std::cout << clanlab::clan_to_restricted(c).str() << "\n";
  } else if (opt.to == "path") {
    std::cout << clanlab::clan_to_path(c).str() << "\n";
  } else if (opt.to == "pinv") {
    std::cout << clanlab::clan_to_partial_involution(c).str() << "\n";
  } else {
    throw clanlab::ParseError("unknown --to kind: " + opt.to);
  }
  return 0;
}

struct HasseOptions {
  int n = 1;
  std::string sect;
  std::string format = "dot";
};

int run_hasse(const HasseOptions& opt) {
  int limit = bound_override(kHasseLimit);
  if (opt.n > limit)
    throw clanlab::BoundExceeded("hasse capped at n = " + std::to_string(limit) +
                                 " (override with CLAN_LAB_MAX_N)");
  std::vector<Clan> clans = opt.sect == "big" ? clanlab::big_sect(opt.n, opt.n)
                                              : clanlab::enumerate_skew_clans(opt.n, opt.n);
  clanlab::Poset p = clanlab::hasse_of_clans(std::move(clans));
  if (opt.format == "dot") {
    std::cout << clanlab::to_dot(p, "clans_n" + std::to_string(opt.n));
  } else if (opt.format == "json") {
    json covers = json::array();
    for (const auto& [lo, hi] : p.covers) covers.push_back(json::array({lo, hi}));
    std::cout << json{{"schema", kSchema}, {"elements", p.elements}, {"covers", covers}}.dump(2) << "\n";
  } else {
    throw clanlab::ParseError("unknown format: " + opt.format);
  }
  return 0;
}

struct FlagOptions {
  std::string clan;
  bool as_json = false;
};

int run_flag(const FlagOptions& opt) {
  Clan c = Clan::parse(opt.clan);
  clanlab::ExactMatrix g = clanlab::representative_matrix(c);
  if (opt.as_json) {
    json rows = json::array();
    for (int i = 1; i <= g.rows(); ++i) {
      json row = json::array();
      for (int j = 1; j <= g.cols(); ++j) row.push_back(qsqrt2_json(g.at(i, j)));
      rows.push_back(row);
    }
    std::cout << json{{"schema", kSchema}, {"clan", c.str()}, {"matrix", rows}}.dump(2) << "\n";
  } else {
    std::cout << g.str();
  }
  return 0;
}

struct VerifyOptions {
  std::string suite = "all";
  int n = 0;
};

int run_verify(const VerifyOptions& opt) {
  int failures = 0;
  for (const clanlab::CheckResult& r : clanlab::verification_suite(opt.suite, opt.n)) {
    std::cout << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  " << r.detail << "\n";
    if (!r.passed) ++failures;
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"clanlab: exact combinatorics of skew-symmetric clans, their bijections,"
               " closure orders and orbit representatives"};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand("count", "count clans (Z_n, the per-pair table, or the big sect)");
  count->add_option("--n", count_opt.n, "half-length n")->required()->check(CLI::PositiveNumber);
  count->add_flag("--table", count_opt.table, "print the per-pair-count table");
  count->add_option("--sect", count_opt.sect, "'big' counts the big sect instead");
  count->add_flag("--json", count_opt.as_json, "machine-readable output");

  EnumerateOptions enum_opt;
  CLI::App* enumerate = app.add_subcommand("enumerate", "list skew-symmetric (n,n)-clans");
  enumerate->add_option("--n", enum_opt.n, "half-length n")->required()->check(CLI::PositiveNumber);
  enumerate->add_option("--sect", enum_opt.sect, "restrict to a sect: 'big' or a base clan");
  enumerate->add_flag("--json", enum_opt.as_json, "machine-readable output");

  MapOptions map_opt;
  CLI::App* map_cmd = app.add_subcommand("map", "translate between clans, restricted involutions,"
                                                " weighted paths and partial involutions");
  map_cmd->add_option("--from", map_opt.from, "clan|restricted|path|pinv")->required();
  map_cmd->add_option("--to", map_opt.to, "clan|restricted|path|pinv")->required();
  map_cmd->add_option("--input", map_opt.input, "object text")->required();

  HasseOptions hasse_opt;
  CLI::App* hasse_cmd = app.add_subcommand("hasse", "emit the closure-order Hasse diagram");
  hasse_cmd->add_option("--n", hasse_opt.n, "half-length n")->required()->check(CLI::PositiveNumber);
  hasse_cmd->add_option("--sect", hasse_opt.sect, "'big' restricts to the big sect");
  hasse_cmd->add_option("--format", hasse_opt.format, "dot|json");

  FlagOptions flag_opt;
  CLI::App* flag_cmd = app.add_subcommand("flag", "print the exact representative matrix of a clan");
  flag_cmd->add_option("--clan", flag_opt.clan, "clan text")->required();
  flag_cmd->add_flag("--json", flag_opt.as_json, "machine-readable output");

  VerifyOptions verify_opt;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", verify_opt.suite, "counts|bijections|posets|geometry|all");
  verify_cmd->add_option("--n", verify_opt.n, "trim sweep bounds (never past the pinned ones)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (count->parsed()) return run_count(count_opt);
    if (enumerate->parsed()) return run_enumerate(enum_opt);
    if (map_cmd->parsed()) return run_map(map_opt);
    if (hasse_cmd->parsed()) return run_hasse(hasse_opt);
    if (flag_cmd->parsed()) return run_flag(flag_opt);
    if (verify_cmd->parsed()) return run_verify(verify_opt);
  } catch (const clanlab::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
