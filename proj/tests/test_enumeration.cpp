#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <set>
#include <string>
#include <vector>

#include "clanlab/enumeration.hpp"

using namespace clanlab;

namespace {

// The 45 skew-symmetric (3,3)-clans, written compactly.
const std::set<std::string> kAllSkew3 = {
    "---+++", "+++---", "++-+--", "+-+-+-", "-++--+", "--+-++",
    "-+-+-+", "+--++-", "1++--1", "+1+-1-", "++11--", "1--++1",
    "-1-+1+", "--11++", "1+-+-1", "1-+-+1", "-1+-1+", "+1-+1-",
    "+-11+-", "-+11-+", "+1122-", "11-+22", "1-12+2", "-1122+", "12+-12",
    "-1212+", "12-+12", "1+21-2", "+1212-", "1+12-2", "11+-22", "12+-21",
    "1+22-1", "+1221-", "12-+21", "1-22+1", "-1221+", "1-21+2", "123321",
    "123123", "121323", "123231", "112233", "123312", "122331"};

const std::vector<long long> kSkewCounts = {3, 11, 45, 201, 963, 4899, 26253};
const std::vector<long long> kBigSectCounts = {2, 5, 14, 43, 142, 499, 1850};

}  // namespace

TEST_CASE("slot pairing counts: closed form equals recurrence") {
  CHECK(slot_pairing_count(0) == 1);
  CHECK(slot_pairing_count(1) == 1);
  CHECK(slot_pairing_count(2) == 3);
  CHECK(slot_pairing_count(3) == 7);
  for (int k = 0; k <= 60; ++k)
    CHECK(slot_pairing_count(k) == slot_pairing_count_recurrence(k));
}

TEST_CASE("per-pair-count values") {
  CHECK(skew_clan_count_by_pairs(0, 2) == 4);
  CHECK(skew_clan_count_by_pairs(1, 2) == 4);
  CHECK(skew_clan_count_by_pairs(2, 2) == 3);
  CHECK(skew_clan_count_recurrence(0) == 1);
}

TEST_CASE("count formulas match the known sequence") {
  for (int n = 1; n <= 7; ++n) {
    CHECK(skew_clan_count(n) == kSkewCounts[static_cast<size_t>(n - 1)]);
    CHECK(skew_clan_count_recurrence(n) == kSkewCounts[static_cast<size_t>(n - 1)]);
  }
  CountTable t = count_table(2);
  CHECK(t.total == 11);
  CHECK(t.by_pairs == std::vector<Integer>{4, 4, 3});
}

TEST_CASE("exhaustive generation at n = 1") {
  std::vector<Clan> got = enumerate_skew_clans(1);
  std::set<std::string> names;
  for (const Clan& c : got) names.insert(c.compact());
  CHECK(names == std::set<std::string>{"+-", "-+", "11"});
}

TEST_CASE("exhaustive generation at n = 3 reproduces the full list") {
  std::set<std::string> got;
  for (const Clan& c : enumerate_skew_clans(3)) got.insert(c.compact());
  CHECK(got.size() == 45);
  CHECK(got == kAllSkew3);
}

TEST_CASE("generation agrees with formula and recurrence, and output is canonical") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<Clan> clans = enumerate_skew_clans(n);
    CHECK(Integer(clans.size()) == skew_clan_count(n));
    CHECK(Integer(clans.size()) == skew_clan_count_recurrence(n));
    std::set<Clan> distinct(clans.begin(), clans.end());
    CHECK(distinct.size() == clans.size());
    std::map<int, long long> by_pairs;
    for (const Clan& c : clans) {
      CHECK(is_skew_symmetric(c));
      ++by_pairs[c.pair_count()];
    }
    for (int k = 0; k <= n; ++k)
      CHECK(Integer(by_pairs[k]) == skew_clan_count_by_pairs(k, n));
  }
  CHECK_THROWS_AS(enumerate_skew_clans(8), BoundExceeded);
  CHECK_NOTHROW(enumerate_skew_clans(8, 8));
}

TEST_CASE("sects partition the clan set") {
  for (int n = 1; n <= 4; ++n) {
    std::vector<Clan> clans = enumerate_skew_clans(n);
    std::set<Clan> bases;
    for (const Clan& c : clans) bases.insert(base_clan(c));
    CHECK(bases.size() == (1u << n));  // one sect per cell
    size_t covered = 0;
    for (const Clan& b : bases) covered += enumerate_sect(b).size();
    CHECK(covered == clans.size());
  }
  CHECK_THROWS_AS(enumerate_sect(Clan::parse("11")), NotABaseClan);
  CHECK_THROWS_AS(enumerate_sect(Clan::parse("+--+")), NotABaseClan);  // all signs but not skew
}

TEST_CASE("individual sects at n = 2") {
  auto compact_set = [](const std::vector<Clan>& clans) {
    std::set<std::string> out;
    for (const Clan& c : clans) out.insert(c.compact());
    return out;
  };
  CHECK(compact_set(enumerate_sect(Clan::parse("++--"))) == std::set<std::string>{"++--"});
  CHECK(compact_set(enumerate_sect(Clan::parse("+-+-"))) == std::set<std::string>{"+-+-", "+11-"});
  CHECK(compact_set(enumerate_sect(Clan::parse("-+-+"))) == std::set<std::string>{"-+-+", "1122", "1+-1"});
}

TEST_CASE("big sect membership at n = 2") {
  std::set<std::string> got;
  for (const Clan& c : big_sect(2)) got.insert(c.compact());
  CHECK(got == std::set<std::string>{"--++", "-11+", "1-+1", "1212", "1221"});
}

TEST_CASE("big sect counts") {
  CHECK(big_sect_count(0) == 1);
  for (int n = 1; n <= 7; ++n) {
    CHECK(big_sect_count(n) == kBigSectCounts[static_cast<size_t>(n - 1)]);
    CHECK(big_sect_count_recurrence(n) == kBigSectCounts[static_cast<size_t>(n - 1)]);
  }
  for (int n = 1; n <= 5; ++n)
    CHECK(Integer(big_sect(n).size()) == big_sect_count(n));
}

TEST_CASE("generating function coefficients reproduce the counts") {
  CHECK(egf_check(CountKind::skew_clans, 0));
  CHECK(egf_check(CountKind::skew_clans, 7));
  CHECK(egf_check(CountKind::big_sect, 7));
  CHECK(egf_check(CountKind::skew_clans, 20));
  CHECK(egf_check(CountKind::big_sect, 20));
  CHECK_THROWS_AS(egf_check(CountKind::skew_clans, 31), BoundExceeded);
}

TEST_CASE("series multiplication is exact") {
  PowerSeries a = PowerSeries::exp_monomial(1, 1, 10);   // e^x
  PowerSeries b = PowerSeries::exp_monomial(-1, 1, 10);  // e^-x
  PowerSeries product = a * b;
  CHECK(product.coeff(0) == 1);
  for (int k = 1; k <= 10; ++k) CHECK(product.coeff(k) == 0);
}
