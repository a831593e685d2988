#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/enumeration.hpp"

using namespace clanlab;

namespace {

// Brute-force generator of every clan of the given length and any signature,
// independent of the library's constructive enumeration.  Each position is a
// sign or joins a pair with a later position.
void all_clans_rec(int length, std::vector<Symbol>& acc, std::vector<bool>& used, int next_id,
                   std::vector<Clan>& out) {
  int pos = 0;
  while (pos < length && used[static_cast<size_t>(pos)]) ++pos;
  if (pos == length) {
    out.emplace_back(acc);
    return;
  }
  used[static_cast<size_t>(pos)] = true;
  for (Symbol s : {Symbol::plus(), Symbol::minus()}) {
    acc[static_cast<size_t>(pos)] = s;
    all_clans_rec(length, acc, used, next_id, out);
  }
  for (int q = pos + 1; q < length; ++q) {
    if (used[static_cast<size_t>(q)]) continue;
    used[static_cast<size_t>(q)] = true;
    acc[static_cast<size_t>(pos)] = Symbol::nat(next_id);
    acc[static_cast<size_t>(q)] = Symbol::nat(next_id);
    all_clans_rec(length, acc, used, next_id + 1, out);
    used[static_cast<size_t>(q)] = false;
  }
  used[static_cast<size_t>(pos)] = false;
}

std::vector<Clan> all_clans_of_length(int length) {
  std::vector<Symbol> acc(static_cast<size_t>(length), Symbol::plus());
  std::vector<bool> used(static_cast<size_t>(length), false);
  std::vector<Clan> out;
  all_clans_rec(length, acc, used, 1, out);
  return out;
}

}  // namespace

TEST_CASE("parsing and canonical form") {
  CHECK(Clan::parse("+1212-").str() == "+ 1 2 1 2 -");
  CHECK(Clan::parse("2211").str() == "1 1 2 2");
  CHECK(Clan::parse("+ - 1 2 3 3 1 2 + -").compact() == "+-123312+-");
  CHECK(Clan::parse("212 1 212 1").str() == "1 2 1 2");  // delimited ids need not be small
  CHECK_THROWS_AS(Clan::parse("+1+2"), UnmatchedNat);
  CHECK_THROWS_AS(Clan::parse("111"), UnmatchedNat);
  CHECK_THROWS_AS(Clan::parse("x+"), MalformedSymbol);
  CHECK_THROWS_AS(Clan::parse("0 0"), MalformedSymbol);
  CHECK_THROWS_AS(Clan::parse(""), MalformedSymbol);
}

TEST_CASE("parse then print is idempotent") {
  for (const Clan& c : enumerate_skew_clans(3)) {
    CHECK(Clan::parse(c.str()) == c);
    CHECK(Clan::parse(c.compact()) == c);
  }
}

TEST_CASE("reverse and negate") {
  CHECK(reverse(Clan::parse("+-123312+-")) == Clan::parse("-+213321-+"));
  CHECK(negate(Clan::parse("++--")) == Clan::parse("--++"));
  CHECK(reverse(Clan::parse("11")) == Clan::parse("11"));
  for (const Clan& c : all_clans_of_length(4)) {
    CHECK(reverse(reverse(c)) == c);
    CHECK(negate(negate(c)) == c);
  }
}

TEST_CASE("skew symmetry") {
  CHECK(is_skew_symmetric(Clan::parse("+-123312+-")));
  CHECK(is_skew_symmetric(Clan::parse("1234545321")));
  CHECK(is_skew_symmetric(Clan::parse("+-+-")));
  CHECK_FALSE(is_skew_symmetric(Clan::parse("+--+")));
  CHECK_THROWS_AS(is_skew_symmetric(Clan::parse("+-+")), OddLength);
}

TEST_CASE("negate of reverse is an involution fixing exactly the skew-symmetric clans") {
  for (int length : {2, 4, 6}) {
    std::vector<Clan> skew;
    for (const Clan& c : all_clans_of_length(length)) {
      Clan image = negate(reverse(c));
      CHECK(negate(reverse(image)) == c);
      if (image == c) skew.push_back(c);
    }
    std::sort(skew.begin(), skew.end());
    std::vector<Clan> enumerated = enumerate_skew_clans(length / 2);
    std::sort(enumerated.begin(), enumerated.end());
    CHECK(skew == enumerated);
  }
}

TEST_CASE("signed involution correspondence") {
  SignedInvolution inv = to_signed_involution(Clan::parse("-122313+"));
  CHECK(inv.str() == "(2,6)(3,4)(5,7)(1-)(8+)");
  CHECK(to_signed_involution(Clan::parse("1234545321")).str() == "(1,10)(2,9)(3,8)(4,6)(5,7)");
  CHECK(to_signed_involution(Clan::parse("+-")).str() == "(1+)(2-)");

  for (const Clan& c : enumerate_skew_clans(5))
    CHECK(from_signed_involution(to_signed_involution(c)) == c);

  SignedInvolution bad;
  bad.size = 2;
  bad.two_cycles = {{1, 2}};
  bad.signed_fixed_points = {{1, Sign::plus}};
  CHECK_THROWS_AS(from_signed_involution(bad), InvalidInvolution);
}

TEST_CASE("base clan") {
  CHECK(base_clan(Clan::parse("+1212-")) == Clan::parse("+--++-"));
  CHECK(base_clan(Clan::parse("--++")) == Clan::parse("--++"));
  CHECK(base_clan(Clan::parse("1-+1")) == Clan::parse("--++"));
  for (const Clan& c : enumerate_skew_clans(4)) {
    Clan b = base_clan(c);
    CHECK(b.all_signs());
    CHECK(is_skew_symmetric(b));
    CHECK(base_clan(b) == b);
  }
}

TEST_CASE("default permutation") {
  CHECK(default_permutation(Clan::parse("+1212-")).str() == "1 5 4 3 2 6");
  CHECK(default_permutation(Clan::parse("++--")).str() == "1 2 3 4");
  CHECK(default_permutation(Clan::parse("--++")).str() == "4 3 2 1");
  for (const Clan& c : enumerate_skew_clans(4)) {
    DefaultPermutation sigma = default_permutation(c);
    CHECK(sigma.is_involution());
    CHECK(sigma.is_mirror_symmetric());
  }
}

TEST_CASE("pair classification") {
  Clan c = Clan::parse("1+134-55+342-2");
  PairClassification pc = classify_pairs(c);
  REQUIRE(pc.pi11_families.size() == 1);
  CHECK(pc.pi11_families[0] == PairClassification::Family{{1, 3}, {12, 14}});
  REQUIRE(pc.pi12_families.size() == 1);
  CHECK(pc.pi12_families[0] == PairClassification::Family{{4, 10}, {5, 11}});
  REQUIRE(pc.pi2_pairs.size() == 1);
  CHECK(pc.pi2_pairs[0] == std::pair<int, int>{7, 8});

  PairClassification squares = classify_pairs(Clan::parse("1221"));
  CHECK(squares.pi2_pairs == std::vector<std::pair<int, int>>{{1, 4}, {2, 3}});
  CHECK(squares.family_count() == 0);

  PairClassification empty = classify_pairs(Clan::parse("++--"));
  CHECK(empty.total_pairs() == 0);
}

TEST_CASE("pair classification partitions the matched pairs") {
  for (const Clan& c : enumerate_skew_clans(4)) {
    PairClassification pc = classify_pairs(c);
    CHECK(pc.total_pairs() == c.pair_count());
    std::set<std::pair<int, int>> covered;
    for (const auto& fam : pc.pi11_families) {
      covered.insert(fam.first);
      covered.insert(fam.second);
    }
    for (const auto& fam : pc.pi12_families) {
      covered.insert(fam.first);
      covered.insert(fam.second);
    }
    for (const auto& p : pc.pi2_pairs) covered.insert(p);
    std::vector<std::pair<int, int>> pairs = c.pairs();
    CHECK(covered == std::set<std::pair<int, int>>(pairs.begin(), pairs.end()));
    int n = c.half();
    int m = 2 * n;
    for (const auto& [a, b] : pc.pi2_pairs) CHECK(a + b == m + 1);
    for (const auto& fam : pc.pi11_families) {
      CHECK(fam.first.second <= n);
      CHECK(fam.second.first > n);
    }
    for (const auto& fam : pc.pi12_families) {
      CHECK(fam.first.first <= n);
      CHECK(fam.first.second > n);
      CHECK(fam.first.second != m + 1 - fam.first.first);
    }
  }
}

TEST_CASE("base clan agrees with the default signature") {
  for (const Clan& c : enumerate_skew_clans(4)) {
    DefaultSignature d = default_signature(c);
    std::vector<Symbol> symbols;
    for (Sign s : d.signature) symbols.push_back(sign_symbol(s));
    CHECK(base_clan(c) == Clan(std::move(symbols)));
  }
}
