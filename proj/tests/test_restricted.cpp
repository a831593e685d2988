#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "clanlab/enumeration.hpp"
#include "clanlab/restricted_involutions.hpp"

using namespace clanlab;

TEST_CASE("signed permutation parsing and validation") {
  SignedPermutation s = SignedPermutation::parse("-1 3 2 -4");
  CHECK(s.size() == 4);
  CHECK(s(1) == -1);
  CHECK(s(-1) == 1);
  CHECK(s.str() == "-1 3 2 -4");
  CHECK_THROWS_AS(SignedPermutation::parse("1 1"), ParseError);
  CHECK_THROWS_AS(SignedPermutation::parse("1 3"), ParseError);
  CHECK_THROWS_AS(SignedPermutation::parse("1 x"), ParseError);
}

TEST_CASE("restricted involution predicate") {
  CHECK(is_restricted_involution(SignedPermutation::parse("-1 3 2 -4")));
  CHECK_FALSE(is_restricted_involution(SignedPermutation::parse("-2 -1")));  // the forbidden pattern
  CHECK_THROWS_AS(is_restricted_involution(SignedPermutation({1, 2, 3})), OddSize);

  // the three members on two letters
  int hits = 0;
  for (const char* text : {"1 2", "1 -2", "-1 2", "-1 -2", "2 1", "2 -1", "-2 1", "-2 -1"})
    if (is_restricted_involution(SignedPermutation::parse(text))) ++hits;
  CHECK(hits == 3);
}

TEST_CASE("worked correspondence") {
  CHECK(clan_to_restricted(Clan::parse("-11+")).str() == "-1 3 2 -4");
  CHECK(clan_to_restricted(Clan::parse("+-")).str() == "1 2");
  CHECK(clan_to_restricted(Clan::parse("-+")).str() == "-1 -2");
  CHECK(clan_to_restricted(Clan::parse("11")).str() == "2 1");
  CHECK(restricted_to_clan(SignedPermutation::parse("-1 3 2 -4")) == Clan::parse("-11+"));
  CHECK_THROWS_AS(restricted_to_clan(SignedPermutation::parse("-2 -1")), NotRestricted);
}

TEST_CASE("roundtrip over all clans") {
  for (int n = 1; n <= 5; ++n)
    for (const Clan& c : enumerate_skew_clans(n)) {
      SignedPermutation s = clan_to_restricted(c);
      CHECK(is_restricted_involution(s));
      CHECK(restricted_to_clan(s) == c);
    }
}

TEST_CASE("brute force agrees with the bijection image") {
  for (int n = 1; n <= 3; ++n) {
    std::vector<SignedPermutation> brute = enumerate_restricted(n);
    CHECK(Integer(brute.size()) == skew_clan_count(n));
    std::set<SignedPermutation> image;
    for (const Clan& c : enumerate_skew_clans(n)) image.insert(clan_to_restricted(c));
    CHECK(image == std::set<SignedPermutation>(brute.begin(), brute.end()));
    for (const SignedPermutation& s : brute)
      CHECK(clan_to_restricted(restricted_to_clan(s)) == s);
  }
  CHECK_THROWS_AS(enumerate_restricted(4), BoundExceeded);
}
