#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/errors.hpp"
#include "clanlab/rational.hpp"
#include "clanlab/series.hpp"

namespace clanlab {

// Full generation of the 26253 clans at n = 7 takes well under a second;
// the cap exists so a typo'd n cannot wedge a test run.
inline constexpr int kDefaultEnumerationLimit = 7;

/// Number of ways k marked first-half slots can carry the pair structure:
/// split the slots into self-mirrored pairs and two-slot families, with two
/// orientations per family.  Closed form: sum over b of C(k,2b) (2b)!/b!.
inline Integer slot_pairing_count(int k) {
  Integer total = 0;
  for (int b = 0; 2 * b <= k; ++b)
    total += binomial(k, 2 * b) * factorial(2 * b) / factorial(b);
  return total;
}

/// Same quantity by the recurrence a_k = a_{k-1} + 2(k-1) a_{k-2}.
inline Integer slot_pairing_count_recurrence(int k) {
  Integer prev2 = 1, prev1 = 1;  // a_0, a_1
  if (k == 0) return prev2;
  for (int i = 2; i <= k; ++i) {
    Integer cur = prev1 + 2 * (i - 1) * prev2;
    prev2 = std::exchange(prev1, cur);
  }
  return prev1;
}

/// Number of skew-symmetric (n,n)-clans with exactly k matched pairs:
/// 2^(n-k) C(n,k) a_k.
inline Integer skew_clan_count_by_pairs(int k, int n) {
  if (k < 0 || k > n) throw IndexOutOfRange("pair count out of range");
  return integer_pow(2, n - k) * binomial(n, k) * slot_pairing_count(k);
}

/// Z_n as the sum of the per-pair-count formula.
inline Integer skew_clan_count(int n) {
  Integer total = 0;
  for (int k = 0; k <= n; ++k) total += skew_clan_count_by_pairs(k, n);
  return total;
}

/// Z_n by the recurrence Z_n = 3 Z_{n-1} + 2(n-1) Z_{n-2}, Z_0 = 1, Z_1 = 3.
inline Integer skew_clan_count_recurrence(int n) {
  Integer prev2 = 1, prev1 = 3;
  if (n == 0) return prev2;
  for (int i = 2; i <= n; ++i) {
    Integer cur = 3 * prev1 + 2 * (i - 1) * prev2;
    prev2 = std::exchange(prev1, cur);
  }
  return prev1;
}

struct CountTable {
  int n = 0;
  std::vector<Integer> by_pairs;  // by_pairs[k] = count of clans with k pairs
  Integer total = 0;
};

inline CountTable count_table(int n) {
  CountTable t;
  t.n = n;
  for (int k = 0; k <= n; ++k) {
    t.by_pairs.push_back(skew_clan_count_by_pairs(k, n));
    t.total += t.by_pairs.back();
  }
  return t;
}

namespace detail {

enum class FamilyKind { same_half, straddling };

struct Placement {
  std::vector<int> singletons;                                    // self-mirrored pair starts
  std::vector<std::pair<std::pair<int, int>, FamilyKind>> families;  // slot pairs + orientation
};

template <class Fn>
void for_each_matching(std::vector<int>& slots, Placement& acc, Fn&& emit) {
  if (slots.empty()) {
    emit(acc);
    return;
  }
  int u = slots.front();
  std::vector<int> rest(slots.begin() + 1, slots.end());

  acc.singletons.push_back(u);
  for_each_matching(rest, acc, emit);
  acc.singletons.pop_back();

  for (size_t idx = 0; idx < rest.size(); ++idx) {
    std::vector<int> remaining;
    for (size_t t = 0; t < rest.size(); ++t)
      if (t != idx) remaining.push_back(rest[t]);
    for (FamilyKind kind : {FamilyKind::same_half, FamilyKind::straddling}) {
      acc.families.push_back({{u, rest[idx]}, kind});
      for_each_matching(remaining, acc, emit);
      acc.families.pop_back();
    }
  }
}

inline Clan clan_from_placement(int n, const Placement& placement, unsigned sign_bits,
                                const std::vector<int>& sign_slots) {
  int m = 2 * n;
  std::vector<Symbol> symbols(static_cast<size_t>(m), Symbol::plus());
  int next_id = 1;
  auto set_pair = [&](int a, int b) {
    symbols[static_cast<size_t>(a - 1)] = Symbol::nat(next_id);
    symbols[static_cast<size_t>(b - 1)] = Symbol::nat(next_id);
    ++next_id;
  };
  for (int s : placement.singletons) set_pair(s, m + 1 - s);
  for (const auto& [slots, kind] : placement.families) {
    auto [u, v] = slots;
    if (kind == FamilyKind::same_half) {
      set_pair(u, v);
      set_pair(m + 1 - v, m + 1 - u);
    } else {
      set_pair(u, m + 1 - v);
      set_pair(v, m + 1 - u);
    }
  }
  for (size_t b = 0; b < sign_slots.size(); ++b) {
    int w = sign_slots[b];
    Sign s = (sign_bits >> b) & 1u ? Sign::plus : Sign::minus;
    symbols[static_cast<size_t>(w - 1)] = sign_symbol(s);
    symbols[static_cast<size_t>(m - w)] = sign_symbol(opposite(s));
  }
  return Clan(std::move(symbols));
}

}  // namespace detail

/// All skew-symmetric (n,n)-clans in canonical form, sorted by text.
/// Generation follows the counting argument: choose the first-half slots
/// that hold pair symbols, match them into self-mirrored pairs and oriented
/// families, fill the rest with signs, and mirror.
inline std::vector<Clan> enumerate_skew_clans(int n, int limit = kDefaultEnumerationLimit) {
  if (n < 1) throw IndexOutOfRange("n must be >= 1");
  if (n > limit) throw BoundExceeded("n = " + std::to_string(n) + " exceeds enumeration limit " + std::to_string(limit));
  std::vector<Clan> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> slots, sign_slots;
    for (int i = 1; i <= n; ++i)
      ((mask >> (i - 1)) & 1u ? slots : sign_slots).push_back(i);
    detail::Placement acc;
    detail::for_each_matching(slots, acc, [&](const detail::Placement& placement) {
      for (unsigned bits = 0; bits < (1u << sign_slots.size()); ++bits)
        out.push_back(detail::clan_from_placement(n, placement, bits, sign_slots));
    });
  }
  std::sort(out.begin(), out.end(),
            [](const Clan& a, const Clan& b) { return a.str() < b.str(); });
  return out;
}

/// All skew-symmetric clans whose base clan is the given all-sign clan.
inline std::vector<Clan> enumerate_sect(const Clan& base, int limit = kDefaultEnumerationLimit) {
  if (!base.all_signs() || !is_skew_symmetric(base)) throw NotABaseClan(base.str());
  int n = base.half();
  std::vector<Clan> out;
  for (const Clan& c : enumerate_skew_clans(n, limit))
    if (base_clan(c) == base) out.push_back(c);
  return out;
}

/// The base clan of the big sect: n '-' symbols then n '+' symbols.
inline Clan big_sect_base(int n) {
  std::vector<Symbol> symbols;
  for (int i = 0; i < n; ++i) symbols.push_back(Symbol::minus());
  for (int i = 0; i < n; ++i) symbols.push_back(Symbol::plus());
  return Clan(std::move(symbols));
}

inline std::vector<Clan> big_sect(int n, int limit = kDefaultEnumerationLimit) {
  return enumerate_sect(big_sect_base(n), limit);
}

/// Number of clans in the big sect: sum over (families, self-mirrored pairs).
inline Integer big_sect_count(int n) {
  Integer total = 0;
  for (int beta = 0; beta <= n; ++beta)
    for (int alpha = 0; beta + 2 * alpha <= n; ++alpha)
      total += binomial(n, beta) * binomial(n - beta, 2 * alpha) * factorial(2 * alpha) /
               (integer_pow(2, alpha) * factorial(alpha));
  return total;
}

/// Same count by the recurrence e_n = 2 e_{n-1} + (n-1) e_{n-2}, e_0 = 1.
inline Integer big_sect_count_recurrence(int n) {
  Integer prev2 = 1, prev1 = 2;  // e_0, e_1
  if (n == 0) return prev2;
  for (int i = 2; i <= n; ++i) {
    Integer cur = 2 * prev1 + (i - 1) * prev2;
    prev2 = std::exchange(prev1, cur);
  }
  return prev1;
}

enum class CountKind { skew_clans, big_sect };

/// Checks n! [x^n] of the generating function against the recurrence counts
/// for every n <= max_n.  The series are exp(3x) exp(x^2) for the full clan
/// count and exp(2x) exp(x^2/2) for the big sect, multiplied exactly.
inline bool egf_check(CountKind kind, int max_n) {
  if (max_n > 30) throw BoundExceeded("egf check capped at order 30");
  PowerSeries series = kind == CountKind::skew_clans
                           ? PowerSeries::exp_monomial(3, 1, max_n) * PowerSeries::exp_monomial(1, 2, max_n)
                           : PowerSeries::exp_monomial(2, 1, max_n) *
                                 PowerSeries::exp_monomial(Rational(1) / 2, 2, max_n);
  for (int n = 0; n <= max_n; ++n) {
    Rational lhs = series.coeff(n) * factorial(n);
    Integer want = kind == CountKind::skew_clans ? skew_clan_count_recurrence(n)
                                                 : big_sect_count_recurrence(n);
    if (lhs != Rational(want)) return false;
  }
  return true;
}

}  // namespace clanlab
