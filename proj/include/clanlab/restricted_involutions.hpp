#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/errors.hpp"

namespace clanlab {

/// Signed permutation on m letters in one-line form; entry values are
/// +-1..+-m and their absolute values are a permutation of [m].
struct SignedPermutation {
  std::vector<int> entries;

  explicit SignedPermutation(std::vector<int> e) : entries(std::move(e)) {
    std::vector<bool> seen(entries.size() + 1, false);
    for (int v : entries) {
      int a = std::abs(v);
      if (a < 1 || a > size() || seen[static_cast<size_t>(a)])
        throw ParseError("not a signed permutation");
      seen[static_cast<size_t>(a)] = true;
    }
  }

  int size() const { return static_cast<int>(entries.size()); }

  /// Signed image: s(-i) = -s(i).
  int operator()(int i) const {
    if (i == 0 || std::abs(i) > size()) throw IndexOutOfRange("letter " + std::to_string(i));
    int v = entries[static_cast<size_t>(std::abs(i) - 1)];
    return i > 0 ? v : -v;
  }

  static SignedPermutation parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::vector<int> e;
    int v;
    while (in >> v) e.push_back(v);
    if (!in.eof()) throw ParseError("bad signed permutation text");
    return SignedPermutation(std::move(e));
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(entries[static_cast<size_t>(i)]);
    }
    return out;
  }

  auto operator<=>(const SignedPermutation&) const = default;
};

/// Order <= 2 as a signed map, with every 2-cycle joining two barred or two
/// unbarred letters.
inline bool is_signed_involution(const SignedPermutation& s) {
  for (int i = 1; i <= s.size(); ++i)
    if (s(s(i)) != i) return false;
  for (int i = 1; i <= s.size(); ++i) {
    int v = s(i);
    int j = std::abs(v);
    if (j != i && (v > 0) != (s(j) > 0)) return false;  // mixed 2-cycle
  }
  return true;
}

/// A restricted involution on 2n letters: a signed involution equal to its
/// reverse complement which avoids the pattern "both barred, descending".
inline bool is_restricted_involution(const SignedPermutation& s) {
  int m = s.size();
  if (m % 2 != 0) throw OddSize();
  if (!is_signed_involution(s)) return false;
  // complement keeps the bar and complements the letter on m = 2n symbols
  auto complement = [m](int x) { return x > 0 ? m + 1 - x : -(m + 1 - std::abs(x)); };
  for (int i = 1; i <= m; ++i)
    if (s(i) != complement(s(m + 1 - i))) return false;
  for (int i = 1; i <= m; ++i) {
    if (s(i) >= 0) continue;
    for (int j = i + 1; j <= m; ++j)
      if (s(j) < 0 && std::abs(s(i)) > std::abs(s(j))) return false;
  }
  return true;
}

/// Bar every letter at a '-' position of the first half (or '+' position of
/// the second half) of the underlying involution of the clan.
inline SignedPermutation clan_to_restricted(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("clan to restricted involution requires a skew-symmetric clan");
  int n = c.half();
  int m = 2 * n;
  std::vector<int> entries(static_cast<size_t>(m), 0);
  for (const auto& [i, j] : c.pairs()) {
    entries[static_cast<size_t>(i - 1)] = j;
    entries[static_cast<size_t>(j - 1)] = i;
  }
  for (int i = 1; i <= m; ++i) {
    if (!c.at(i).is_sign()) continue;
    bool barred = (i <= n) == c.at(i).is_minus();
    entries[static_cast<size_t>(i - 1)] = barred ? -i : i;
  }
  return SignedPermutation(std::move(entries));
}

inline Clan restricted_to_clan(const SignedPermutation& s) {
  if (!is_restricted_involution(s)) throw NotRestricted(s.str());
  int m = s.size();
  int n = m / 2;
  std::vector<Symbol> symbols(static_cast<size_t>(m), Symbol::plus());
  int next_id = 1;
  for (int i = 1; i <= m; ++i) {
    int v = s(i);
    if (v == i) {
      symbols[static_cast<size_t>(i - 1)] = i <= n ? Symbol::plus() : Symbol::minus();
    } else if (v == -i) {
      symbols[static_cast<size_t>(i - 1)] = i <= n ? Symbol::minus() : Symbol::plus();
    } else if (v > i) {
      symbols[static_cast<size_t>(i - 1)] = Symbol::nat(next_id);
      symbols[static_cast<size_t>(v - 1)] = Symbol::nat(next_id);
      ++next_id;
    }
  }
  return Clan(std::move(symbols));
}

/// Brute force over all signed permutations on 2n letters.
inline std::vector<SignedPermutation> enumerate_restricted(int n, int limit = 3) {
  if (n < 1) throw IndexOutOfRange("n must be >= 1");
  if (n > limit) throw BoundExceeded("restricted-involution brute force capped at n = " + std::to_string(limit));
  int m = 2 * n;
  std::vector<int> base(static_cast<size_t>(m));
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
      std::vector<int> entries = base;
      for (int b = 0; b < m; ++b)
        if ((mask >> b) & 1u) entries[static_cast<size_t>(b)] *= -1;
      SignedPermutation s(std::move(entries));
      if (is_restricted_involution(s)) out.push_back(std::move(s));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clanlab
