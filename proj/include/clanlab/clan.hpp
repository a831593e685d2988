#pragma once

#include <algorithm>
#include <cctype>
#include <compare>
#include <map>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clanlab/errors.hpp"

namespace clanlab {

enum class Sign { plus, minus };

inline Sign opposite(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }
inline char sign_char(Sign s) { return s == Sign::plus ? '+' : '-'; }

/// One clan symbol: '+', '-', or one half of a matched natural-number pair.
class Symbol {
 public:
  static Symbol plus() { return Symbol(0); }
  static Symbol minus() { return Symbol(-1); }
  static Symbol nat(int id) {
    if (id < 1) throw MalformedSymbol("nat ids are positive");
    return Symbol(id);
  }

  bool is_plus() const { return code_ == 0; }
  bool is_minus() const { return code_ == -1; }
  bool is_sign() const { return code_ <= 0; }
  bool is_nat() const { return code_ >= 1; }

  int nat_id() const { return code_; }
  Sign sign() const { return is_plus() ? Sign::plus : Sign::minus; }

  Symbol negated() const {
    if (is_plus()) return minus();
    if (is_minus()) return plus();
    return *this;
  }

  std::string str() const {
    if (is_plus()) return "+";
    if (is_minus()) return "-";
    return std::to_string(code_);
  }

  auto operator<=>(const Symbol&) const = default;

 private:
  explicit Symbol(int code) : code_(code) {}
  int code_;  // 0 = '+', -1 = '-', >= 1 = pair id
};

inline Symbol sign_symbol(Sign s) { return s == Sign::plus ? Symbol::plus() : Symbol::minus(); }

/// A clan: a string of symbols from {+, -} and natural numbers where every
/// number that occurs does so exactly twice.  Two strings that match the same
/// positions describe the same clan, so construction renumbers the pair ids
/// as 1,2,3,... by first occurrence; equality is equality of that normal form.
class Clan {
 public:
  explicit Clan(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    canonicalize();
  }

  /// Accepts the compact one-character-per-symbol form (pair ids 1..9 only)
  /// or the whitespace-delimited token form.  Output of str() parses back.
  static Clan parse(std::string_view text) {
    std::vector<std::string> tokens;
    if (text.find_first_of(" \t\n\r") != std::string_view::npos) {
      std::istringstream in{std::string(text)};
      std::string tok;
      while (in >> tok) tokens.push_back(tok);
    } else {
      for (char c : text) tokens.emplace_back(1, c);
    }
    if (tokens.empty()) throw MalformedSymbol("empty clan text");
    std::vector<Symbol> symbols;
    symbols.reserve(tokens.size());
    for (const auto& tok : tokens) {
      if (tok == "+") {
        symbols.push_back(Symbol::plus());
      } else if (tok == "-") {
        symbols.push_back(Symbol::minus());
      } else if (!tok.empty() &&
                 std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); })) {
        long id = std::stol(tok);
        if (id < 1) throw MalformedSymbol("nat token must be >= 1: " + tok);
        symbols.push_back(Symbol::nat(static_cast<int>(id)));
      } else {
        throw MalformedSymbol("bad token: " + tok);
      }
    }
    return Clan(std::move(symbols));
  }

  int length() const { return static_cast<int>(symbols_.size()); }

  /// n for a clan of even length 2n.
  int half() const {
    if (length() % 2 != 0) throw OddLength();
    return length() / 2;
  }

  const std::vector<Symbol>& symbols() const { return symbols_; }

  /// 1-based position access.
  const Symbol& at(int i) const {
    if (i < 1 || i > length()) throw IndexOutOfRange("clan position " + std::to_string(i));
    return symbols_[static_cast<size_t>(i - 1)];
  }

  /// Matched positions (i, j), i < j, listed by pair id (= first occurrence).
  std::vector<std::pair<int, int>> pairs() const {
    std::vector<std::pair<int, int>> out;
    std::vector<int> first_seen;
    for (int i = 1; i <= length(); ++i) {
      const Symbol& s = at(i);
      if (!s.is_nat()) continue;
      int id = s.nat_id();
      if (id > static_cast<int>(first_seen.size())) {
        first_seen.push_back(i);
      } else {
        out.emplace_back(first_seen[static_cast<size_t>(id - 1)], i);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  int pair_count() const { return static_cast<int>(pairs().size()); }

  /// Position matched with i, or 0 when position i holds a sign.
  int partner(int i) const {
    const Symbol& s = at(i);
    if (!s.is_nat()) return 0;
    for (int j = 1; j <= length(); ++j)
      if (j != i && at(j) == s) return j;
    throw UnmatchedNat();  // unreachable on a constructed clan
  }

  bool all_signs() const {
    return std::all_of(symbols_.begin(), symbols_.end(), [](const Symbol& s) { return s.is_sign(); });
  }

  /// Canonical delimited text, e.g. "+ - 1 2 3 3 1 2 + -".
  std::string str() const {
    std::string out;
    for (int i = 0; i < length(); ++i) {
      if (i) out += ' ';
      out += symbols_[static_cast<size_t>(i)].str();
    }
    return out;
  }

  /// One character per symbol; only valid while every pair id is <= 9.
  std::string compact() const {
    std::string out;
    for (const Symbol& s : symbols_) {
      if (s.is_nat() && s.nat_id() > 9) throw MalformedSymbol("compact form needs pair ids <= 9");
      out += s.str();
    }
    return out;
  }

  auto operator<=>(const Clan&) const = default;

 private:
  void canonicalize() {
    std::map<int, int> seen_count;
    for (const Symbol& s : symbols_)
      if (s.is_nat()) ++seen_count[s.nat_id()];
    for (const auto& [id, count] : seen_count)
      if (count != 2) throw UnmatchedNat("pair id " + std::to_string(id) + " occurs " + std::to_string(count) + " times");
    std::map<int, int> rename;
    int next = 1;
    for (Symbol& s : symbols_) {
      if (!s.is_nat()) continue;
      auto [it, inserted] = rename.try_emplace(s.nat_id(), next);
      if (inserted) ++next;
      s = Symbol::nat(it->second);
    }
  }

  std::vector<Symbol> symbols_;
};

inline Clan reverse(const Clan& c) {
  std::vector<Symbol> s(c.symbols().rbegin(), c.symbols().rend());
  return Clan(std::move(s));
}

inline Clan negate(const Clan& c) {
  std::vector<Symbol> s;
  s.reserve(static_cast<size_t>(c.length()));
  for (const Symbol& x : c.symbols()) s.push_back(x.negated());
  return Clan(std::move(s));
}

/// A clan is skew-symmetric when it equals the negation of its reverse.
inline bool is_skew_symmetric(const Clan& c) {
  if (c.length() % 2 != 0) throw OddLength();
  return negate(reverse(c)) == c;
}

/// An involution of [size] with a sign attached to every fixed point.
struct SignedInvolution {
  int size = 0;
  std::vector<std::pair<int, int>> two_cycles;  // (a, b) with a < b, sorted by a
  std::map<int, Sign> signed_fixed_points;

  std::string str() const {
    std::string out;
    for (const auto& [a, b] : two_cycles)
      out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    for (const auto& [d, s] : signed_fixed_points)
      out += "(" + std::to_string(d) + sign_char(s) + ")";
    return out;
  }

  bool operator==(const SignedInvolution&) const = default;
};

inline SignedInvolution to_signed_involution(const Clan& c) {
  SignedInvolution inv;
  inv.size = c.length();
  inv.two_cycles = c.pairs();
  std::sort(inv.two_cycles.begin(), inv.two_cycles.end());
  for (int i = 1; i <= c.length(); ++i)
    if (c.at(i).is_sign()) inv.signed_fixed_points.emplace(i, c.at(i).sign());
  return inv;
}

inline Clan from_signed_involution(const SignedInvolution& inv) {
  std::vector<int> hits(static_cast<size_t>(inv.size) + 1, 0);
  auto touch = [&](int i) {
    if (i < 1 || i > inv.size) throw InvalidInvolution("index out of range: " + std::to_string(i));
    if (hits[static_cast<size_t>(i)]++) throw InvalidInvolution("index repeated: " + std::to_string(i));
  };
  std::vector<Symbol> symbols(static_cast<size_t>(inv.size), Symbol::plus());
  int next_id = 1;
  for (const auto& [a, b] : inv.two_cycles) {
    touch(a);
    touch(b);
    if (a == b) throw InvalidInvolution("degenerate two-cycle");
    symbols[static_cast<size_t>(a - 1)] = Symbol::nat(next_id);
    symbols[static_cast<size_t>(b - 1)] = Symbol::nat(next_id);
    ++next_id;
  }
  for (const auto& [d, s] : inv.signed_fixed_points) {
    touch(d);
    symbols[static_cast<size_t>(d - 1)] = sign_symbol(s);
  }
  for (int i = 1; i <= inv.size; ++i)
    if (!hits[static_cast<size_t>(i)]) throw InvalidInvolution("index missing: " + std::to_string(i));
  return Clan(std::move(symbols));
}

/// Per-position signature: sign symbols carry themselves, the first element
/// of each matched pair carries '-' and the second '+'.
struct DefaultSignature {
  Clan clan;
  std::vector<Sign> signature;  // signature[i-1] for position i
};

inline DefaultSignature default_signature(const Clan& c) {
  std::vector<Sign> sig(static_cast<size_t>(c.length()), Sign::plus);
  std::vector<bool> seen;
  for (int i = 1; i <= c.length(); ++i) {
    const Symbol& s = c.at(i);
    if (s.is_sign()) {
      sig[static_cast<size_t>(i - 1)] = s.sign();
    } else {
      int id = s.nat_id();
      if (id > static_cast<int>(seen.size())) seen.resize(static_cast<size_t>(id), false);
      sig[static_cast<size_t>(i - 1)] = seen[static_cast<size_t>(id - 1)] ? Sign::plus : Sign::minus;
      seen[static_cast<size_t>(id - 1)] = true;
    }
  }
  return DefaultSignature{c, std::move(sig)};
}

/// Replace every matched pair by its default signature; the result contains
/// only sign symbols and is fixed by this operation.
inline Clan base_clan(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("base clan requires a skew-symmetric clan");
  DefaultSignature d = default_signature(c);
  std::vector<Symbol> symbols;
  symbols.reserve(static_cast<size_t>(c.length()));
  for (Sign s : d.signature) symbols.push_back(sign_symbol(s));
  return Clan(std::move(symbols));
}

/// Involution in one-line form with sigma(2n+1-i) = 2n+1-sigma(i).
struct DefaultPermutation {
  std::vector<int> one_line;

  int size() const { return static_cast<int>(one_line.size()); }
  int operator()(int i) const {
    if (i < 1 || i > size()) throw IndexOutOfRange("permutation index " + std::to_string(i));
    return one_line[static_cast<size_t>(i - 1)];
  }

  bool is_involution() const {
    for (int i = 1; i <= size(); ++i)
      if ((*this)((*this)(i)) != i) return false;
    return true;
  }

  /// Membership in the signed-permutation (type C) Weyl group of S_{2n}.
  bool is_mirror_symmetric() const {
    int m = size();
    for (int i = 1; i <= m; ++i)
      if ((*this)(m + 1 - i) != m + 1 - (*this)(i)) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (int i = 0; i < size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(one_line[static_cast<size_t>(i)]);
    }
    return out;
  }

  bool operator==(const DefaultPermutation&) const = default;
};

/// sigma(i) = i when position i has default signature '+', sigma(i) = 2n+1-i
/// when it has '-'; determined by the first-half signatures.
inline DefaultPermutation default_permutation(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("default permutation requires a skew-symmetric clan");
  int n = c.half();
  int m = 2 * n;
  DefaultSignature d = default_signature(c);
  std::vector<int> sigma(static_cast<size_t>(m), 0);
  for (int i = 1; i <= n; ++i) {
    if (d.signature[static_cast<size_t>(i - 1)] == Sign::plus) {
      sigma[static_cast<size_t>(i - 1)] = i;
      sigma[static_cast<size_t>(m - i)] = m + 1 - i;
    } else {
      sigma[static_cast<size_t>(i - 1)] = m + 1 - i;
      sigma[static_cast<size_t>(m - i)] = i;
    }
  }
  return DefaultPermutation{std::move(sigma)};
}

/// Pairs of matched pairs that determine each other under skew-symmetry
/// (families, with both positions in the first half or straddling) and
/// self-mirrored pairs (i, 2n+1-i).
struct PairClassification {
  using Family = std::pair<std::pair<int, int>, std::pair<int, int>>;
  std::vector<Family> pi11_families;         // ((i,j),(2n+1-j,2n+1-i)), i<j<=n
  std::vector<Family> pi12_families;         // ((i,j),(2n+1-j,2n+1-i)), i<=n<j
  std::vector<std::pair<int, int>> pi2_pairs;  // (i, 2n+1-i)

  int family_count() const {
    return static_cast<int>(pi11_families.size() + pi12_families.size());
  }
  int total_pairs() const {
    return 2 * family_count() + static_cast<int>(pi2_pairs.size());
  }
};

inline PairClassification classify_pairs(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("pair classification requires a skew-symmetric clan");
  int n = c.half();
  int m = 2 * n;
  PairClassification out;
  std::vector<std::pair<int, int>> pairs = c.pairs();
  std::sort(pairs.begin(), pairs.end());
  auto mirror = [m](std::pair<int, int> p) {
    return std::pair<int, int>{m + 1 - p.second, m + 1 - p.first};
  };
  std::vector<std::pair<int, int>> consumed;
  for (const auto& p : pairs) {
    if (std::find(consumed.begin(), consumed.end(), p) != consumed.end()) continue;
    auto [i, j] = p;
    if (i + j == m + 1) {
      out.pi2_pairs.push_back(p);
      continue;
    }
    auto q = mirror(p);
    consumed.push_back(q);
    if (j <= n) {
      out.pi11_families.emplace_back(p, q);
    } else if (i > n) {
      out.pi11_families.emplace_back(q, p);
    } else {
      // straddling; list the half of the family with the smaller first index first
      if (p < q)
        out.pi12_families.emplace_back(p, q);
      else
        out.pi12_families.emplace_back(q, p);
    }
  }
  return out;
}

}  // namespace clanlab
