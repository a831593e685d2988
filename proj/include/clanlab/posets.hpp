#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/enumeration.hpp"
#include "clanlab/errors.hpp"
#include "clanlab/partial_involutions.hpp"

namespace clanlab {

/// Number of '+' symbols plus completed matched pairs among c_1..c_i.
inline int prefix_plus(const Clan& c, int i) {
  if (i < 1 || i > c.length()) throw IndexOutOfRange("prefix length " + std::to_string(i));
  int count = 0;
  for (int s = 1; s <= i; ++s)
    if (c.at(s).is_plus()) ++count;
  for (const auto& [s, t] : c.pairs())
    if (t <= i) ++count;
  return count;
}

/// Number of '-' symbols plus completed matched pairs among c_1..c_i.
inline int prefix_minus(const Clan& c, int i) {
  if (i < 1 || i > c.length()) throw IndexOutOfRange("prefix length " + std::to_string(i));
  int count = 0;
  for (int s = 1; s <= i; ++s)
    if (c.at(s).is_minus()) ++count;
  for (const auto& [s, t] : c.pairs())
    if (t <= i) ++count;
  return count;
}

/// Number of matched pairs (s, t) with s <= i < j < t.
inline int crossing_pairs(const Clan& c, int i, int j) {
  if (i < 1 || j <= i || j > c.length()) throw IndexOutOfRange("prefix pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
  int count = 0;
  for (const auto& [s, t] : c.pairs())
    if (s <= i && j < t) ++count;
  return count;
}

/// Prefix tables for the order comparisons, cached once per clan so that
/// pairwise sweeps over full clan sets stay cheap.
struct OrderStats {
  int length = 0;
  std::vector<int> plus;                 // plus[i-1]  = prefix_plus(c, i)
  std::vector<int> minus;                // minus[i-1] = prefix_minus(c, i)
  std::vector<std::vector<int>> cross;   // cross[i-1][j-1] = crossing_pairs(c, i, j), j > i

  static OrderStats of(const Clan& c) {
    OrderStats st;
    st.length = c.length();
    st.plus.resize(static_cast<size_t>(st.length));
    st.minus.resize(static_cast<size_t>(st.length));
    int plus_run = 0, minus_run = 0, completed = 0;
    std::vector<std::pair<int, int>> pairs = c.pairs();
    std::vector<int> closes_at(static_cast<size_t>(st.length) + 1, 0);
    for (const auto& [s, t] : pairs) closes_at[static_cast<size_t>(t)] = 1;
    for (int i = 1; i <= st.length; ++i) {
      if (c.at(i).is_plus()) ++plus_run;
      if (c.at(i).is_minus()) ++minus_run;
      completed += closes_at[static_cast<size_t>(i)];
      st.plus[static_cast<size_t>(i - 1)] = plus_run + completed;
      st.minus[static_cast<size_t>(i - 1)] = minus_run + completed;
    }
    st.cross.assign(static_cast<size_t>(st.length), std::vector<int>(static_cast<size_t>(st.length), 0));
    for (const auto& [s, t] : pairs)
      for (int i = s; i <= st.length; ++i)
        for (int j = i + 1; j < t; ++j) ++st.cross[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
    return st;
  }
};

/// The closure order via the statistic inequalities: a <= b iff the prefix
/// plus and minus counts of a dominate those of b and the crossing counts of
/// a are dominated by those of b, at every index.
inline bool bruhat_leq(const OrderStats& a, const OrderStats& b) {
  if (a.length != b.length) throw SizeMismatch("comparing clans of different length");
  for (int i = 0; i < a.length; ++i) {
    if (a.plus[static_cast<size_t>(i)] < b.plus[static_cast<size_t>(i)]) return false;
    if (a.minus[static_cast<size_t>(i)] < b.minus[static_cast<size_t>(i)]) return false;
  }
  for (int i = 0; i < a.length; ++i)
    for (int j = i + 1; j < a.length; ++j)
      if (a.cross[static_cast<size_t>(i)][static_cast<size_t>(j)] > b.cross[static_cast<size_t>(i)][static_cast<size_t>(j)])
        return false;
  return true;
}

inline bool bruhat_leq(const Clan& a, const Clan& b) {
  return bruhat_leq(OrderStats::of(a), OrderStats::of(b));
}

namespace detail {

// Row-major bitset relation over element indices.
class Relation {
 public:
  explicit Relation(int n) : n_(n), words_((static_cast<size_t>(n) + 63) / 64),
                             bits_(static_cast<size_t>(n) * words_, 0) {}

  void set(int i, int j) { row(i)[static_cast<size_t>(j) / 64] |= 1ull << (j % 64); }
  bool get(int i, int j) const { return (row(i)[static_cast<size_t>(j) / 64] >> (j % 64)) & 1ull; }

  // true when row i contains row j (as sets)
  bool row_contains(int i, int j) const {
    const uint64_t* a = row(i);
    const uint64_t* b = row(j);
    for (size_t w = 0; w < words_; ++w)
      if ((b[w] & ~a[w]) != 0) return false;
    return true;
  }

  int size() const { return n_; }

  friend bool rows_intersect(const Relation& a, int i, const Relation& b, int j) {
    const uint64_t* ra = a.row(i);
    const uint64_t* rb = b.row(j);
    for (size_t w = 0; w < a.words_; ++w)
      if (ra[w] & rb[w]) return true;
    return false;
  }

 private:
  uint64_t* row(int i) { return bits_.data() + static_cast<size_t>(i) * words_; }
  const uint64_t* row(int i) const { return bits_.data() + static_cast<size_t>(i) * words_; }

  int n_;
  size_t words_;
  std::vector<uint64_t> bits_;
};

}  // namespace detail

/// A finite poset as labelled elements plus the cover relation
/// (transitive reduction), covers stored as (lower index, upper index).
struct Poset {
  std::vector<std::string> elements;
  std::vector<std::pair<int, int>> covers;  // 0-based indices into elements

  std::vector<int> minimal_elements() const {
    std::vector<bool> has_lower(elements.size(), false);
    for (const auto& [lo, hi] : covers) has_lower[static_cast<size_t>(hi)] = true;
    std::vector<int> out;
    for (size_t i = 0; i < elements.size(); ++i)
      if (!has_lower[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  std::vector<int> maximal_elements() const {
    std::vector<bool> has_upper(elements.size(), false);
    for (const auto& [lo, hi] : covers) has_upper[static_cast<size_t>(lo)] = true;
    std::vector<int> out;
    for (size_t i = 0; i < elements.size(); ++i)
      if (!has_upper[i]) out.push_back(static_cast<int>(i));
    return out;
  }

  bool has_cover(const std::string& lower, const std::string& upper) const {
    for (const auto& [lo, hi] : covers)
      if (elements[static_cast<size_t>(lo)] == lower && elements[static_cast<size_t>(hi)] == upper) return true;
    return false;
  }
};

/// Builds the Hasse diagram of a partial order given by a comparator over
/// element indices: computes the full relation, rejects a-sym violations,
/// and keeps exactly the covers (strict relations with no element between).
inline Poset hasse(std::vector<std::string> labels, const std::function<bool(int, int)>& leq) {
  int n = static_cast<int>(labels.size());
  detail::Relation strictly_below(n);  // strictly_below[i] = set of j with j < i
  detail::Relation strictly_above(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (leq(j, i)) {
        if (leq(i, j)) throw NotAntisymmetric(labels[static_cast<size_t>(i)] + " and " + labels[static_cast<size_t>(j)]);
        strictly_below.set(i, j);
        strictly_above.set(j, i);
      }
    }
  Poset p;
  p.elements = std::move(labels);
  for (int upper = 0; upper < n; ++upper)
    for (int lower = 0; lower < n; ++lower) {
      if (!strictly_below.get(upper, lower)) continue;
      // cover iff no c with lower < c < upper
      if (!rows_intersect(strictly_above, lower, strictly_below, upper))
        p.covers.emplace_back(lower, upper);
    }
  std::sort(p.covers.begin(), p.covers.end());
  return p;
}

/// Hasse diagram of a clan set under the closure order; elements are the
/// canonical clan texts in lexicographic order.
inline Poset hasse_of_clans(std::vector<Clan> clans) {
  std::sort(clans.begin(), clans.end(), [](const Clan& a, const Clan& b) { return a.str() < b.str(); });
  std::vector<OrderStats> stats;
  stats.reserve(clans.size());
  std::vector<std::string> labels;
  labels.reserve(clans.size());
  for (const Clan& c : clans) {
    stats.push_back(OrderStats::of(c));
    labels.push_back(c.str());
  }
  return hasse(std::move(labels), [&stats](int i, int j) {
    return bruhat_leq(stats[static_cast<size_t>(i)], stats[static_cast<size_t>(j)]);
  });
}

/// Deterministic DOT output: one node per element, one edge lower -> upper
/// per cover.
inline std::string to_dot(const Poset& p, const std::string& graph_name = "poset") {
  std::string out = "digraph \"" + graph_name + "\" {\n";
  out += "  rankdir=BT;\n";
  for (size_t i = 0; i < p.elements.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + p.elements[i] + "\"];\n";
  for (const auto& [lo, hi] : p.covers)
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

/// Matrix of ranks of all upper-left submatrices of a 0/1 matrix.
struct RankControlMatrix {
  std::vector<std::vector<int>> entries;

  int at(int k, int l) const { return entries[static_cast<size_t>(k - 1)][static_cast<size_t>(l - 1)]; }
  bool operator==(const RankControlMatrix&) const = default;
};

namespace detail {

// Rank of an integer matrix by fraction-free elimination.
inline int integer_rank(std::vector<std::vector<long long>> m) {
  size_t rows = m.size();
  size_t cols = rows == 0 ? 0 : m[0].size();
  int rank = 0;
  size_t pivot_row = 0;
  for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
    size_t sel = pivot_row;
    while (sel < rows && m[sel][col] == 0) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[pivot_row]);
    for (size_t r = pivot_row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      long long a = m[pivot_row][col];
      long long b = m[r][col];
      for (size_t c2 = col; c2 < cols; ++c2) m[r][c2] = m[r][c2] * a - m[pivot_row][c2] * b;
    }
    ++pivot_row;
    ++rank;
  }
  return rank;
}

}  // namespace detail

inline RankControlMatrix rank_control(const std::vector<std::vector<int>>& matrix) {
  RankControlMatrix rc;
  size_t rows = matrix.size();
  size_t cols = rows == 0 ? 0 : matrix[0].size();
  rc.entries.assign(rows, std::vector<int>(cols, 0));
  for (size_t k = 1; k <= rows; ++k)
    for (size_t l = 1; l <= cols; ++l) {
      std::vector<std::vector<long long>> sub(k, std::vector<long long>(l, 0));
      for (size_t i = 0; i < k; ++i)
        for (size_t j = 0; j < l; ++j) sub[i][j] = matrix[i][j];
      rc.entries[k - 1][l - 1] = detail::integer_rank(std::move(sub));
    }
  return rc;
}

inline RankControlMatrix rank_control(const PartialInvolution& p) { return rank_control(p.rows()); }

/// Entrywise comparison of rank-control matrices: the closure order on
/// congruence orbits.
inline bool rank_leq(const PartialInvolution& p, const PartialInvolution& q) {
  if (p.size() != q.size()) throw SizeMismatch("comparing partial involutions of different size");
  RankControlMatrix a = rank_control(p);
  RankControlMatrix b = rank_control(q);
  for (int k = 1; k <= p.size(); ++k)
    for (int l = 1; l <= p.size(); ++l)
      if (a.at(k, l) > b.at(k, l)) return false;
  return true;
}

struct IsomorphismReport {
  int n = 0;
  int element_count = 0;
  long long pairs_checked = 0;
  std::vector<std::pair<std::string, std::string>> counterexamples;
  bool ok = false;
};

/// Compares the closure order on the big sect with the rank-control order
/// on the matched partial involutions, over every ordered pair.
inline IsomorphismReport verify_order_isomorphism(int n) {
  if (n > 5) throw BoundExceeded("order isomorphism check capped at n = 5");
  IsomorphismReport report;
  report.n = n;
  std::vector<Clan> sect = big_sect(n);
  report.element_count = static_cast<int>(sect.size());
  std::vector<OrderStats> stats;
  std::vector<RankControlMatrix> controls;
  for (const Clan& c : sect) {
    stats.push_back(OrderStats::of(c));
    controls.push_back(rank_control(clan_to_partial_involution(c)));
  }
  auto control_leq = [&](const RankControlMatrix& a, const RankControlMatrix& b) {
    for (int k = 1; k <= n; ++k)
      for (int l = 1; l <= n; ++l)
        if (a.at(k, l) > b.at(k, l)) return false;
    return true;
  };
  for (size_t i = 0; i < sect.size(); ++i)
    for (size_t j = 0; j < sect.size(); ++j) {
      ++report.pairs_checked;
      if (bruhat_leq(stats[i], stats[j]) != control_leq(controls[i], controls[j]))
        report.counterexamples.emplace_back(sect[i].str(), sect[j].str());
    }
  report.ok = report.counterexamples.empty();
  return report;
}

struct IdealReport {
  int n = 0;
  bool upward_closed = false;
  bool base_is_minimum = false;
  bool dense_is_maximum = false;   // maximum of the sect and of the whole clan set
  std::string minimum;
  std::string maximum;
  bool ok = false;
};

/// Checks that the big sect is an upper order ideal of the whole clan poset,
/// with the base clan at the bottom and the nested all-pair clan on top.
inline IdealReport verify_big_sect_ideal(int n) {
  if (n > 5) throw BoundExceeded("ideal check capped at n = 5");
  IdealReport report;
  report.n = n;

  std::vector<Clan> all = enumerate_skew_clans(n);
  std::vector<Clan> sect = big_sect(n);
  std::vector<OrderStats> all_stats, sect_stats;
  for (const Clan& c : all) all_stats.push_back(OrderStats::of(c));
  for (const Clan& c : sect) sect_stats.push_back(OrderStats::of(c));
  Clan base = big_sect_base(n);
  std::vector<bool> in_sect;
  for (const Clan& c : all) in_sect.push_back(base_clan(c) == base);

  report.upward_closed = true;
  for (size_t i = 0; i < sect.size(); ++i)
    for (size_t j = 0; j < all.size(); ++j)
      if (bruhat_leq(sect_stats[i], all_stats[j]) && !in_sect[j]) report.upward_closed = false;

  // nested maximal clan 1 2 .. n n .. 2 1
  SignedInvolution nested;
  nested.size = 2 * n;
  for (int i = 1; i <= n; ++i) nested.two_cycles.emplace_back(i, 2 * n + 1 - i);
  Clan dense = from_signed_involution(nested);
  report.minimum = base.str();
  report.maximum = dense.str();

  OrderStats base_stats = OrderStats::of(base);
  OrderStats dense_stats = OrderStats::of(dense);
  report.base_is_minimum = true;
  for (const OrderStats& st : sect_stats)
    if (!bruhat_leq(base_stats, st)) report.base_is_minimum = false;
  report.dense_is_maximum = true;
  for (const OrderStats& st : all_stats)
    if (!bruhat_leq(st, dense_stats)) report.dense_is_maximum = false;

  report.ok = report.upward_closed && report.base_is_minimum && report.dense_is_maximum;
  return report;
}

}  // namespace clanlab
