#pragma once

#include <algorithm>
#include <string>
#include <string_view>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/enumeration.hpp"
#include "clanlab/errors.hpp"

namespace clanlab {

/// Symmetric n x n 0/1 matrix with at most one 1 per row and per column;
/// indexes the congruence orbits matched with the big sect.
class PartialInvolution {
 public:
  explicit PartialInvolution(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
    int n = size();
    for (const auto& row : rows_)
      if (static_cast<int>(row.size()) != n) throw SizeMismatch("matrix is not square");
    for (int i = 1; i <= n; ++i) {
      int row_ones = 0, col_ones = 0;
      for (int j = 1; j <= n; ++j) {
        int v = at(i, j);
        if (v != 0 && v != 1) throw ParseError("entries must be 0 or 1");
        if (at(i, j) != at(j, i)) throw ParseError("matrix must be symmetric");
        row_ones += at(i, j);
        col_ones += at(j, i);
      }
      if (row_ones > 1 || col_ones > 1) throw ParseError("at most one 1 per row and column");
    }
  }

  static PartialInvolution zero(int n) {
    return PartialInvolution(std::vector<std::vector<int>>(
        static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0)));
  }

  int size() const { return static_cast<int>(rows_.size()); }

  int at(int i, int j) const {
    if (i < 1 || j < 1 || i > size() || j > size()) throw IndexOutOfRange("matrix entry");
    return rows_[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)];
  }

  const std::vector<std::vector<int>>& rows() const { return rows_; }

  int one_count() const {
    int total = 0;
    for (const auto& row : rows_)
      for (int v : row) total += v;
    return total;
  }

  /// Rows separated by ';', entries by ',': "1,0,0;0,0,1;0,1,0".
  static PartialInvolution parse(std::string_view text) {
    std::vector<std::vector<int>> rows(1);
    for (char c : text) {
      if (c == ';') {
        rows.emplace_back();
      } else if (c == ',') {
        continue;
      } else if (c == '0' || c == '1') {
        rows.back().push_back(c - '0');
      } else if (c == ' ') {
        continue;
      } else {
        throw ParseError(std::string("bad matrix character: ") + c);
      }
    }
    return PartialInvolution(std::move(rows));
  }

  std::string str() const {
    std::string out;
    for (int i = 1; i <= size(); ++i) {
      if (i > 1) out += ';';
      for (int j = 1; j <= size(); ++j) {
        if (j > 1) out += ',';
        out += static_cast<char>('0' + at(i, j));
      }
    }
    return out;
  }

  auto operator<=>(const PartialInvolution&) const = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Reads the matched pairs of a big-sect clan off the first half: a pair
/// (i, 2n+1-i) marks the diagonal, a family marks a symmetric off-diagonal
/// couple, and a '-' leaves its row empty.
inline PartialInvolution clan_to_partial_involution(const Clan& c) {
  if (!is_skew_symmetric(c) || base_clan(c) != big_sect_base(c.half()))
    throw NotInBigSect(c.str());
  int n = c.half();
  int m = 2 * n;
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (const auto& [i, j] : c.pairs()) {
    // big-sect pairs satisfy i <= n < j
    int col = m + 1 - j;
    rows[static_cast<size_t>(i - 1)][static_cast<size_t>(col - 1)] = 1;
    rows[static_cast<size_t>(col - 1)][static_cast<size_t>(i - 1)] = 1;
  }
  return PartialInvolution(std::move(rows));
}

inline Clan partial_involution_to_clan(const PartialInvolution& x) {
  int n = x.size();
  int m = 2 * n;
  SignedInvolution inv;
  inv.size = m;
  for (int i = 1; i <= n; ++i) {
    bool row_empty = true;
    for (int j = 1; j <= n; ++j)
      if (x.at(i, j)) row_empty = false;
    if (row_empty) {
      inv.signed_fixed_points.emplace(i, Sign::minus);
      inv.signed_fixed_points.emplace(m + 1 - i, Sign::plus);
    }
  }
  for (int i = 1; i <= n; ++i) {
    if (x.at(i, i)) inv.two_cycles.emplace_back(i, m + 1 - i);
    for (int j = i + 1; j <= n; ++j) {
      if (!x.at(i, j)) continue;
      inv.two_cycles.emplace_back(i, m + 1 - j);
      inv.two_cycles.emplace_back(j, m + 1 - i);
    }
  }
  std::sort(inv.two_cycles.begin(), inv.two_cycles.end());
  return from_signed_involution(inv);
}

/// All symmetric rook placements on [n] x [n]: row by row, each unused index
/// stays empty, fixes itself, or pairs symmetrically with a later index.
inline std::vector<PartialInvolution> enumerate_partial_involutions(int n) {
  std::vector<PartialInvolution> out;
  std::vector<std::vector<int>> rows(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  std::vector<bool> used(static_cast<size_t>(n) + 1, false);
  auto rec = [&](auto&& self, int i) -> void {
    while (i <= n && used[static_cast<size_t>(i)]) ++i;
    if (i > n) {
      out.push_back(PartialInvolution(rows));
      return;
    }
    used[static_cast<size_t>(i)] = true;
    self(self, i + 1);  // row i empty
    rows[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 1;
    self(self, i + 1);
    rows[static_cast<size_t>(i - 1)][static_cast<size_t>(i - 1)] = 0;
    for (int j = i + 1; j <= n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      used[static_cast<size_t>(j)] = true;
      rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 1;
      rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = 1;
      self(self, i + 1);
      rows[static_cast<size_t>(i - 1)][static_cast<size_t>(j - 1)] = 0;
      rows[static_cast<size_t>(j - 1)][static_cast<size_t>(i - 1)] = 0;
      used[static_cast<size_t>(j)] = false;
    }
    used[static_cast<size_t>(i)] = false;
  };
  rec(rec, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clanlab
