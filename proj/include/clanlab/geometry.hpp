#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/enumeration.hpp"
#include "clanlab/errors.hpp"
#include "clanlab/exact_matrix.hpp"

namespace clanlab {

/// n x n antidiagonal 1s.
inline ExactMatrix j_matrix(int n) {
  ExactMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, n + 1 - i) = 1;
  return m;
}

/// The symplectic form: (0, J; -J, 0) in n x n blocks.
inline ExactMatrix omega(int n) {
  ExactMatrix m(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    m.at(i, 2 * n + 1 - i) = 1;
    m.at(2 * n + 1 - i, i) = -1;
  }
  return m;
}

/// diag(I_n, -I_n).
inline ExactMatrix i_nn(int n) {
  ExactMatrix m(2 * n, 2 * n);
  for (int i = 1; i <= n; ++i) {
    m.at(i, i) = 1;
    m.at(n + i, n + i) = -1;
  }
  return m;
}

namespace detail {

inline int even_half(const ExactMatrix& g) {
  if (g.rows() != g.cols() || g.rows() % 2 != 0) throw NotSquare("expected a 2n x 2n matrix");
  return g.rows() / 2;
}

}  // namespace detail

/// g^t Omega g = Omega, tested exactly.
inline bool is_symplectic(const ExactMatrix& g) {
  int n = detail::even_half(g);
  ExactMatrix form = omega(n);
  return g.transpose() * form * g == form;
}

inline bool in_borel(const ExactMatrix& g) { return is_symplectic(g) && g.is_upper_triangular(); }

/// Symplectic with zero lower-left n x n block: the stabilizer of the span
/// of the first n basis vectors.
inline bool in_parabolic(const ExactMatrix& g) {
  int n = detail::even_half(g);
  if (!is_symplectic(g)) return false;
  for (int i = n + 1; i <= 2 * n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!g.at(i, j).is_zero()) return false;
  return true;
}

/// Block diagonal symplectic; the lower block is then forced to be
/// J (A^{-1})^t J.
inline bool in_levi(const ExactMatrix& g) {
  int n = detail::even_half(g);
  if (!is_symplectic(g)) return false;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (!g.at(i, n + j).is_zero() || !g.at(n + i, j).is_zero()) return false;
  ExactMatrix a = g.block(1, 1, n, n);
  if (!a.is_invertible()) return false;
  ExactMatrix j = j_matrix(n);
  return g.block(n + 1, n + 1, n, n) == j * a.inverse().transpose() * j;
}

/// The order-two automorphism in block form: (A, B; C, D) -> (A, -B; -C, D).
inline ExactMatrix theta(const ExactMatrix& g) {
  int n = detail::even_half(g);
  ExactMatrix out = g;
  for (int i = 1; i <= 2 * n; ++i)
    for (int j = 1; j <= 2 * n; ++j)
      if ((i <= n) != (j <= n)) out.at(i, j) = -out.at(i, j);
  return out;
}

inline bool is_theta_fixed(const ExactMatrix& g) { return theta(g) == g; }

/// The representative matrix of an orbit: one column per clan position.
/// Sign positions contribute signed basis vectors along the default
/// permutation; each matched pair contributes the two combinations
/// (e_{sigma(i)} +- e_{sigma(j)}) / sqrt(2), negated in the second half.
inline ExactMatrix representative_matrix(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("representative matrix requires a skew-symmetric clan");
  int n = c.half();
  int m = 2 * n;
  DefaultPermutation sigma = default_permutation(c);
  ExactMatrix g(m, m);
  QSqrt2 half_root = QSqrt2::inv_sqrt2();
  for (int i = 1; i <= m; ++i) {
    const Symbol& s = c.at(i);
    if (s.is_minus()) {
      g.at(sigma(i), i) = 1;
    } else if (s.is_plus()) {
      g.at(sigma(i), i) = i <= n ? 1 : -1;
    }
  }
  for (const auto& [i, j] : c.pairs()) {
    QSqrt2 lead = i <= n ? half_root : -half_root;
    g.at(sigma(i), i) = lead;
    g.at(sigma(j), i) = lead;
    g.at(sigma(i), j) = half_root;
    g.at(sigma(j), j) = -half_root;
  }
  return g;
}

/// Invertible matrix whose first half spans an isotropic subspace; columns
/// present a full isotropic flag.
struct Flag {
  ExactMatrix matrix;

  explicit Flag(ExactMatrix m) : matrix(std::move(m)) {
    int n = detail::even_half(matrix);
    if (!matrix.is_invertible()) throw Error("flag matrix must be invertible");
    ExactMatrix v = matrix.left_columns(n);
    if (!(v.transpose() * omega(n) * v == ExactMatrix(n, n))) throw NotIsotropic();
  }
};

/// Flags are equal when the spans of the first i columns agree for every i.
inline bool flags_equal(const Flag& a, const Flag& b) {
  int m = a.matrix.rows();
  if (b.matrix.rows() != m) throw SizeMismatch("comparing flags of different size");
  for (int i = 1; i <= m; ++i)
    if (ExactMatrix::hconcat(a.matrix.left_columns(i), b.matrix.left_columns(i)).rank() != i)
      return false;
  return true;
}

/// Jump positions of dim(V cap E_j) for the standard flag E_j, where V is
/// the span of the first n columns; the result indexes the Schubert cell
/// containing that Lagrangian subspace.
inline std::vector<int> schubert_cell_index(const ExactMatrix& g) {
  int n = detail::even_half(g);
  int m = 2 * n;
  if (!g.is_invertible()) throw Error("cell index requires an invertible matrix");
  ExactMatrix v = g.left_columns(n);
  if (!(v.transpose() * omega(n) * v == ExactMatrix(n, n))) throw NotIsotropic();
  std::vector<int> jumps;
  int previous = 0;  // dim(V cap E_0)
  for (int j = 1; j <= m; ++j) {
    ExactMatrix joint(m, n + j);
    for (int r = 1; r <= m; ++r)
      for (int c2 = 1; c2 <= n; ++c2) joint.at(r, c2) = v.at(r, c2);
    for (int c2 = 1; c2 <= j; ++c2) joint.at(c2, n + c2) = 1;
    int dim = n + j - joint.rank();
    if (dim > previous) jumps.push_back(j);
    previous = dim;
  }
  return jumps;
}

/// The all-sign clan of a cell index: '+' exactly at the positions of I.
inline Clan base_clan_of_cell(const std::vector<int>& index_set, int n) {
  int m = 2 * n;
  std::set<int> I(index_set.begin(), index_set.end());
  if (static_cast<int>(I.size()) != n) throw NotAdmissible("index set must have n elements");
  for (int i : I) {
    if (i < 1 || i > m) throw NotAdmissible("index out of range");
    if (I.count(m + 1 - i)) throw NotAdmissible("index set contains an opposite pair");
  }
  std::vector<Symbol> symbols;
  for (int i = 1; i <= m; ++i)
    symbols.push_back(I.count(i) ? Symbol::plus() : Symbol::minus());
  return Clan(std::move(symbols));
}

inline std::vector<int> cell_of_base_clan(const Clan& base) {
  if (!base.all_signs() || !is_skew_symmetric(base)) throw NotAdmissible(base.str());
  std::vector<int> I;
  for (int i = 1; i <= base.length(); ++i)
    if (base.at(i).is_plus()) I.push_back(i);
  return I;
}

/// e_r -> e_r + e_{2n+1-r}, identity elsewhere; n+1 <= r <= 2n.
inline ExactMatrix parabolic_generator(int r, int n) {
  if (r < n + 1 || r > 2 * n) throw IndexOutOfRange("generator index " + std::to_string(r));
  ExactMatrix m = ExactMatrix::identity(2 * n);
  m.at(2 * n + 1 - r, r) = 1;
  return m;
}

/// e_r -> e_r + e_{2n+1-s}, e_s -> e_s + e_{2n+1-r}; n+1 <= r,s <= 2n, r != s.
inline ExactMatrix parabolic_generator(int r, int s, int n) {
  if (r < n + 1 || r > 2 * n || s < n + 1 || s > 2 * n) throw IndexOutOfRange("generator index");
  if (r == s) throw IndexOutOfRange("generator indices must differ");
  ExactMatrix m = ExactMatrix::identity(2 * n);
  m.at(2 * n + 1 - s, r) = 1;
  m.at(2 * n + 1 - r, s) = 1;
  return m;
}

/// Carries the flag of the base clan to the flag of c with one parabolic
/// generator per self-mirrored pair and one per family, then compares flags
/// span by span.  Factors act on disjoint coordinates, so they are applied
/// in increasing order of each pair's first position.
inline bool transport_check(const Clan& c) {
  int n = c.half();
  int m = 2 * n;
  DefaultPermutation sigma = default_permutation(c);
  PairClassification pc = classify_pairs(c);

  std::vector<std::pair<int, ExactMatrix>> factors;  // keyed by first position
  for (const auto& [i, j] : pc.pi2_pairs)
    factors.emplace_back(i, parabolic_generator(sigma(i), n));
  auto family_factor = [&](const PairClassification::Family& fam) {
    auto [i, j] = fam.first;
    int r = sigma(i);
    int s = m + 1 - sigma(j);  // = sigma(2n+1-j)
    factors.emplace_back(i, parabolic_generator(r, s, n));
  };
  for (const auto& fam : pc.pi11_families) family_factor(fam);
  for (const auto& fam : pc.pi12_families) family_factor(fam);
  std::sort(factors.begin(), factors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  ExactMatrix transported = representative_matrix(base_clan(c));
  for (const auto& [pos, p] : factors) transported = p * transported;
  return flags_equal(Flag(std::move(transported)), Flag(representative_matrix(c)));
}

struct DecompositionReport {
  int n = 0;
  std::map<std::vector<int>, int> cell_counts;  // cell index -> clans mapping there
  std::vector<std::string> mismatches;
  bool sect_sizes_match = false;
  bool ok = false;
};

/// For every clan, the cell of the inverted representative must be the cell
/// of its base clan; cell populations must reproduce the sect sizes.
inline DecompositionReport verify_decomposition(int n, int limit = 3) {
  if (n > limit) throw BoundExceeded("decomposition check capped at n = " + std::to_string(limit));
  DecompositionReport report;
  report.n = n;
  std::vector<Clan> clans = enumerate_skew_clans(n);
  for (const Clan& c : clans) {
    std::vector<int> cell = schubert_cell_index(representative_matrix(c).inverse());
    if (cell != cell_of_base_clan(base_clan(c))) report.mismatches.push_back(c.str());
    ++report.cell_counts[cell];
  }
  report.sect_sizes_match = true;
  int total = 0;
  for (const auto& [cell, count] : report.cell_counts) {
    total += count;
    if (static_cast<int>(enumerate_sect(base_clan_of_cell(cell, n)).size()) != count)
      report.sect_sizes_match = false;
  }
  if (total != static_cast<int>(clans.size())) report.sect_sizes_match = false;
  report.ok = report.mismatches.empty() && report.sect_sizes_match;
  return report;
}

}  // namespace clanlab
