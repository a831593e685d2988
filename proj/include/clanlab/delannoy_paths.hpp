#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "clanlab/clan.hpp"
#include "clanlab/errors.hpp"

namespace clanlab {

enum class StepDirection { north, east, diagonal };

inline char direction_char(StepDirection d) {
  switch (d) {
    case StepDirection::north: return 'N';
    case StepDirection::east: return 'E';
    default: return 'D';
  }
}

/// One lattice step with a positive weight; north and east steps always
/// carry weight 1.
struct WeightedStep {
  StepDirection direction{};
  int weight = 1;

  std::string str() const { return direction_char(direction) + std::to_string(weight); }
  auto operator<=>(const WeightedStep&) const = default;
};

/// A Delannoy path from (0,0) to (n,n) whose diagonal steps carry weights;
/// see is_valid_weighted_path for the full validity predicate.
struct WeightedDelannoyPath {
  std::vector<WeightedStep> steps;
  int n = 0;

  /// Comma-separated steps read left to right from the origin: "E1,N1,D5".
  static WeightedDelannoyPath parse(std::string_view text) {
    WeightedDelannoyPath p;
    size_t pos = 0;
    while (pos < text.size()) {
      size_t end = text.find(',', pos);
      if (end == std::string_view::npos) end = text.size();
      std::string_view tok = text.substr(pos, end - pos);
      if (tok.size() < 2) throw ParseError("bad step token");
      StepDirection dir;
      switch (tok[0]) {
        case 'N': dir = StepDirection::north; break;
        case 'E': dir = StepDirection::east; break;
        case 'D': dir = StepDirection::diagonal; break;
        default: throw ParseError(std::string("bad step direction: ") + tok[0]);
      }
      int weight = 0;
      for (size_t k = 1; k < tok.size(); ++k) {
        if (!std::isdigit(static_cast<unsigned char>(tok[k]))) throw ParseError("bad step weight");
        weight = weight * 10 + (tok[k] - '0');
      }
      if (weight < 1) throw ParseError("step weight must be positive");
      if (dir != StepDirection::diagonal && weight != 1) throw ParseError("N and E steps have weight 1");
      p.steps.push_back({dir, weight});
      pos = end + 1;
    }
    int norths = 0, easts = 0, diagonals = 0;
    for (const auto& s : p.steps) {
      if (s.direction == StepDirection::north) ++norths;
      else if (s.direction == StepDirection::east) ++easts;
      else ++diagonals;
    }
    if (norths != easts) throw ParseError("not a square Delannoy path");
    p.n = norths + diagonals;
    return p;
  }

  std::string str() const {
    std::string out;
    for (size_t i = 0; i < steps.size(); ++i) {
      if (i) out += ',';
      out += steps[i].str();
    }
    return out;
  }

  auto operator<=>(const WeightedDelannoyPath&) const = default;
};

/// The validity predicate for weighted paths.  Writing the word as
/// W_1..W_r and its subword of steps different from (D,1) as W_{i_1}..W_{i_t}:
///   * the directions form an (n,n) Delannoy path;
///   * t is even and every (D,1) occurs after position i_{t/2};
///   * the j-th and (t+1-j)-th subword steps mirror N <-> E;
///   * a weighted diagonal at i_j pairs with a diagonal at i_{t+1-j} whose
///     weight is 2n+3 - 2(i_j + m_{i_j} + d_{i_{t+1-j}}) - l_{i_j}, where
///     m_i counts earlier steps of weight != 1 and d_i counts later (D,1)s.
inline bool is_valid_weighted_path(const WeightedDelannoyPath& p) {
  int r = static_cast<int>(p.steps.size());
  int norths = 0, easts = 0, diagonals = 0;
  for (const auto& s : p.steps) {
    if (s.weight < 1) return false;
    if (s.direction != StepDirection::diagonal && s.weight != 1) return false;
    if (s.direction == StepDirection::north) ++norths;
    else if (s.direction == StepDirection::east) ++easts;
    else ++diagonals;
  }
  if (norths + diagonals != p.n || easts + diagonals != p.n) return false;
  if (p.n >= 1) {
    for (const auto& s : p.steps)
      if (s.weight > 2 * p.n - 1) return false;
  }

  auto at = [&](int i) -> const WeightedStep& { return p.steps[static_cast<size_t>(i - 1)]; };
  std::vector<int> sub;  // 1-based indices of steps that are not (D,1)
  for (int i = 1; i <= r; ++i)
    if (!(at(i).direction == StepDirection::diagonal && at(i).weight == 1)) sub.push_back(i);
  int t = static_cast<int>(sub.size());
  if (t % 2 != 0) return false;

  if (t > 0) {
    int midpoint = sub[static_cast<size_t>(t / 2 - 1)];
    for (int i = 1; i <= r; ++i)
      if (at(i).direction == StepDirection::diagonal && at(i).weight == 1 && i <= midpoint) return false;
  }

  auto m_of = [&](int i) {
    int count = 0;
    for (int k = 1; k < i; ++k)
      if (at(k).weight != 1) ++count;
    return count;
  };
  auto d_of = [&](int i) {
    int count = 0;
    for (int k = i + 1; k <= r; ++k)
      if (at(k).direction == StepDirection::diagonal && at(k).weight == 1) ++count;
    return count;
  };

  for (int j = 1; j <= t; ++j) {
    const WeightedStep& a = at(sub[static_cast<size_t>(j - 1)]);
    const WeightedStep& b = at(sub[static_cast<size_t>(t - j)]);
    if (a.direction == StepDirection::north && b.direction != StepDirection::east) return false;
    if (a.direction == StepDirection::east && b.direction != StepDirection::north) return false;
  }
  for (int j = 1; j <= t / 2; ++j) {
    int ij = sub[static_cast<size_t>(j - 1)];
    int partner = sub[static_cast<size_t>(t - j)];
    if (at(ij).weight == 1) continue;
    int want = 2 * p.n + 3 - 2 * (ij + m_of(ij) + d_of(partner)) - at(ij).weight;
    if (at(partner).direction != StepDirection::diagonal || at(partner).weight != want) return false;
  }
  return true;
}

enum class PeelKind { plus_fixed, minus_fixed, family, center };

/// One stage of the peeling construction behind clan_to_path.
struct PeelStage {
  int size = 0;  // number of letters at peel time
  PeelKind kind{};
  int top_weight = 0;
  int bottom_weight = 0;
};

namespace detail {

// Working copy of a signed involution: partner[i] = matched letter or 0,
// sign[i] meaningful for fixed letters.  1-based.
struct PeelState {
  std::vector<int> partner;
  std::vector<Sign> sign;

  int size() const { return static_cast<int>(partner.size()) - 1; }

  static PeelState of(const Clan& c) {
    PeelState st;
    st.partner.assign(static_cast<size_t>(c.length()) + 1, 0);
    st.sign.assign(static_cast<size_t>(c.length()) + 1, Sign::plus);
    for (const auto& [i, j] : c.pairs()) {
      st.partner[static_cast<size_t>(i)] = j;
      st.partner[static_cast<size_t>(j)] = i;
    }
    for (int i = 1; i <= c.length(); ++i)
      if (c.at(i).is_sign()) st.sign[static_cast<size_t>(i)] = c.at(i).sign();
    return st;
  }

  // Drop the given (sorted, distinct) letters and renumber the rest in order.
  void remove(const std::vector<int>& letters) {
    int m = size();
    std::vector<int> relabel(static_cast<size_t>(m) + 1, 0);
    int next = 0;
    for (int v = 1, drop = 0; v <= m; ++v) {
      if (drop < static_cast<int>(letters.size()) && letters[static_cast<size_t>(drop)] == v) {
        ++drop;
        continue;
      }
      relabel[static_cast<size_t>(v)] = ++next;
    }
    std::vector<int> new_partner(static_cast<size_t>(next) + 1, 0);
    std::vector<Sign> new_sign(static_cast<size_t>(next) + 1, Sign::plus);
    for (int v = 1; v <= m; ++v) {
      int nv = relabel[static_cast<size_t>(v)];
      if (nv == 0) continue;
      int p = partner[static_cast<size_t>(v)];
      new_partner[static_cast<size_t>(nv)] = p == 0 ? 0 : relabel[static_cast<size_t>(p)];
      new_sign[static_cast<size_t>(nv)] = sign[static_cast<size_t>(v)];
    }
    partner = std::move(new_partner);
    sign = std::move(new_sign);
  }
};

inline std::vector<PeelStage> peel_stages(const Clan& c) {
  if (!is_skew_symmetric(c)) throw Error("path construction requires a skew-symmetric clan");
  PeelState st = PeelState::of(c);
  std::vector<PeelStage> stages;
  while (st.size() > 0) {
    int m = st.size();
    PeelStage stage;
    stage.size = m;
    int top = st.partner[static_cast<size_t>(m)];
    if (top == 0) {
      stage.kind = st.sign[static_cast<size_t>(m)] == Sign::plus ? PeelKind::plus_fixed : PeelKind::minus_fixed;
      stage.top_weight = stage.bottom_weight = 1;
      st.remove({1, m});
    } else if (top == 1) {
      stage.kind = PeelKind::center;
      stage.top_weight = 1;
      st.remove({1, m});
    } else {
      stage.kind = PeelKind::family;
      stage.top_weight = top;                                   // cycle (top, m)
      stage.bottom_weight = st.partner[static_cast<size_t>(1)];  // cycle (1, m+1-top)
      if (stage.top_weight + stage.bottom_weight != m + 1)
        throw Error("family cycles out of mirror position");  // unreachable on skew input
      std::vector<int> drop = {1, std::min(top, stage.bottom_weight), std::max(top, stage.bottom_weight), m};
      st.remove(drop);
    }
    stages.push_back(stage);
  }
  return stages;
}

}  // namespace detail

inline std::vector<PeelStage> peel_trace(const Clan& c) { return detail::peel_stages(c); }

/// Peels the largest letter of the signed involution stage by stage.  A '+'
/// fixed point emits east at the tail and north at the head, '-' the mirror
/// image, a family two weighted diagonals, and a (1, 2m) cycle one (D,1)
/// adjacent to the tail-side frontier.
inline WeightedDelannoyPath clan_to_path(const Clan& c) {
  WeightedDelannoyPath p;
  p.n = c.half();
  std::vector<WeightedStep> head, tail;  // tail collected outermost-first
  for (const PeelStage& stage : detail::peel_stages(c)) {
    switch (stage.kind) {
      case PeelKind::plus_fixed:
        head.push_back({StepDirection::north, 1});
        tail.push_back({StepDirection::east, 1});
        break;
      case PeelKind::minus_fixed:
        head.push_back({StepDirection::east, 1});
        tail.push_back({StepDirection::north, 1});
        break;
      case PeelKind::family:
        head.push_back({StepDirection::diagonal, stage.bottom_weight});
        tail.push_back({StepDirection::diagonal, stage.top_weight});
        break;
      case PeelKind::center:
        tail.push_back({StepDirection::diagonal, 1});
        break;
    }
  }
  p.steps = std::move(head);
  p.steps.insert(p.steps.end(), tail.rbegin(), tail.rend());
  return p;
}

namespace detail {

// Rebuilds the signed involution from the outside in; [lo, hi] are 1-based
// step indices, letters are the original positions the involution will use.
inline void unpeel(const WeightedDelannoyPath& p, int lo, int hi, std::vector<int>& letters,
                   std::vector<int>& partner, std::vector<Sign>& sign) {
  if (lo > hi) {
    if (!letters.empty()) throw InvalidPath("leftover letters");
    return;
  }
  if (letters.size() < 2) throw InvalidPath("step word too long");
  int m = static_cast<int>(letters.size());
  const WeightedStep& last = p.steps[static_cast<size_t>(hi - 1)];
  int first_letter = letters.front();
  int last_letter = letters.back();

  auto expect_first = [&](StepDirection dir) {
    if (lo > hi - 1) throw InvalidPath("unbalanced word");
    const WeightedStep& first = p.steps[static_cast<size_t>(lo - 1)];
    if (first.direction != dir || first.weight != 1) throw InvalidPath("mismatched frontier steps");
  };

  if (last.direction == StepDirection::east) {
    expect_first(StepDirection::north);
    partner[static_cast<size_t>(last_letter)] = 0;
    sign[static_cast<size_t>(last_letter)] = Sign::plus;
    partner[static_cast<size_t>(first_letter)] = 0;
    sign[static_cast<size_t>(first_letter)] = Sign::minus;
    letters.erase(letters.begin());
    letters.pop_back();
    unpeel(p, lo + 1, hi - 1, letters, partner, sign);
  } else if (last.direction == StepDirection::north) {
    expect_first(StepDirection::east);
    partner[static_cast<size_t>(last_letter)] = 0;
    sign[static_cast<size_t>(last_letter)] = Sign::minus;
    partner[static_cast<size_t>(first_letter)] = 0;
    sign[static_cast<size_t>(first_letter)] = Sign::plus;
    letters.erase(letters.begin());
    letters.pop_back();
    unpeel(p, lo + 1, hi - 1, letters, partner, sign);
  } else if (last.weight == 1) {
    partner[static_cast<size_t>(first_letter)] = last_letter;
    partner[static_cast<size_t>(last_letter)] = first_letter;
    letters.erase(letters.begin());
    letters.pop_back();
    unpeel(p, lo, hi - 1, letters, partner, sign);
  } else {
    int i = last.weight;  // cycle (i, m) in current letters
    if (i < 2 || i > m - 1) throw InvalidPath("diagonal weight out of range");
    int j = m + 1 - i;  // companion cycle (1, j)
    if (lo > hi - 1) throw InvalidPath("unbalanced word");
    const WeightedStep& first = p.steps[static_cast<size_t>(lo - 1)];
    if (first.direction != StepDirection::diagonal || first.weight != j)
      throw InvalidPath("family weights must mirror to m+1");
    int a = letters[static_cast<size_t>(i - 1)];
    int b = letters[static_cast<size_t>(j - 1)];
    partner[static_cast<size_t>(a)] = last_letter;
    partner[static_cast<size_t>(last_letter)] = a;
    partner[static_cast<size_t>(first_letter)] = b;
    partner[static_cast<size_t>(b)] = first_letter;
    std::vector<int> kept;
    for (int v = 2; v <= m - 1; ++v)
      if (v != i && v != j) kept.push_back(letters[static_cast<size_t>(v - 1)]);
    letters = std::move(kept);
    unpeel(p, lo + 1, hi - 1, letters, partner, sign);
  }
}

}  // namespace detail

/// Validates the path, then reverses the peeling construction.
inline Clan path_to_clan(const WeightedDelannoyPath& p) {
  if (!is_valid_weighted_path(p)) throw InvalidPath(p.str());
  int m = 2 * p.n;
  std::vector<int> letters(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) letters[static_cast<size_t>(i)] = i + 1;
  std::vector<int> partner(static_cast<size_t>(m) + 1, 0);
  std::vector<Sign> sign(static_cast<size_t>(m) + 1, Sign::plus);
  detail::unpeel(p, 1, static_cast<int>(p.steps.size()), letters, partner, sign);

  SignedInvolution inv;
  inv.size = m;
  for (int i = 1; i <= m; ++i) {
    int j = partner[static_cast<size_t>(i)];
    if (j == 0)
      inv.signed_fixed_points.emplace(i, sign[static_cast<size_t>(i)]);
    else if (i < j)
      inv.two_cycles.emplace_back(i, j);
  }
  return from_signed_involution(inv);
}

/// Every weighted word over the direction alphabet whose weights stay in
/// 1..2n-1 and which passes the validity predicate.
inline std::vector<WeightedDelannoyPath> enumerate_weighted_paths(int n, int limit = 4) {
  if (n < 1) throw IndexOutOfRange("n must be >= 1");
  if (n > limit) throw BoundExceeded("weighted-path brute force capped at n = " + std::to_string(limit));
  std::vector<WeightedDelannoyPath> out;
  std::vector<WeightedStep> word;
  auto rec = [&](auto&& self, int x, int y) -> void {
    if (x == n && y == n) {
      WeightedDelannoyPath p{word, n};
      if (is_valid_weighted_path(p)) out.push_back(std::move(p));
      return;
    }
    if (x < n) {
      word.push_back({StepDirection::east, 1});
      self(self, x + 1, y);
      word.pop_back();
    }
    if (y < n) {
      word.push_back({StepDirection::north, 1});
      self(self, x, y + 1);
      word.pop_back();
    }
    if (x < n && y < n) {
      for (int w = 1; w <= 2 * n - 1; ++w) {
        word.push_back({StepDirection::diagonal, w});
        self(self, x + 1, y + 1);
        word.pop_back();
      }
    }
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace clanlab
