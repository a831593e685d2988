#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "clanlab/clanlab.hpp"

namespace clanlab {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline const std::vector<long long> kSkewCounts = {3, 11, 45, 201, 963, 4899, 26253};
inline const std::vector<long long> kBigSectCounts = {2, 5, 14, 43, 142, 499, 1850};

inline void note(std::string& detail, const std::string& line) {
  if (!detail.empty()) detail += "; ";
  detail += line;
}

}  // namespace detail

/// Criterion 1: generation, closed formula and recurrence all give
/// 3, 11, 45, 201, 963, 4899, 26253 for n = 1..7.
inline CheckResult criterion_counting_agreement(int max_n = 7) {
  CheckResult r{"counting-triple-agreement", true, ""};
  for (int n = 1; n <= max_n; ++n) {
    Integer expected = detail::kSkewCounts[static_cast<size_t>(n - 1)];
    Integer enumerated = static_cast<long long>(enumerate_skew_clans(n).size());
    Integer formula = skew_clan_count(n);
    Integer recurrence = skew_clan_count_recurrence(n);
    if (enumerated != expected || formula != expected || recurrence != expected) {
      r.passed = false;
      detail::note(r.detail, "n=" + std::to_string(n) + ": enumeration " + enumerated.str() +
                                 ", formula " + formula.str() + ", recurrence " + recurrence.str() +
                                 ", expected " + expected.str());
    }
  }
  if (r.passed) r.detail = "Z_1..Z_" + std::to_string(max_n) + " agree across all three routes";
  return r;
}

/// Criterion 2: big-sect filtering, closed formula and recurrence all give
/// 2, 5, 14, 43, 142, 499, 1850 for n = 1..7.
inline CheckResult criterion_big_sect_counts(int max_n = 7) {
  CheckResult r{"big-sect-counts", true, ""};
  for (int n = 1; n <= max_n; ++n) {
    Integer expected = detail::kBigSectCounts[static_cast<size_t>(n - 1)];
    Integer enumerated = static_cast<long long>(big_sect(n).size());
    Integer formula = big_sect_count(n);
    Integer recurrence = big_sect_count_recurrence(n);
    if (enumerated != expected || formula != expected || recurrence != expected) {
      r.passed = false;
      detail::note(r.detail, "n=" + std::to_string(n) + ": enumeration " + enumerated.str() +
                                 ", formula " + formula.str() + ", recurrence " + recurrence.str() +
                                 ", expected " + expected.str());
    }
  }
  if (r.passed) r.detail = "sect sizes 2..1850 agree across all three routes";
  return r;
}

/// Criterion 3: n! [x^n] of the two generating functions equals the counts
/// for all n <= 20, in exact rational arithmetic.
inline CheckResult criterion_egf(int max_n = 20) {
  CheckResult r{"generating-functions", true, ""};
  if (!egf_check(CountKind::skew_clans, max_n)) {
    r.passed = false;
    detail::note(r.detail, "clan-count series disagrees");
  }
  if (!egf_check(CountKind::big_sect, max_n)) {
    r.passed = false;
    detail::note(r.detail, "big-sect series disagrees");
  }
  for (int n = 0; n <= max_n; ++n) {
    if (skew_clan_count(n) != skew_clan_count_recurrence(n) ||
        big_sect_count(n) != big_sect_count_recurrence(n)) {
      r.passed = false;
      detail::note(r.detail, "formula/recurrence split at n=" + std::to_string(n));
    }
  }
  if (r.passed) r.detail = "both series match the counts through n = " + std::to_string(max_n);
  return r;
}

/// Criterion 4: the three bijections round-trip on their full domains and
/// the brute-forced codomains equal the images.
inline CheckResult criterion_bijection_roundtrips() {
  CheckResult r{"bijection-roundtrips", true, ""};

  for (int n = 1; n <= 5; ++n)
    for (const Clan& c : enumerate_skew_clans(n))
      if (restricted_to_clan(clan_to_restricted(c)) != c) {
        r.passed = false;
        detail::note(r.detail, "restricted roundtrip fails at " + c.str());
      }
  for (int n = 1; n <= 3; ++n) {
    std::vector<SignedPermutation> brute = enumerate_restricted(n);
    std::set<SignedPermutation> image;
    for (const Clan& c : enumerate_skew_clans(n)) image.insert(clan_to_restricted(c));
    if (Integer(brute.size()) != skew_clan_count(n) ||
        image != std::set<SignedPermutation>(brute.begin(), brute.end())) {
      r.passed = false;
      detail::note(r.detail, "restricted involutions differ from image at n=" + std::to_string(n));
    }
    for (const SignedPermutation& s : brute)
      if (clan_to_restricted(restricted_to_clan(s)) != s) {
        r.passed = false;
        detail::note(r.detail, "restricted reverse roundtrip fails at " + s.str());
      }
  }

  for (int n = 1; n <= 4; ++n) {
    for (const Clan& c : enumerate_skew_clans(n)) {
      WeightedDelannoyPath p = clan_to_path(c);
      if (!is_valid_weighted_path(p) || path_to_clan(p) != c) {
        r.passed = false;
        detail::note(r.detail, "path roundtrip fails at " + c.str());
      }
    }
    std::vector<WeightedDelannoyPath> words = enumerate_weighted_paths(n);
    std::set<WeightedDelannoyPath> image;
    for (const Clan& c : enumerate_skew_clans(n)) image.insert(clan_to_path(c));
    if (Integer(words.size()) != skew_clan_count(n) ||
        image != std::set<WeightedDelannoyPath>(words.begin(), words.end())) {
      r.passed = false;
      detail::note(r.detail, "valid weighted words differ from image at n=" + std::to_string(n));
    }
    for (const WeightedDelannoyPath& w : words)
      if (clan_to_path(path_to_clan(w)) != w) {
        r.passed = false;
        detail::note(r.detail, "path reverse roundtrip fails at " + w.str());
      }
  }

  for (int n = 1; n <= 5; ++n) {
    for (const Clan& c : big_sect(n))
      if (partial_involution_to_clan(clan_to_partial_involution(c)) != c) {
        r.passed = false;
        detail::note(r.detail, "partial-involution roundtrip fails at " + c.str());
      }
    for (const PartialInvolution& x : enumerate_partial_involutions(n))
      if (clan_to_partial_involution(partial_involution_to_clan(x)) != x) {
        r.passed = false;
        detail::note(r.detail, "partial-involution reverse roundtrip fails at " + x.str());
      }
  }

  if (r.passed)
    r.detail = "restricted (n<=5), weighted paths (n<=4), partial involutions (n<=5), "
               "brute-force codomains equal the images";
  return r;
}

/// Criterion 5: the two worked translations.
inline CheckResult criterion_worked_figures() {
  CheckResult r{"worked-figures", true, ""};
  std::string path = clan_to_path(Clan::parse("+-123312+-")).str();
  if (path != "E1,N1,D5,D1,D2,E1,N1") {
    r.passed = false;
    detail::note(r.detail, "path of + - 1 2 3 3 1 2 + - came out " + path);
  }
  std::string restricted = clan_to_restricted(Clan::parse("-11+")).str();
  if (restricted != "-1 3 2 -4") {
    r.passed = false;
    detail::note(r.detail, "restricted involution of - 1 1 + came out " + restricted);
  }
  if (r.passed) r.detail = "both worked translations reproduced exactly";
  return r;
}

/// Criterion 6: Hasse diagram shapes of the 11- and 45-clan posets.
inline CheckResult criterion_hasse_fixtures() {
  CheckResult r{"hasse-fixtures", true, ""};

  Poset p2 = hasse_of_clans(enumerate_skew_clans(2));
  if (p2.elements.size() != 11) {
    r.passed = false;
    detail::note(r.detail, "n=2 node count " + std::to_string(p2.elements.size()));
  }
  if (p2.covers.size() != 16) {
    r.passed = false;
    detail::note(r.detail, "n=2 cover count " + std::to_string(p2.covers.size()));
  }
  if (p2.minimal_elements().size() != 4) {
    r.passed = false;
    detail::note(r.detail, "n=2 minimal count " + std::to_string(p2.minimal_elements().size()));
  }
  std::vector<int> maxima = p2.maximal_elements();
  if (maxima.size() != 1 || p2.elements[static_cast<size_t>(maxima[0])] != "1 2 2 1") {
    r.passed = false;
    detail::note(r.detail, "n=2 maximum mismatch");
  }

  Poset p3 = hasse_of_clans(enumerate_skew_clans(3));
  if (p3.elements.size() != 45) {
    r.passed = false;
    detail::note(r.detail, "n=3 node count " + std::to_string(p3.elements.size()));
  }
  if (!p3.has_cover("+ 1 1 2 2 -", "+ 1 2 1 2 -") || !p3.has_cover("+ + 1 1 - -", "+ 1 2 1 2 -")) {
    r.passed = false;
    detail::note(r.detail, "n=3 expected covers missing");
  }
  std::vector<int> maxima3 = p3.maximal_elements();
  if (maxima3.size() != 1 || p3.elements[static_cast<size_t>(maxima3[0])] != "1 2 3 3 2 1") {
    r.passed = false;
    detail::note(r.detail, "n=3 maximum mismatch");
  }

  if (r.passed) r.detail = "11 nodes / 16 covers / 4 minima at n=2; 45 nodes with expected covers at n=3";
  return r;
}

/// Criterion 7: the closure order on the big sect matches the rank-control
/// order on partial involutions for every ordered pair, n <= 5.
inline CheckResult criterion_order_isomorphism(int max_n = 5) {
  CheckResult r{"order-isomorphism", true, ""};
  long long pairs = 0;
  for (int n = 1; n <= max_n; ++n) {
    IsomorphismReport report = verify_order_isomorphism(n);
    pairs += report.pairs_checked;
    if (!report.ok) {
      r.passed = false;
      detail::note(r.detail, "n=" + std::to_string(n) + ": " +
                                 std::to_string(report.counterexamples.size()) + " counterexamples, first " +
                                 report.counterexamples.front().first + " vs " +
                                 report.counterexamples.front().second);
    }
  }
  if (r.passed) r.detail = "zero counterexamples over " + std::to_string(pairs) + " ordered pairs";
  return r;
}

/// Criterion 8: the big sect is an upper order ideal with the stated
/// minimum and maximum, n <= 5.
inline CheckResult criterion_upper_ideal(int max_n = 5) {
  CheckResult r{"big-sect-upper-ideal", true, ""};
  for (int n = 1; n <= max_n; ++n) {
    IdealReport report = verify_big_sect_ideal(n);
    if (!report.ok) {
      r.passed = false;
      detail::note(r.detail, "n=" + std::to_string(n) + ": upward_closed=" +
                                 std::to_string(report.upward_closed) + " base_min=" +
                                 std::to_string(report.base_is_minimum) + " dense_max=" +
                                 std::to_string(report.dense_is_maximum));
    }
    if (report.minimum != big_sect_base(n).str()) {
      r.passed = false;
      detail::note(r.detail, "n=" + std::to_string(n) + ": minimum " + report.minimum);
    }
  }
  if (r.passed) r.detail = "upward closed with the expected minimum and maximum for n <= " + std::to_string(max_n);
  return r;
}

/// Criterion 9: exact geometry for n <= 3: symplectic representatives with
/// isotropic spans, the printed 6x6 matrix, parabolic generators inside
/// P and Sp, flag transport, and the cell decomposition by base clan.
inline CheckResult criterion_geometry(int max_n = 3) {
  CheckResult r{"geometry-suite", true, ""};

  ExactMatrix printed(6, 6);
  {
    QSqrt2 h = QSqrt2::inv_sqrt2();
    printed.at(1, 1) = 1;
    printed.at(2, 3) = h;
    printed.at(2, 5) = -h;
    printed.at(3, 2) = h;
    printed.at(3, 4) = -h;
    printed.at(4, 3) = h;
    printed.at(4, 5) = h;
    printed.at(5, 2) = h;
    printed.at(5, 4) = h;
    printed.at(6, 6) = 1;
  }
  if (representative_matrix(Clan::parse("+1212-")) != printed) {
    r.passed = false;
    detail::note(r.detail, "printed 6x6 representative mismatch");
  }

  for (int n = 1; n <= max_n; ++n) {
    for (const Clan& c : enumerate_skew_clans(n)) {
      ExactMatrix g = representative_matrix(c);
      bool flag_ok = true;
      try {
        Flag f(g);
      } catch (const Error&) {
        flag_ok = false;
      }
      if (!is_symplectic(g) || !flag_ok) {
        r.passed = false;
        detail::note(r.detail, "representative of " + c.str() + " not symplectic/isotropic");
      }
      if (!transport_check(c)) {
        r.passed = false;
        detail::note(r.detail, "transport fails at " + c.str());
      }
    }
    for (int a = n + 1; a <= 2 * n; ++a) {
      if (!is_symplectic(parabolic_generator(a, n)) || !in_parabolic(parabolic_generator(a, n))) {
        r.passed = false;
        detail::note(r.detail, "one-index generator outside P cap Sp at n=" + std::to_string(n));
      }
      for (int b = n + 1; b <= 2 * n; ++b) {
        if (a == b) continue;
        if (!is_symplectic(parabolic_generator(a, b, n)) || !in_parabolic(parabolic_generator(a, b, n))) {
          r.passed = false;
          detail::note(r.detail, "two-index generator outside P cap Sp at n=" + std::to_string(n));
        }
      }
    }
    DecompositionReport report = verify_decomposition(n);
    if (!report.ok) {
      r.passed = false;
      detail::note(r.detail, "cell decomposition fails at n=" + std::to_string(n) + " (" +
                                 std::to_string(report.mismatches.size()) + " mismatches)");
    }
  }
  if (r.passed)
    r.detail = "representatives, generators, transport and cell decomposition all exact for n <= " +
               std::to_string(max_n);
  return r;
}

inline std::vector<CheckResult> acceptance_criteria() {
  return {criterion_counting_agreement(), criterion_big_sect_counts(),   criterion_egf(),
          criterion_bijection_roundtrips(), criterion_worked_figures(),  criterion_hasse_fixtures(),
          criterion_order_isomorphism(),  criterion_upper_ideal(),       criterion_geometry()};
}

/// Suites for the command-line verifier; max_n trims the sweep bounds
/// (never past the pinned criterion bounds).
inline std::vector<CheckResult> verification_suite(const std::string& suite, int max_n = 0) {
  auto clamp = [max_n](int pinned) { return max_n > 0 && max_n < pinned ? max_n : pinned; };
  std::vector<CheckResult> out;
  if (suite == "counts" || suite == "all") {
    out.push_back(criterion_counting_agreement(clamp(7)));
    out.push_back(criterion_big_sect_counts(clamp(7)));
    out.push_back(criterion_egf(clamp(20)));
  }
  if (suite == "bijections" || suite == "all") {
    out.push_back(criterion_bijection_roundtrips());
    out.push_back(criterion_worked_figures());
  }
  if (suite == "posets" || suite == "all") {
    out.push_back(criterion_hasse_fixtures());
    out.push_back(criterion_order_isomorphism(clamp(5)));
    out.push_back(criterion_upper_ideal(clamp(5)));
  }
  if (suite == "geometry" || suite == "all") {
    out.push_back(criterion_geometry(clamp(3)));
  }
  if (out.empty()) throw ParseError("unknown verification suite: " + suite);
  return out;
}

}  // namespace clanlab
