#pragma once

// Explicit descriptions of the component R(lambda) of r_lambda and the maps
// used to compare it with tensor products of fundamental components.

#include "intseq/seqcrystal.hpp"

#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

namespace intseq {

/// Positional centers of r_lambda: m_1 ones, then m_2 twos, ...
struct LambdaLayout {
  Weight lambda;
  std::vector<int> centers;

  LambdaLayout(const AlgebraSpec &spec, Weight lam) : lambda(std::move(lam)) {
    if (lambda.size() != static_cast<std::size_t>(spec.rank))
      throw std::invalid_argument("weight length does not match rank");
    if (!lambda.is_dominant()) throw std::invalid_argument("layout needs a dominant weight, got " + lambda.str());
    for (int i = 1; i <= spec.rank; ++i)
      for (int m = 0; m < lambda[i]; ++m) centers.push_back(i);
  }

  std::size_t k() const { return centers.size(); }
  /// Largest center with m_j != 0.
  int last_center() const {
    if (centers.empty()) throw std::invalid_argument("layout of the zero weight has no centers");
    return centers.back();
  }
};

/// x lies in R(omega_i): exactly one non-zero component, with center i, valid.
inline bool fundamental_member(const AlgebraSpec &spec, const SeqElement &x, int i) {
  if (x.nonzero_count() != 1 || x.size() != 1) return false;
  const Component &c = x.components().front();
  return c.center() == i && validate_component(spec, c);
}

namespace detail {

constexpr int minus_infinity = std::numeric_limits<int>::min();
constexpr int plus_infinity = std::numeric_limits<int>::max();

// Letters as ranks in 1..2n-1 so that the membership index arithmetic and
// comparisons are integer operations: v -> v, bar(v) -> 2n - v.
inline int rank_of(const AlgebraSpec &spec, const Letter &x) { return x.barred ? 2 * spec.rank - x.value : x.value; }

struct PairView {
  int center = 0;
  std::vector<int> firsts;  ///< i_1, ..., i_s
  std::vector<int> seconds; ///< ranks of i'_1, ..., i'_s

  PairView(const AlgebraSpec &spec, const Component &c) : center(c.center()) {
    for (const auto &p : c.pairs()) {
      firsts.push_back(p.first);
      seconds.push_back(rank_of(spec, p.second));
    }
  }

  int s() const { return static_cast<int>(firsts.size()); }
  /// i_m, 1-based
  int first(int m) const { return firsts[static_cast<std::size_t>(m - 1)]; }
  /// i'_m with out-of-range indices read as -inf (m < 1) or +inf (m > s)
  int second(int m) const {
    if (m < 1) return minus_infinity;
    if (m > s()) return plus_infinity;
    return seconds[static_cast<std::size_t>(m - 1)];
  }
  bool has_first(int v) const { return std::find(firsts.begin(), firsts.end(), v) != firsts.end(); }
  bool has_second(int r) const { return std::find(seconds.begin(), seconds.end(), r) != seconds.end(); }
  int count_firsts_below(int bound) const {
    return static_cast<int>(std::count_if(firsts.begin(), firsts.end(), [&](int a) { return a < bound; }));
  }
  int count_seconds_below(int bound) const {
    return static_cast<int>(std::count_if(seconds.begin(), seconds.end(), [&](int a) { return a < bound; }));
  }
};

// Condition (1) i)-iii) for a pair of adjacent non-empty components.
inline bool pair_condition_one(const PairView &x, const PairView &y) {
  const int i = x.center, j = y.center, s = x.s(), t = y.s();
  // y.first(t - r) for 0 <= r <= t - 1
  int u = -1;
  for (int r = 0; r <= t - 1; ++r)
    if (y.first(t - r) <= i) u = r;
  for (int p = 0; p <= u; ++p) {
    const int bound = y.first(t - p);
    const int count = static_cast<int>(std::count_if(x.firsts.begin(), x.firsts.end(), [&](int a) { return 1 <= a && a <= bound; }));
    if (count < p + 1) return false;
  }
  for (int p = u + 1; p <= t - 1; ++p) {
    const int jp = y.first(t - p);
    if (jp > p + i) continue;
    if (!(jp <= x.second(jp - p + s - i))) return false;
  }
  for (int p = 1; p <= i - j + t; ++p) {
    if (p > t) return false;
    if (!(y.second(p) <= x.second(j - i + s - t + p))) return false;
  }
  return true;
}

// The membership test "bar(y) - delta notin (1 - delta){firsts} u delta(I - {seconds})",
// delta = [bar(y) in {center+1..n}], for m = bar(y) an unbarred value.
inline bool bar_clause(const AlgebraSpec &spec, int m, const PairView &z) {
  const bool delta = z.center + 1 <= m && m <= spec.rank;
  if (delta) return z.has_second(m - 1);
  return !z.has_first(m);
}

// Condition (3): the pair (x, y) with x non-empty is forbidden.
inline bool pair_violates_three(const AlgebraSpec &spec, const PairView &x, const PairView &y) {
  const int n = spec.rank, i = x.center, j = y.center, s = x.s();
  for (int r = 1; r <= s; ++r) {
    if (x.second(r) < n) continue;
    const int mr = 2 * n - x.second(r);
    if (!bar_clause(spec, mr, x)) continue;
    for (int p = r; p <= s; ++p) {
      const int mp = 2 * n - x.second(p);
      if (!bar_clause(spec, mp, y)) continue;
      const int lhs = (p - r) + y.count_firsts_below(mp) - x.count_firsts_below(mr) + x.count_seconds_below(mr) -
                      y.count_seconds_below(mp);
      if (lhs >= std::max(0, mr - i) - std::max(0, mp - j)) return true;
    }
  }
  return false;
}

// Condition (4): the pair (x, y), both non-empty, is forbidden.
inline bool pair_violates_four(const AlgebraSpec &spec, const PairView &x, const PairView &y) {
  const int n = spec.rank, i = x.center, j = y.center, s = x.s(), t = y.s();
  for (int p = 1; p <= s; ++p)
    for (int r = 1; r <= t; ++r) {
      if (!(x.second(p) >= y.second(r) && y.second(r) >= n)) continue;
      const int mp = 2 * n - x.second(p);
      const int mr = 2 * n - y.second(r);
      if (!bar_clause(spec, mp, y) || !bar_clause(spec, mr, y)) continue;
      const int between_seconds = static_cast<int>(
          std::count_if(y.seconds.begin(), y.seconds.end(), [&](int a) { return mp <= a && a < mr; }));
      const int between_firsts = static_cast<int>(
          std::count_if(y.firsts.begin(), y.firsts.end(), [&](int a) { return mp <= a && a < mr; }));
      const int lhs = (i - j) + (t - s) + (p - r) + between_seconds - between_firsts;
      if (lhs >= std::max(0, mr - j) - std::max(0, mp - j)) return true;
    }
  return false;
}

inline bool layout_matches(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout) {
  if (x.size() != layout.k()) return false;
  for (std::size_t q = 0; q < x.size(); ++q) {
    const Component &c = x.components()[q];
    if (c.is_zero() || c.center() != layout.centers[q] || !validate_component(spec, c)) return false;
  }
  return true;
}

inline bool members_common(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout, bool type_c) {
  if (!layout_matches(spec, x, layout)) return false;
  const auto &cs = x.components();
  for (std::size_t q = 0; q + 1 < cs.size(); ++q) {
    const bool left_empty = cs[q].is_empty_seq(), right_empty = cs[q + 1].is_empty_seq();
    const PairView a(spec, cs[q]), b(spec, cs[q + 1]);
    if (!left_empty && !right_empty && !pair_condition_one(a, b)) return false;
    if (left_empty && !right_empty && a.center >= b.first(b.s())) return false;
    if (type_c) {
      if (!left_empty && pair_violates_three(spec, a, b)) return false;
      if (!left_empty && !right_empty && pair_violates_four(spec, a, b)) return false;
    }
  }
  return true;
}

} // namespace detail

/// Explicit description of R(lambda) in type A.
inline bool typeA_member(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout) {
  if (spec.family != Family::A) throw std::invalid_argument("typeA_member needs type A");
  return detail::members_common(spec, x, layout, false);
}

/// Explicit description of R(lambda) in type C.
inline bool typeC_member(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout) {
  if (spec.family != Family::C) throw std::invalid_argument("typeC_member needs type C");
  return detail::members_common(spec, x, layout, true);
}

inline bool member(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout) {
  return spec.family == Family::A ? typeA_member(spec, x, layout) : typeC_member(spec, x, layout);
}

/// Every tuple of valid components whose centers follow the layout.
inline std::vector<SeqElement> enumerate_candidates(const AlgebraSpec &spec, const LambdaLayout &layout) {
  std::vector<std::vector<Component>> per_center(static_cast<std::size_t>(spec.rank) + 1);
  for (int i = 1; i <= spec.rank; ++i) per_center[static_cast<std::size_t>(i)] = enumerate_components(spec, i);
  std::vector<SeqElement> out;
  std::vector<Component> cur;
  auto rec = [&](auto &&self, std::size_t q) -> void {
    if (q == layout.k()) {
      out.emplace_back(cur);
      return;
    }
    for (const auto &c : per_center[static_cast<std::size_t>(layout.centers[q])]) {
      cur.push_back(c);
      self(self, q + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

using SeqTensor = std::pair<SeqElement, SeqElement>;

/// R(omega_i) -> R(omega_{i-1}) (x) R(omega_1) in type C, i >= 2.
inline SeqTensor eta(const AlgebraSpec &spec, const SeqElement &x) {
  if (spec.family != Family::C) throw std::invalid_argument("eta is defined in type C");
  if (x.size() != 1 || x.components().front().is_zero()) throw std::invalid_argument("eta needs a single component");
  const Component &c = x.components().front();
  const int i = c.center();
  if (i < 2) throw std::invalid_argument("eta needs center >= 2");
  if (!fundamental_member(spec, x, i)) throw std::invalid_argument("eta input is not a valid component");
  const auto &ps = c.pairs();
  const std::size_t s = ps.size();
  auto tail = [](Letter second) { return SeqElement{Component(1, {{1, second}})}; };
  if (s == 0) return {SeqElement{Component::empty(i - 1)}, tail(Letter(i - 1))};
  if (s == 1 && ps[0].first == i) return {SeqElement{Component::empty(i - 1)}, tail(ps[0].second)};
  std::vector<LetterPair> left;
  if (ps[0].first != i) left.push_back({ps[0].first, Letter(i - 1)});
  for (std::size_t r = 1; r < s; ++r) left.push_back({ps[r].first, ps[r - 1].second});
  return {SeqElement{Component(i - 1, std::move(left))}, tail(ps[s - 1].second)};
}

/// x -> (x_1, ..., x_{k-1}) (x) x_k
inline SeqTensor split(const AlgebraSpec &spec, const SeqElement &x, const LambdaLayout &layout) {
  if (layout.k() <= 1) throw std::invalid_argument("split needs at least two components");
  if (x.size() != layout.k()) throw std::invalid_argument("element does not follow the layout");
  (void)spec;
  return {x.prefix(layout.k() - 1), SeqElement{x.components().back()}};
}

} // namespace intseq
