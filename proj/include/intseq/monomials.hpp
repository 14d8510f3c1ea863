#pragma once

// Nakajima monomials: Laurent monomials in Y_i(n) with the crystal structure
// given by prefix sums of the color-l exponents and multiplication by A_l(n).

#include "intseq/crystalcore.hpp"
#include "intseq/rootdata.hpp"
#include "intseq/sequences.hpp"

#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intseq {

/// Finitely supported exponents y_i(n); zero exponents are never stored.
class Monomial {
public:
  using Key = std::pair<int, int>; ///< (color i, shift n)

  Monomial() = default;

  static Monomial Y(int i, int n, int power = 1) {
    Monomial m;
    m.add(i, n, power);
    return m;
  }

  int exponent(int i, int n) const {
    auto it = exps_.find({i, n});
    return it == exps_.end() ? 0 : it->second;
  }

  const std::map<Key, int> &exponents() const { return exps_; }
  bool is_one() const { return exps_.empty(); }

  void add(int i, int n, int power) {
    if (power == 0) return;
    int &slot = exps_[{i, n}];
    slot += power;
    if (slot == 0) exps_.erase({i, n});
  }

  /// this * other^power
  Monomial times(const Monomial &other, int power = 1) const {
    Monomial out = *this;
    for (const auto &[k, v] : other.exps_) out.add(k.first, k.second, v * power);
    return out;
  }

  friend Monomial operator*(const Monomial &a, const Monomial &b) { return a.times(b, 1); }

  bool operator==(const Monomial &) const = default;
  auto operator<=>(const Monomial &) const = default;

private:
  std::map<Key, int> exps_;
};

/// Integers c_{i,j} (i != j) with c_{i,j} + c_{j,i} = 1.
class CMatrix {
public:
  /// c_{i,j} = 0 if i > j, 1 otherwise.
  static CMatrix lower_zero(int rank) {
    return CMatrix(rank, [](int i, int j) { return i > j ? 0 : 1; });
  }
  /// c_{i,j} = 0 if i < j, 1 otherwise.
  static CMatrix upper_zero(int rank) {
    return CMatrix(rank, [](int i, int j) { return i < j ? 0 : 1; });
  }

  template <class F> CMatrix(int rank, F entry) : rank_(rank) {
    c_.assign(static_cast<std::size_t>(rank * rank), 0);
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        if (i != j) c_[index(i, j)] = entry(i, j);
    for (int i = 1; i <= rank; ++i)
      for (int j = 1; j <= rank; ++j)
        if (i != j && c_[index(i, j)] + c_[index(j, i)] != 1)
          throw std::invalid_argument("c matrix violates c_ij + c_ji = 1");
  }

  int rank() const { return rank_; }
  int operator()(int i, int j) const { return c_.at(index(i, j)); }

private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * rank_ + (j - 1)); }

  int rank_ = 0;
  std::vector<int> c_;
};

inline Weight mono_weight(const AlgebraSpec &spec, const Monomial &m) {
  Weight w(static_cast<std::size_t>(spec.rank));
  for (const auto &[k, v] : m.exponents()) {
    if (k.first < 1 || k.first > spec.rank) throw std::invalid_argument("monomial variable outside the rank");
    w.coeffs[static_cast<std::size_t>(k.first - 1)] += v;
  }
  return w;
}

namespace detail {

inline std::vector<std::pair<int, int>> color_exponents(const Monomial &m, int l) {
  std::vector<std::pair<int, int>> out; // (n, y_l(n)) ascending in n
  for (const auto &[k, v] : m.exponents())
    if (k.first == l) out.emplace_back(k.second, v);
  return out;
}

struct PrefixMax {
  int value = 0;
  std::optional<int> at;
};

// max_n sum_{k <= n} y_l(k) and the least n attaining it (when positive)
inline PrefixMax prefix_max(const Monomial &m, int l) {
  PrefixMax best;
  int s = 0;
  for (const auto &[n, v] : color_exponents(m, l)) {
    s += v;
    if (s > best.value) best = {s, n};
  }
  return best;
}

// max_n -sum_{k > n} y_l(k) and the greatest n attaining it (when positive)
inline PrefixMax suffix_max(const Monomial &m, int l) {
  PrefixMax best;
  auto ys = color_exponents(m, l);
  int s = 0;
  for (auto it = ys.rbegin(); it != ys.rend(); ++it) {
    s -= it->second;
    if (s > best.value) best = {s, it->first - 1};
  }
  return best;
}

} // namespace detail

inline int mono_phi(const Monomial &m, int l) { return detail::prefix_max(m, l).value; }
inline int mono_eps(const Monomial &m, int l) { return detail::suffix_max(m, l).value; }

inline int nf(const Monomial &m, int l) {
  auto p = detail::prefix_max(m, l);
  if (!p.at) throw std::domain_error("n_f is undefined when phi_l = 0");
  return *p.at;
}

inline int ne(const Monomial &m, int l) {
  auto p = detail::suffix_max(m, l);
  if (!p.at) throw std::domain_error("n_e is undefined when eps_l = 0");
  return *p.at;
}

/// A_l(n) = Y_l(n) Y_l(n+1) prod_{i != l} Y_i(n + c_{i,l})^{<alpha_i^vee, alpha_l>}.
inline Monomial a_monomial(const AlgebraSpec &spec, const CMatrix &c, int l, int n) {
  if (c.rank() != spec.rank) throw std::invalid_argument("c matrix rank mismatch");
  Monomial m = Monomial::Y(l, n) * Monomial::Y(l, n + 1);
  for (int i = 1; i <= spec.rank; ++i)
    if (i != l) m.add(i, n + c(i, l), cartan_entry(spec, i, l));
  return m;
}

inline std::optional<Monomial> mono_f(const AlgebraSpec &spec, const CMatrix &c, const Monomial &m, int l) {
  auto p = detail::prefix_max(m, l);
  if (p.value == 0) return std::nullopt;
  return m.times(a_monomial(spec, c, l, *p.at), -1);
}

inline std::optional<Monomial> mono_e(const AlgebraSpec &spec, const CMatrix &c, const Monomial &m, int l) {
  auto p = detail::suffix_max(m, l);
  if (p.value == 0) return std::nullopt;
  return m.times(a_monomial(spec, c, l, *p.at), 1);
}

/// Y_1(1)^{m_1} ... Y_n(1)^{m_n}
inline Monomial highest_monomial(const Weight &lambda) {
  if (!lambda.is_dominant()) throw std::invalid_argument("highest_monomial needs a dominant weight, got " + lambda.str());
  Monomial m;
  for (int i = 1; i <= static_cast<int>(lambda.size()); ++i) m.add(i, 1, lambda[i]);
  return m;
}

class MonomialCrystal {
public:
  using element_type = Monomial;

  MonomialCrystal(AlgebraSpec spec, CMatrix c) : spec_(spec), c_(std::move(c)) {
    if (c_.rank() != spec_.rank) throw std::invalid_argument("c matrix rank mismatch");
  }
  explicit MonomialCrystal(AlgebraSpec spec) : MonomialCrystal(spec, CMatrix::lower_zero(spec.rank)) {}

  const AlgebraSpec &spec() const { return spec_; }
  std::optional<Monomial> f(const Monomial &m, int l) const { return mono_f(spec_, c_, m, l); }
  std::optional<Monomial> e(const Monomial &m, int l) const { return mono_e(spec_, c_, m, l); }
  int eps(const Monomial &m, int l) const { return mono_eps(m, l); }
  int phi(const Monomial &m, int l) const { return mono_phi(m, l); }
  Weight wt(const Monomial &m) const { return mono_weight(spec_, m); }
  std::string serialize(const Monomial &m) const;

private:
  AlgebraSpec spec_;
  CMatrix c_;
};

// ---------------------------------------------------------------------------
// Type C explicit description

/// X_i(m) = Y_{i-1}(m+1)^{-1} Y_i(m),  X_{bar i}(m) = Y_{i-1}(m+n-i+1) Y_i(m+n-i+1)^{-1},
/// with Y_0 = 1. The letter ranges over 1 < ... < n < bar(n) < ... < bar(1).
inline Monomial x_variable(const AlgebraSpec &spec, const Letter &t, int m) {
  if (spec.family != Family::C) throw std::invalid_argument("x_variable is only defined in type C");
  const int n = spec.rank;
  const int i = t.value;
  if (i < 1 || i > n) throw std::invalid_argument("letter " + t.str() + " outside the monomial alphabet");
  Monomial out;
  if (!t.barred) {
    if (i > 1) out.add(i - 1, m + 1, -1);
    out.add(i, m, 1);
  } else {
    const int shift = m + (n - i + 1);
    if (i > 1) out.add(i - 1, shift, 1);
    out.add(i, shift, -1);
  }
  return out;
}

/// Rows j = 1..n of lengths alpha_j = m_j + ... + m_n.
using Filling = std::vector<std::vector<Letter>>;

namespace detail {

inline std::vector<Letter> monomial_alphabet(const AlgebraSpec &spec) {
  std::vector<Letter> out;
  for (int v = 1; v <= spec.rank; ++v) out.emplace_back(v);
  for (int v = spec.rank; v >= 1; --v) out.emplace_back(v, true);
  return out;
}

inline std::vector<int> row_lengths(const AlgebraSpec &spec, const Weight &lambda) {
  if (spec.family != Family::C) throw std::invalid_argument("the filling description is for type C");
  if (lambda.size() != static_cast<std::size_t>(spec.rank)) throw std::invalid_argument("weight length does not match rank");
  if (!lambda.is_dominant()) throw std::invalid_argument("weight must be dominant");
  std::vector<int> alpha(static_cast<std::size_t>(spec.rank), 0);
  int acc = 0;
  for (int j = spec.rank; j >= 1; --j) {
    acc += lambda[j];
    alpha[static_cast<std::size_t>(j - 1)] = acc;
  }
  return alpha;
}

// Visits every filling with rows weakly decreasing and columns strictly
// decreasing downward; the visitor returns true to stop.
template <class Visit> bool for_each_filling(const AlgebraSpec &spec, const Weight &lambda, Visit &&visit) {
  const auto alpha = row_lengths(spec, lambda);
  const auto letters = monomial_alphabet(spec);
  Filling filling(alpha.size());
  std::vector<Monomial> partial(alpha.size() + 1);

  auto fill = [&](auto &&self, std::size_t row, std::size_t col) -> bool {
    if (row == alpha.size()) return visit(filling, partial[row]);
    if (col == static_cast<std::size_t>(alpha[row])) {
      partial[row + 1] = partial[row];
      for (const Letter &t : filling[row]) partial[row + 1] = partial[row + 1] * x_variable(spec, t, static_cast<int>(row) + 1);
      return self(self, row + 1, 0);
    }
    for (const Letter &t : letters) {
      if (col > 0 && filling[row][col - 1] < t) continue;
      if (row > 0 && !(t < filling[row - 1][col])) continue;
      filling[row].push_back(t);
      if (self(self, row, col + 1)) return true;
      filling[row].pop_back();
    }
    return false;
  };
  return fill(fill, 0, 0);
}

} // namespace detail

/// Every monomial X_{t_{1,1}}(1) ... X_{t_{n,alpha_n}}(n) over admissible fillings.
inline std::set<Monomial> prop_iiii_monomials(const AlgebraSpec &spec, const Weight &lambda) {
  std::set<Monomial> out;
  detail::for_each_filling(spec, lambda, [&](const Filling &, const Monomial &m) {
    out.insert(m);
    return false;
  });
  return out;
}

/// An admissible filling whose product is m, if one exists.
inline std::optional<Filling> find_filling(const AlgebraSpec &spec, const Monomial &m, const Weight &lambda) {
  std::optional<Filling> found;
  detail::for_each_filling(spec, lambda, [&](const Filling &f, const Monomial &prod) {
    if (prod == m) found = f;
    return found.has_value();
  });
  return found;
}

inline bool prop_iiii_member(const AlgebraSpec &spec, const Monomial &m, const Weight &lambda) {
  return find_filling(spec, m, lambda).has_value();
}

// ---------------------------------------------------------------------------
// Text form: "Y1(2)^-1 Y2(1)", "1" for the empty monomial.

inline std::string to_string(const Monomial &m) {
  if (m.is_one()) return "1";
  std::string s;
  for (const auto &[k, v] : m.exponents()) {
    if (!s.empty()) s += " ";
    s += "Y" + std::to_string(k.first) + "(" + std::to_string(k.second) + ")";
    if (v != 1) s += "^" + std::to_string(v);
  }
  return s;
}

inline std::string MonomialCrystal::serialize(const Monomial &m) const { return to_string(m); }

inline Monomial parse_monomial(const std::string &text) {
  std::size_t start = text.find_first_not_of(' ');
  if (start == std::string::npos) throw ParseError("empty monomial string");
  if (text.substr(start) == "1") return {};
  detail::Cursor cur{text, start};
  Monomial m;
  while (!cur.done()) {
    cur.expect('Y');
    const int i = cur.integer();
    cur.expect('(');
    const int n = cur.integer();
    cur.expect(')');
    int power = 1;
    if (cur.peek() == '^') {
      ++cur.pos;
      power = cur.integer();
    }
    if (i < 1) cur.fail("variable index must be positive");
    m.add(i, n, power);
    while (cur.peek() == ' ') ++cur.pos;
  }
  return m;
}

} // namespace intseq
