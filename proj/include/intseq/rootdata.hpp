#pragma once

// Cartan data for the classical types A_n and C_n: the ordered letter
// alphabet, the bar involution, positive roots in fundamental-weight
// coordinates, and the Weyl dimension formula.

#include <compare>
#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace intseq {

enum class Family { A, C };

inline char family_char(Family f) { return f == Family::A ? 'A' : 'C'; }

inline Family parse_family(const std::string &s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "C" || s == "c") return Family::C;
  throw std::invalid_argument("unknown family '" + s + "' (expected A or C)");
}

struct AlgebraSpec {
  Family family = Family::A;
  int rank = 1;

  AlgebraSpec() = default;
  AlgebraSpec(Family f, int n) : family(f), rank(n) {
    if (n < 1 || (f == Family::C && n < 2))
      throw std::invalid_argument(std::string("invalid rank ") + std::to_string(n) + " for type " +
                                  family_char(f));
  }

  bool operator==(const AlgebraSpec &) const = default;

  std::string name() const { return family_char(family) + std::to_string(rank); }
};

/// A letter of the alphabet 1 < 2 < ... < n < bar(n-1) < ... < bar(1).
/// The order does not depend on n: unbarred letters precede barred ones and
/// barred letters are ordered by decreasing value.
struct Letter {
  int value = 1;
  bool barred = false;

  constexpr Letter() = default;
  constexpr Letter(int v, bool b = false) : value(v), barred(b) {}

  constexpr bool operator==(const Letter &) const = default;
  constexpr std::strong_ordering operator<=>(const Letter &o) const {
    if (barred != o.barred) return barred ? std::strong_ordering::greater : std::strong_ordering::less;
    return barred ? o.value <=> value : value <=> o.value;
  }

  /// Barred letters are written as negative integers.
  std::string str() const { return barred ? "-" + std::to_string(value) : std::to_string(value); }
};

inline std::ostream &operator<<(std::ostream &os, const Letter &l) { return os << l.str(); }

/// Coefficients of omega_1..omega_n.
struct Weight {
  std::vector<int> coeffs;

  Weight() = default;
  explicit Weight(std::size_t n) : coeffs(n, 0) {}
  Weight(std::initializer_list<int> c) : coeffs(c) {}
  explicit Weight(std::vector<int> c) : coeffs(std::move(c)) {}

  std::size_t size() const { return coeffs.size(); }
  /// Pairing with the simple coroot of color l (1-based).
  int operator[](int l) const { return coeffs.at(static_cast<std::size_t>(l - 1)); }

  bool is_dominant() const {
    for (int c : coeffs)
      if (c < 0) return false;
    return true;
  }

  Weight &operator+=(const Weight &o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] += o.coeffs[i];
    return *this;
  }
  Weight &operator-=(const Weight &o) {
    if (o.size() != size()) throw std::invalid_argument("weight rank mismatch");
    for (std::size_t i = 0; i < size(); ++i) coeffs[i] -= o.coeffs[i];
    return *this;
  }
  friend Weight operator+(Weight a, const Weight &b) { return a += b; }
  friend Weight operator-(Weight a, const Weight &b) { return a -= b; }
  friend Weight operator-(Weight a) {
    for (int &c : a.coeffs) c = -c;
    return a;
  }

  bool operator==(const Weight &) const = default;
  auto operator<=>(const Weight &) const = default;

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coeffs[i]);
    }
    return s + "]";
  }
};

inline std::ostream &operator<<(std::ostream &os, const Weight &w) { return os << w.str(); }

inline Weight fundamental_weight(const AlgebraSpec &spec, int i) {
  Weight w(static_cast<std::size_t>(spec.rank));
  w.coeffs.at(static_cast<std::size_t>(i - 1)) = 1;
  return w;
}

/// a_{ij} = <alpha_i^vee, alpha_j>, 1-based. Type C uses a_{n-1,n} = -2 (alpha_n long).
inline int cartan_entry(const AlgebraSpec &spec, int i, int j) {
  if (i == j) return 2;
  if (std::abs(i - j) != 1) return 0;
  if (spec.family == Family::C && i == spec.rank - 1 && j == spec.rank) return -2;
  return -1;
}

/// alpha_l in omega-coordinates (column l of the Cartan matrix).
inline Weight simple_root(const AlgebraSpec &spec, int l) {
  if (l < 1 || l > spec.rank) throw std::out_of_range("color out of range");
  Weight w(static_cast<std::size_t>(spec.rank));
  for (int i = 1; i <= spec.rank; ++i) w.coeffs[static_cast<std::size_t>(i - 1)] = cartan_entry(spec, i, l);
  return w;
}

/// Membership of a letter in the alphabet I of spec.
inline bool in_alphabet(const AlgebraSpec &spec, const Letter &x) {
  if (x.value < 1 || x.value > spec.rank) return false;
  if (!x.barred) return true;
  return spec.family == Family::C && x.value <= spec.rank - 1;
}

inline std::vector<Letter> alphabet(const AlgebraSpec &spec) {
  std::vector<Letter> out;
  for (int v = 1; v <= spec.rank; ++v) out.emplace_back(v);
  if (spec.family == Family::C)
    for (int v = spec.rank - 1; v >= 1; --v) out.emplace_back(v, true);
  return out;
}

inline Letter max_letter(const AlgebraSpec &spec) {
  return spec.family == Family::A ? Letter(spec.rank) : Letter(1, true);
}

/// n -> n, i -> bar(i), bar(i) -> i. Only defined in type C.
inline Letter bar(const AlgebraSpec &spec, const Letter &x) {
  if (spec.family != Family::C) throw std::invalid_argument("bar is only defined in type C");
  if (!in_alphabet(spec, x)) throw std::invalid_argument("letter " + x.str() + " not in alphabet");
  if (x.value == spec.rank) return x;
  return {x.value, !x.barred};
}

/// Simple-root multiplicities of alpha_{i,j}: alpha_i + ... + alpha_j for
/// unbarred j, alpha_i + ... + alpha_n + alpha_{n-1} + ... + alpha_j for barred j.
inline std::vector<int> composite_root_word(const AlgebraSpec &spec, int i, const Letter &j) {
  const int n = spec.rank;
  bool legal = i >= 1 && in_alphabet(spec, j) && i <= j.value;
  if (!legal)
    throw std::invalid_argument("illegal root pair (" + std::to_string(i) + "," + j.str() + ") for " + spec.name());
  std::vector<int> mult(static_cast<std::size_t>(n), 0);
  if (!j.barred) {
    for (int m = i; m <= j.value; ++m) ++mult[static_cast<std::size_t>(m - 1)];
  } else {
    for (int m = i; m <= n; ++m) ++mult[static_cast<std::size_t>(m - 1)];
    for (int m = j.value; m <= n - 1; ++m) ++mult[static_cast<std::size_t>(m - 1)];
  }
  return mult;
}

inline Weight composite_root(const AlgebraSpec &spec, int i, const Letter &j) {
  auto mult = composite_root_word(spec, i, j);
  Weight w(static_cast<std::size_t>(spec.rank));
  for (int m = 1; m <= spec.rank; ++m)
    for (int c = 0; c < mult[static_cast<std::size_t>(m - 1)]; ++c) w += simple_root(spec, m);
  return w;
}

/// Every positive root is alpha_{i,j} for exactly one legal pair (i, j) with
/// j <= bar(i) in type C; returned as simple-root multiplicity vectors.
inline std::vector<std::vector<int>> positive_roots(const AlgebraSpec &spec) {
  std::vector<std::vector<int>> roots;
  for (int i = 1; i <= spec.rank; ++i)
    for (const Letter &j : alphabet(spec)) {
      if (j < Letter(i)) continue;
      if (spec.family == Family::C && bar(spec, Letter(i)) < j) continue;
      roots.push_back(composite_root_word(spec, i, j));
    }
  return roots;
}

/// dim V(lambda) = prod_{alpha > 0} <lambda + rho, alpha^vee> / <rho, alpha^vee>.
inline std::uint64_t weyl_dim(const AlgebraSpec &spec, const Weight &lambda) {
  if (lambda.size() != static_cast<std::size_t>(spec.rank))
    throw std::invalid_argument("weight length does not match rank");
  if (!lambda.is_dominant()) throw std::invalid_argument("weyl_dim needs a dominant weight, got " + lambda.str());
  // Half squared lengths of the simple roots.
  std::vector<std::uint64_t> d(static_cast<std::size_t>(spec.rank), 1);
  if (spec.family == Family::C) d.back() = 2;
  std::uint64_t num = 1, den = 1;
  for (const auto &mult : positive_roots(spec)) {
    std::uint64_t a = 0, b = 0;
    for (std::size_t m = 0; m < mult.size(); ++m) {
      a += static_cast<std::uint64_t>(mult[m]) * d[m] * static_cast<std::uint64_t>(lambda.coeffs[m] + 1);
      b += static_cast<std::uint64_t>(mult[m]) * d[m];
    }
    num *= a;
    den *= b;
    std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  if (den != 1) throw std::logic_error("weyl_dim produced a non-integer");
  return num;
}

} // namespace intseq
