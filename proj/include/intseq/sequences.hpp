#pragma once

// Components of R^infinity: a center i together with nested letter pairs
//   i_s < ... < i_1 <= i <= i'_1 < ... < i'_s   (and i'_r <= bar(i_r) in type C),
// the six per-color conditions (a), (a'), (b), (c), (d), (d') and the
// rewrite maps theta_l / rho_l built on them.

#include "intseq/rootdata.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace intseq {

struct LetterPair {
  int first = 1; ///< unbarred
  Letter second;

  bool operator==(const LetterPair &) const = default;
  auto operator<=>(const LetterPair &) const = default;
};

/// Either the zero marker or an element of R^i_s. The empty pair list is emptyset_i.
class Component {
public:
  Component() = default; // zero
  Component(int center, std::vector<LetterPair> pairs) : zero_(false), center_(center), pairs_(std::move(pairs)) {}

  static Component zero() { return {}; }
  static Component empty(int center) { return {center, {}}; }

  bool is_zero() const { return zero_; }
  bool is_empty_seq() const { return !zero_ && pairs_.empty(); }
  int center() const { return center_; }
  const std::vector<LetterPair> &pairs() const { return pairs_; }
  std::size_t length() const { return pairs_.size(); }

  bool operator==(const Component &) const = default;
  auto operator<=>(const Component &) const = default;

private:
  bool zero_ = true;
  int center_ = 0;
  std::vector<LetterPair> pairs_;
};

inline bool validate_component(const AlgebraSpec &spec, const Component &c) {
  if (c.is_zero()) return true;
  const int i = c.center();
  if (i < 1 || i > spec.rank) return false;
  const auto &ps = c.pairs();
  for (std::size_t r = 0; r < ps.size(); ++r) {
    const int a = ps[r].first;
    const Letter &b = ps[r].second;
    if (a < 1 || a > i) return false;
    if (!in_alphabet(spec, b) || b < Letter(i)) return false;
    if (r > 0 && !(a < ps[r - 1].first && ps[r - 1].second < b)) return false;
    if (spec.family == Family::C && bar(spec, Letter(a)) < b) return false;
  }
  return true;
}

enum class Condition { A, APrime, B, C, D, DPrime };

namespace detail {

inline bool has_first(const Component &c, int v) {
  return std::any_of(c.pairs().begin(), c.pairs().end(), [&](const LetterPair &p) { return p.first == v; });
}

inline bool has_second(const Component &c, const Letter &x) {
  return std::any_of(c.pairs().begin(), c.pairs().end(), [&](const LetterPair &p) { return p.second == x; });
}

/// bar(v) for an unbarred value v in the condition formulas. Absent in type A
/// and for v = n + 1, so membership tests on it are false.
inline std::optional<Letter> bar_of(const AlgebraSpec &spec, int v) {
  if (spec.family != Family::C || v < 1 || v > spec.rank) return std::nullopt;
  return bar(spec, Letter(v));
}

inline bool has_second(const Component &c, const std::optional<Letter> &x) { return x && has_second(c, *x); }

// The case split on l versus the center shared by (b), (d) and (d').
inline bool bd_case(const Component &c, int l, bool conj) {
  const int i = c.center();
  if (l < i) {
    bool p = !has_first(c, l + 1), q = has_first(c, l);
    return conj ? (p && q) : (p || q);
  }
  if (l > i) {
    bool p = !has_second(c, Letter(l - 1)), q = has_second(c, Letter(l));
    return conj ? (p && q) : (p || q);
  }
  if (c.pairs().empty()) return false;
  const auto &inner = c.pairs().front();
  bool p = inner.first == l, q = inner.second == Letter(l);
  return conj ? (p && q) : (p || q);
}

} // namespace detail

/// Literal evaluation of the condition `which` for color l on a Seq component.
/// In type C with l = n: (b), (d), (d') are false and the trailing clause of (c) holds.
inline bool condition(const AlgebraSpec &spec, const Component &c, int l, Condition which) {
  using namespace detail;
  if (c.is_zero()) throw std::invalid_argument("condition on zero component");
  if (l < 1 || l > spec.rank) throw std::out_of_range("color out of range");
  const int i = c.center();
  const int n = spec.rank;
  const bool l_present = has_first(c, l) || has_second(c, Letter(l));
  const auto bar_l = bar_of(spec, l);
  const auto bar_l1 = bar_of(spec, l + 1);
  const bool has_bar_l = has_second(c, bar_l);
  const bool has_bar_l1 = has_second(c, bar_l1);

  switch (which) {
  case Condition::A:
  case Condition::APrime: {
    if (l_present) return false;
    if (l < i && !has_first(c, l + 1)) return false;
    if (l > i && !has_second(c, Letter(l - 1))) return false;
    return which == Condition::A ? (has_bar_l1 || !has_bar_l) : (has_bar_l1 && !has_bar_l);
  }
  case Condition::C: {
    if (!l_present) return false;
    if (l < i && has_first(c, l + 1)) return false;
    if (l > i && has_second(c, Letter(l - 1))) return false;
    if (l == i && (c.pairs().empty() || c.pairs().front() != LetterPair{l, Letter(l)})) return false;
    if (spec.family == Family::C && l == n) return true;
    return has_bar_l1 || !has_bar_l;
  }
  case Condition::B:
    if (has_bar_l || !has_bar_l1) return false;
    return bd_case(c, l, false);
  case Condition::D:
  case Condition::DPrime:
    if (spec.family == Family::C && l == n) return false;
    if (!has_bar_l || has_bar_l1) return false;
    return bd_case(c, l, which == Condition::DPrime);
  }
  return false;
}

/// Contribution of a component to sigma (phi-like score): (a) or (b), plus (a').
inline int raise_score(const AlgebraSpec &spec, const Component &c, int l) {
  return int(condition(spec, c, l, Condition::A) || condition(spec, c, l, Condition::B)) +
         int(condition(spec, c, l, Condition::APrime));
}

/// Contribution of a component to tau (epsilon-like score): (c) or (d), plus (d').
inline int lower_score(const AlgebraSpec &spec, const Component &c, int l) {
  return int(condition(spec, c, l, Condition::C) || condition(spec, c, l, Condition::D)) +
         int(condition(spec, c, l, Condition::DPrime));
}

namespace detail {

inline Component replace_first(const Component &c, int from, int to) {
  auto ps = c.pairs();
  for (auto &p : ps)
    if (p.first == from) p.first = to;
  return {c.center(), std::move(ps)};
}

inline Component replace_second(const Component &c, const Letter &from, const Letter &to) {
  auto ps = c.pairs();
  for (auto &p : ps)
    if (p.second == from) p.second = to;
  return {c.center(), std::move(ps)};
}

} // namespace detail

/// theta_l; nullopt is the crystal's 0.
inline std::optional<Component> theta(const AlgebraSpec &spec, const Component &c, int l) {
  using namespace detail;
  const int i = c.center();
  if (condition(spec, c, l, Condition::A)) {
    if (l < i) return replace_first(c, l + 1, l);
    if (l > i) return replace_second(c, Letter(l - 1), Letter(l));
    auto ps = c.pairs();
    ps.insert(ps.begin(), LetterPair{l, Letter(l)});
    return Component(i, std::move(ps));
  }
  if (condition(spec, c, l, Condition::B)) return replace_second(c, *bar_of(spec, l + 1), *bar_of(spec, l));
  return std::nullopt;
}

/// rho_l; nullopt is the crystal's 0.
inline std::optional<Component> rho(const AlgebraSpec &spec, const Component &c, int l) {
  using namespace detail;
  const int i = c.center();
  if (condition(spec, c, l, Condition::C)) {
    if (l < i) return replace_first(c, l, l + 1);
    if (l > i) return replace_second(c, Letter(l), Letter(l - 1));
    return Component(i, std::vector<LetterPair>(c.pairs().begin() + 1, c.pairs().end()));
  }
  if (condition(spec, c, l, Condition::D)) return replace_second(c, *bar_of(spec, l), *bar_of(spec, l + 1));
  return std::nullopt;
}

/// Weight of a component: the sum of alpha_{i_r, i'_r} over its pairs (0 for zero and emptyset_i).
inline Weight component_root_sum(const AlgebraSpec &spec, const Component &c) {
  Weight w(static_cast<std::size_t>(spec.rank));
  if (c.is_zero()) return w;
  for (const auto &p : c.pairs()) w += composite_root(spec, p.first, p.second);
  return w;
}

/// All valid components with the given center and at most max_pairs pairs,
/// ordered by length, then lexicographically.
inline std::vector<Component> enumerate_components(const AlgebraSpec &spec, int center, int max_pairs = -1) {
  if (center < 1 || center > spec.rank) throw std::out_of_range("center out of range");
  std::vector<int> firsts;
  for (int v = center; v >= 1; --v) firsts.push_back(v);
  std::vector<Letter> seconds;
  for (const Letter &x : alphabet(spec))
    if (!(x < Letter(center))) seconds.push_back(x);

  std::vector<Component> out;
  const int smax = std::min<int>(center, static_cast<int>(seconds.size()));
  for (int s = 0; s <= smax && (max_pairs < 0 || s <= max_pairs); ++s) {
    std::vector<LetterPair> cur;
    // choose s firsts (descending) and s seconds (ascending), zipped innermost first
    auto rec = [&](auto &&self, std::size_t fi, std::size_t si) -> void {
      if (static_cast<int>(cur.size()) == s) {
        Component c(center, cur);
        if (validate_component(spec, c)) out.push_back(std::move(c));
        return;
      }
      for (std::size_t a = fi; a < firsts.size(); ++a)
        for (std::size_t b = si; b < seconds.size(); ++b) {
          LetterPair p{firsts[a], seconds[b]};
          if (spec.family == Family::C && bar(spec, Letter(p.first)) < p.second) continue;
          cur.push_back(p);
          self(self, a + 1, b + 1);
          cur.pop_back();
        }
    };
    rec(rec, 0, 0);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Text form: "0", "E<i>", "<center>:(a,b)(a,b)..." with barred letters negative.

inline std::string to_string(const Component &c) {
  if (c.is_zero()) return "0";
  if (c.pairs().empty()) return "E" + std::to_string(c.center());
  std::string s = std::to_string(c.center()) + ":";
  for (const auto &p : c.pairs()) s += "(" + std::to_string(p.first) + "," + p.second.str() + ")";
  return s;
}

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

struct Cursor {
  const std::string &text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return done() ? '\0' : text[pos]; }

  [[noreturn]] void fail(const std::string &what) const {
    std::size_t end = pos;
    while (end < text.size() && text[end] != ',' && text[end] != ')') ++end;
    std::string token = text.substr(pos, std::max<std::size_t>(end - pos, 1));
    throw ParseError("malformed input at offset " + std::to_string(pos) + " near token '" + token + "': " + what);
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos;
  }

  int integer() {
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
    long v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + (text[pos++] - '0');
      if (v > 1000000) fail("integer too large");
    }
    return static_cast<int>(neg ? -v : v);
  }
};

inline Letter letter_from_int(int v) { return v < 0 ? Letter(-v, true) : Letter(v); }

inline Component parse_component(Cursor &cur) {
  if (cur.peek() == '0') {
    ++cur.pos;
    return Component::zero();
  }
  if (cur.peek() == 'E') {
    ++cur.pos;
    return Component::empty(cur.integer());
  }
  int center = cur.integer();
  cur.expect(':');
  std::vector<LetterPair> ps;
  do {
    cur.expect('(');
    int a = cur.integer();
    cur.expect(',');
    int b = cur.integer();
    cur.expect(')');
    if (a <= 0) cur.fail("first coordinate must be an unbarred letter");
    ps.push_back({a, letter_from_int(b)});
  } while (cur.peek() == '(');
  return {center, std::move(ps)};
}

} // namespace detail

/// Parses a component; throws ParseError naming the offending token. Does not validate.
inline Component parse_component(const std::string &text) {
  detail::Cursor cur{text};
  Component c = detail::parse_component(cur);
  if (!cur.done()) cur.fail("trailing characters");
  return c;
}

} // namespace intseq
