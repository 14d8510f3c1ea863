#pragma once

// The crystal structure on R^infinity.
//
// For a color l, every non-zero component x_{q_p} gets a raise score
// ((a) or (b), plus (a')) and a lower score ((c) or (d), plus (d')).
//   sigma^j = sum of raise scores over p <= j-1
//   tau^j   = sum of lower scores over 2 <= p <= j
// f_l acts on the last position minimizing sigma^p - tau^p, e_l on the first.

#include "intseq/sequences.hpp"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace intseq {

/// A tuple of components with finitely many non-zero entries, kept with
/// trailing zeros trimmed.
class SeqElement {
public:
  SeqElement() = default;
  explicit SeqElement(std::vector<Component> comps) : comps_(std::move(comps)) { trim(); }
  SeqElement(std::initializer_list<Component> comps) : comps_(comps) { trim(); }

  const std::vector<Component> &components() const { return comps_; }
  std::size_t size() const { return comps_.size(); }
  bool empty() const { return comps_.empty(); }

  /// Positions (0-based) of the non-zero components q_1 < ... < q_k.
  std::vector<std::size_t> nonzero_positions() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < comps_.size(); ++i)
      if (!comps_[i].is_zero()) out.push_back(i);
    return out;
  }

  std::size_t nonzero_count() const {
    return static_cast<std::size_t>(
        std::count_if(comps_.begin(), comps_.end(), [](const Component &c) { return !c.is_zero(); }));
  }

  /// p-th non-zero component, 1-based.
  const Component &nonzero(std::size_t p) const { return comps_.at(nonzero_positions().at(p - 1)); }

  SeqElement with_component(std::size_t pos, Component c) const {
    auto comps = comps_;
    comps.at(pos) = std::move(c);
    return SeqElement(std::move(comps));
  }

  SeqElement prefix(std::size_t len) const {
    return SeqElement(std::vector<Component>(comps_.begin(), comps_.begin() + static_cast<long>(std::min(len, size()))));
  }

  bool operator==(const SeqElement &) const = default;
  auto operator<=>(const SeqElement &) const = default;

private:
  void trim() {
    while (!comps_.empty() && comps_.back().is_zero()) comps_.pop_back();
  }

  std::vector<Component> comps_;
};

inline bool validate_element(const AlgebraSpec &spec, const SeqElement &x) {
  return std::all_of(x.components().begin(), x.components().end(),
                     [&](const Component &c) { return validate_component(spec, c); });
}

namespace detail {

struct Scores {
  std::vector<int> raise; ///< per non-zero component, 0-based
  std::vector<int> lower;
};

inline Scores scores(const AlgebraSpec &spec, const SeqElement &x, int l) {
  Scores s;
  for (const auto &c : x.components()) {
    if (c.is_zero()) continue;
    s.raise.push_back(raise_score(spec, c, l));
    s.lower.push_back(lower_score(spec, c, l));
  }
  return s;
}

inline int sigma_from(const Scores &s, std::size_t j) {
  int v = 0;
  for (std::size_t p = 1; p + 1 <= j; ++p) v += s.raise[p - 1];
  return v;
}

inline int tau_from(const Scores &s, std::size_t j) {
  int v = 0;
  for (std::size_t p = 2; p <= j; ++p) v += s.lower[p - 1];
  return v;
}

struct Selection {
  std::size_t f_index = 0; ///< 1-based
  std::size_t e_index = 0;
  int minimum = 0;
};

inline Selection select(const Scores &s) {
  const std::size_t k = s.raise.size();
  Selection sel;
  int sigma = 0, tau = 0;
  for (std::size_t p = 1; p <= k; ++p) {
    if (p >= 2) {
      sigma += s.raise[p - 2];
      tau += s.lower[p - 1];
    }
    const int d = sigma - tau;
    if (p == 1 || d < sel.minimum) {
      sel.minimum = d;
      sel.e_index = p;
      sel.f_index = p;
    } else if (d == sel.minimum) {
      sel.f_index = p;
    }
  }
  return sel;
}

inline void require_color(const AlgebraSpec &spec, int l) {
  if (l < 1 || l > spec.rank) throw std::out_of_range("color " + std::to_string(l) + " out of range");
}

} // namespace detail

/// sigma^j_l for 1 <= j <= k+1.
inline int sigma(const AlgebraSpec &spec, const SeqElement &x, std::size_t j, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (j < 1 || j > s.raise.size() + 1) throw std::out_of_range("sigma index out of range");
  return detail::sigma_from(s, j);
}

/// tau^j_l for 1 <= j <= k.
inline int tau(const AlgebraSpec &spec, const SeqElement &x, std::size_t j, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (j < 1 || j > s.raise.size()) throw std::out_of_range("tau index out of range");
  return detail::tau_from(s, j);
}

inline std::size_t f_index(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (s.raise.empty()) throw std::invalid_argument("f_index of the empty element");
  return detail::select(s).f_index;
}

inline std::size_t e_index(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (s.raise.empty()) throw std::invalid_argument("e_index of the empty element");
  return detail::select(s).e_index;
}

inline std::optional<SeqElement> kashiwara_f(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (s.raise.empty()) return std::nullopt;
  const std::size_t pos = x.nonzero_positions()[detail::select(s).f_index - 1];
  auto image = theta(spec, x.components()[pos], l);
  if (!image) return std::nullopt;
  return x.with_component(pos, std::move(*image));
}

inline std::optional<SeqElement> kashiwara_e(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (s.raise.empty()) return std::nullopt;
  const std::size_t pos = x.nonzero_positions()[detail::select(s).e_index - 1];
  auto image = rho(spec, x.components()[pos], l);
  if (!image) return std::nullopt;
  return x.with_component(pos, std::move(*image));
}

/// sum_i c_i omega_i - sum_j wt(x_j), c_i = number of non-zero components with center i.
inline Weight weight(const AlgebraSpec &spec, const SeqElement &x) {
  Weight w(static_cast<std::size_t>(spec.rank));
  for (const auto &c : x.components()) {
    if (c.is_zero()) continue;
    w += fundamental_weight(spec, c.center());
    w -= component_root_sum(spec, c);
  }
  return w;
}

/// The first component's own lower score (tau^2 of (emptyset_1, x_{q_1})) minus the minimum.
inline int epsilon(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  if (s.raise.empty()) return 0;
  const SeqElement probe{Component::empty(1), x.nonzero(1)};
  const int first_score = tau(spec, probe, 2, l);
  return first_score - detail::select(s).minimum;
}

/// sigma^{k+1} - tau^k minus the minimum.
inline int phi(const AlgebraSpec &spec, const SeqElement &x, int l) {
  detail::require_color(spec, l);
  auto s = detail::scores(spec, x, l);
  const std::size_t k = s.raise.size();
  if (k == 0) return 0;
  return detail::sigma_from(s, k + 1) - detail::tau_from(s, k) - detail::select(s).minimum;
}

/// r_lambda: m_1 copies of emptyset_1, then m_2 copies of emptyset_2, ...
inline SeqElement highest_element(const AlgebraSpec &spec, const Weight &lambda) {
  if (lambda.size() != static_cast<std::size_t>(spec.rank))
    throw std::invalid_argument("weight length does not match rank");
  if (!lambda.is_dominant()) throw std::invalid_argument("highest_element needs a dominant weight, got " + lambda.str());
  std::vector<Component> comps;
  for (int i = 1; i <= spec.rank; ++i)
    for (int m = 0; m < lambda[i]; ++m) comps.push_back(Component::empty(i));
  return SeqElement(std::move(comps));
}

// ---------------------------------------------------------------------------
// Text form: comma-separated components, e.g. "2:(2,2)(1,3),4:(2,4),E3".
// The empty element is the empty string.

inline std::string to_string(const SeqElement &x) {
  std::string s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i) s += ",";
    s += to_string(x.components()[i]);
  }
  return s;
}

inline SeqElement parse_element(const std::string &text) {
  if (text.empty()) return {};
  detail::Cursor cur{text};
  std::vector<Component> comps;
  comps.push_back(detail::parse_component(cur));
  while (!cur.done()) {
    cur.expect(',');
    comps.push_back(detail::parse_component(cur));
  }
  return SeqElement(std::move(comps));
}

/// Parses and validates against spec; throws ParseError on malformed or invalid input.
inline SeqElement parse_element(const AlgebraSpec &spec, const std::string &text) {
  SeqElement x = parse_element(text);
  for (const auto &c : x.components())
    if (!validate_component(spec, c))
      throw ParseError("component '" + to_string(c) + "' is not valid for " + spec.name());
  return x;
}

/// R^infinity as a crystal (see crystalcore.hpp for the interface).
class SeqCrystal {
public:
  using element_type = SeqElement;

  explicit SeqCrystal(AlgebraSpec spec) : spec_(spec) {}

  const AlgebraSpec &spec() const { return spec_; }
  std::optional<SeqElement> f(const SeqElement &x, int l) const { return kashiwara_f(spec_, x, l); }
  std::optional<SeqElement> e(const SeqElement &x, int l) const { return kashiwara_e(spec_, x, l); }
  int eps(const SeqElement &x, int l) const { return epsilon(spec_, x, l); }
  int phi(const SeqElement &x, int l) const { return intseq::phi(spec_, x, l); }
  Weight wt(const SeqElement &x) const { return weight(spec_, x); }
  std::string serialize(const SeqElement &x) const { return to_string(x); }

private:
  AlgebraSpec spec_;
};

} // namespace intseq
