#pragma once

#include "intseq/seqcrystal.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

namespace testing_support {

using namespace intseq;

/// Dimension from the classical product formula in epsilon-coordinates,
/// written independently of the root data in the library.
///   A_n: l_i = m_i + ... + m_n, a_i = l_i + n + 1 - i,  prod_{i<j} (a_i - a_j) / (j - i)
///   C_n: a_i = l_i + n + 1 - i, r_i = n + 1 - i,  prod_{i<j} (a_i^2 - a_j^2) / (r_i^2 - r_j^2) * prod_i a_i / r_i
inline std::uint64_t classical_dim(const AlgebraSpec &spec, const std::vector<int> &m) {
  const int n = spec.rank;
  const int parts = spec.family == Family::A ? n + 1 : n;
  std::vector<long long> l(static_cast<std::size_t>(parts) + 1, 0);
  for (int i = 1; i <= parts; ++i) {
    long long s = 0;
    for (int j = i; j <= n; ++j) s += m[static_cast<std::size_t>(j - 1)];
    l[static_cast<std::size_t>(i)] = i <= n ? s : 0;
  }
  long double num = 1, den = 1;
  auto a = [&](int i) { return l[static_cast<std::size_t>(i)] + parts + 1 - i; };
  auto r = [&](int i) { return static_cast<long long>(parts + 1 - i); };
  for (int i = 1; i <= parts; ++i)
    for (int j = i + 1; j <= parts; ++j) {
      if (spec.family == Family::A) {
        num *= static_cast<long double>(a(i) - a(j));
        den *= static_cast<long double>(j - i);
      } else {
        num *= static_cast<long double>(a(i) * a(i) - a(j) * a(j));
        den *= static_cast<long double>(r(i) * r(i) - r(j) * r(j));
      }
    }
  if (spec.family == Family::C)
    for (int i = 1; i <= parts; ++i) {
      num *= static_cast<long double>(a(i));
      den *= static_cast<long double>(r(i));
    }
  return static_cast<std::uint64_t>(num / den + 0.5L);
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t v = 1;
  for (int i = 1; i <= k; ++i) v = v * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
  return v;
}

/// All m with sum(m) <= total.
inline std::vector<Weight> weights_up_to(int rank, int total) {
  std::vector<Weight> out;
  std::vector<int> m(static_cast<std::size_t>(rank), 0);
  auto rec = [&](auto &&self, int pos, int left) -> void {
    if (pos == rank) {
      out.emplace_back(m);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      m[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, left - v);
    }
    m[static_cast<std::size_t>(pos)] = 0;
  };
  rec(rec, 0, total);
  return out;
}

/// The algebra/weight pairs of the acceptance scale: sum(m) <= 3 on A1..A3, <= 2 on C2, C3.
inline std::vector<std::pair<AlgebraSpec, Weight>> acceptance_cases() {
  std::vector<std::pair<AlgebraSpec, Weight>> out;
  for (int n = 1; n <= 3; ++n)
    for (const auto &w : weights_up_to(n, 3)) out.emplace_back(AlgebraSpec(Family::A, n), w);
  for (int n = 2; n <= 3; ++n)
    for (const auto &w : weights_up_to(n, 2)) out.emplace_back(AlgebraSpec(Family::C, n), w);
  return out;
}

/// Uniform choices over the valid components of each center; elements of 1..max_len
/// components, each position Zero with probability zero_rate.
class RandomElements {
public:
  RandomElements(const AlgebraSpec &spec, std::uint32_t seed, double zero_rate = 0.15, int max_len = 4)
      : spec_(spec), rng_(seed), zero_rate_(zero_rate), max_len_(max_len) {
    for (int i = 1; i <= spec.rank; ++i) pool_[i] = enumerate_components(spec, i);
  }

  SeqElement next() {
    std::uniform_int_distribution<int> len(1, max_len_);
    std::uniform_int_distribution<int> center(1, spec_.rank);
    std::bernoulli_distribution zero(zero_rate_);
    std::vector<Component> comps;
    const int k = len(rng_);
    for (int q = 0; q < k; ++q) {
      if (zero(rng_)) {
        comps.push_back(Component::zero());
        continue;
      }
      const auto &pool = pool_[center(rng_)];
      std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
      comps.push_back(pool[pick(rng_)]);
    }
    return SeqElement(std::move(comps));
  }

private:
  AlgebraSpec spec_;
  std::mt19937 rng_;
  double zero_rate_;
  int max_len_;
  std::map<int, std::vector<Component>> pool_;
};

} // namespace testing_support
