#pragma once

// Abstract crystal machinery shared by every realization in the library:
// connected-component generation, axiom checking, tensor products,
// characters, and isomorphism of highest-weight crystal graphs.

#include "intseq/rootdata.hpp"

#include <algorithm>
#include <concepts>
#include <deque>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace intseq {

template <class C>
concept Crystal = requires(const C &c, const typename C::element_type &x, int l) {
  typename C::element_type;
  { c.spec() } -> std::convertible_to<AlgebraSpec>;
  { c.f(x, l) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.e(x, l) } -> std::same_as<std::optional<typename C::element_type>>;
  { c.eps(x, l) } -> std::convertible_to<int>;
  { c.phi(x, l) } -> std::convertible_to<int>;
  { c.wt(x) } -> std::convertible_to<Weight>;
  { c.serialize(x) } -> std::convertible_to<std::string>;
} && std::totally_ordered<typename C::element_type>;

struct GraphVertex {
  int id = 0;
  std::string element;
  Weight weight;
  std::vector<int> eps; ///< per color, index l-1
  std::vector<int> phi;

  bool operator==(const GraphVertex &) const = default;
};

struct GraphEdge {
  int from = 0;
  int to = 0;
  int color = 1;

  bool operator==(const GraphEdge &) const = default;
  auto operator<=>(const GraphEdge &) const = default;
};

/// A colored f-edge graph with per-vertex weight, eps and phi tables.
struct CrystalGraph {
  AlgebraSpec spec;
  std::vector<GraphVertex> vertices; ///< vertices[id].id == id
  std::vector<GraphEdge> edges;
  std::vector<int> highest;

  std::size_t size() const { return vertices.size(); }
  bool operator==(const CrystalGraph &) const = default;
};

template <class E> struct GeneratedComponent {
  CrystalGraph graph;
  std::vector<E> elements; ///< elements[id]
};

class CapExceeded : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t default_vertex_cap = 1'000'000;

/// Breadth-first closure of {seed} under every f_l and e_l. Frontier vertices
/// are expanded in discovery order, colors ascending, f before e; ids are
/// discovery order.
template <Crystal C>
GeneratedComponent<typename C::element_type> generate_component(const C &crystal, const typename C::element_type &seed,
                                                                 std::size_t cap = default_vertex_cap) {
  using E = typename C::element_type;
  if (cap < 1) throw std::invalid_argument("cap must be positive");
  const AlgebraSpec spec = crystal.spec();
  const int n = spec.rank;

  GeneratedComponent<E> out;
  out.graph.spec = spec;
  std::map<E, int> ids;
  auto discover = [&](const E &x) -> int {
    auto it = ids.find(x);
    if (it != ids.end()) return it->second;
    if (out.elements.size() >= cap)
      throw CapExceeded("component exceeds the vertex cap of " + std::to_string(cap));
    const int id = static_cast<int>(out.elements.size());
    ids.emplace(x, id);
    out.elements.push_back(x);
    return id;
  };

  discover(seed);
  std::vector<GraphEdge> edges;
  for (std::size_t head = 0; head < out.elements.size(); ++head) {
    const E x = out.elements[head];
    for (int l = 1; l <= n; ++l) {
      if (auto y = crystal.f(x, l)) {
        const int to = discover(*y);
        edges.push_back({static_cast<int>(head), to, l});
      }
      if (auto y = crystal.e(x, l)) discover(*y);
    }
  }

  // Each f-edge is recorded once, from its source.
  out.graph.edges = std::move(edges);
  for (std::size_t id = 0; id < out.elements.size(); ++id) {
    const E &x = out.elements[id];
    GraphVertex v;
    v.id = static_cast<int>(id);
    v.element = crystal.serialize(x);
    v.weight = crystal.wt(x);
    bool top = true;
    for (int l = 1; l <= n; ++l) {
      v.eps.push_back(crystal.eps(x, l));
      v.phi.push_back(crystal.phi(x, l));
      if (crystal.e(x, l)) top = false;
    }
    if (top) out.graph.highest.push_back(v.id);
    out.graph.vertices.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Axioms

struct AxiomViolation {
  std::string element;
  int color = 0;
  std::string axiom; ///< "1".."7", "semiregular-e", "semiregular-f"
  std::string detail;
};

/// Checks axioms (1)-(7) and semiregularity at each element for every color.
/// An empty result means every check passed.
template <Crystal C>
std::vector<AxiomViolation> check_axioms(const C &crystal, const std::vector<typename C::element_type> &elements,
                                         std::size_t string_cap = 10'000) {
  const AlgebraSpec spec = crystal.spec();
  std::vector<AxiomViolation> report;
  for (const auto &x : elements) {
    const Weight w = crystal.wt(x);
    auto flag = [&](int l, std::string axiom, std::string detail) {
      report.push_back({crystal.serialize(x), l, std::move(axiom), std::move(detail)});
    };
    for (int l = 1; l <= spec.rank; ++l) {
      const int ex = crystal.eps(x, l), px = crystal.phi(x, l);
      if (px != ex + w[l])
        flag(l, "1", "phi=" + std::to_string(px) + " eps=" + std::to_string(ex) + " <h,wt>=" + std::to_string(w[l]));
      // phi is always finite here, so (7) only asks that eps/phi are not negative infinity.
      if (ex < 0 || px < 0) flag(l, "7", "negative eps/phi");

      const Weight alpha = simple_root(spec, l);
      if (auto y = crystal.e(x, l)) {
        if (crystal.wt(*y) != w + alpha) flag(l, "2", "wt(e x) != wt(x) + alpha");
        if (crystal.eps(*y, l) != ex - 1 || crystal.phi(*y, l) != px + 1) flag(l, "4", "eps/phi shift under e");
        auto back = crystal.f(*y, l);
        if (!back || !(*back == x)) flag(l, "6", "f(e x) != x");
      }
      if (auto y = crystal.f(x, l)) {
        if (crystal.wt(*y) != w - alpha) flag(l, "3", "wt(f x) != wt(x) - alpha");
        if (crystal.eps(*y, l) != ex + 1 || crystal.phi(*y, l) != px - 1) flag(l, "5", "eps/phi shift under f");
        auto back = crystal.e(*y, l);
        if (!back || !(*back == x)) flag(l, "6", "e(f x) != x");
      }

      auto string_length = [&](bool up) {
        std::size_t count = 0;
        auto cur = up ? crystal.e(x, l) : crystal.f(x, l);
        while (cur && count < string_cap) {
          ++count;
          cur = up ? crystal.e(*cur, l) : crystal.f(*cur, l);
        }
        return static_cast<int>(count);
      };
      if (int s = string_length(true); s != ex)
        flag(l, "semiregular-e", "eps=" + std::to_string(ex) + " but e applies " + std::to_string(s) + " times");
      if (int s = string_length(false); s != px)
        flag(l, "semiregular-f", "phi=" + std::to_string(px) + " but f applies " + std::to_string(s) + " times");
    }
  }
  return report;
}

/// A crystal read back from a CrystalGraph: f/e follow the stored edges,
/// wt/eps/phi come from the vertex tables. Elements are vertex ids.
class GraphCrystal {
public:
  using element_type = int;

  explicit GraphCrystal(const CrystalGraph &g) : graph_(&g) {
    const auto n = static_cast<std::size_t>(g.spec.rank);
    out_.assign(g.size(), std::vector<std::vector<int>>(n));
    in_.assign(g.size(), std::vector<std::vector<int>>(n));
    for (const auto &ed : g.edges) {
      check_vertex(ed.from);
      check_vertex(ed.to);
      if (ed.color < 1 || ed.color > g.spec.rank) throw std::invalid_argument("edge color out of range");
      out_[static_cast<std::size_t>(ed.from)][static_cast<std::size_t>(ed.color - 1)].push_back(ed.to);
      in_[static_cast<std::size_t>(ed.to)][static_cast<std::size_t>(ed.color - 1)].push_back(ed.from);
    }
  }

  const AlgebraSpec &spec() const { return graph_->spec; }
  std::optional<int> f(int v, int l) const { return first(out_, v, l); }
  std::optional<int> e(int v, int l) const { return first(in_, v, l); }
  int eps(int v, int l) const { return vertex(v).eps.at(static_cast<std::size_t>(l - 1)); }
  int phi(int v, int l) const { return vertex(v).phi.at(static_cast<std::size_t>(l - 1)); }
  Weight wt(int v) const { return vertex(v).weight; }
  std::string serialize(int v) const { return vertex(v).element; }

  std::size_t out_degree(int v, int l) const { return out_[static_cast<std::size_t>(v)][static_cast<std::size_t>(l - 1)].size(); }
  std::size_t in_degree(int v, int l) const { return in_[static_cast<std::size_t>(v)][static_cast<std::size_t>(l - 1)].size(); }

private:
  void check_vertex(int v) const {
    if (v < 0 || static_cast<std::size_t>(v) >= graph_->size()) throw std::invalid_argument("edge endpoint out of range");
  }
  const GraphVertex &vertex(int v) const { return graph_->vertices.at(static_cast<std::size_t>(v)); }
  static std::optional<int> first(const std::vector<std::vector<std::vector<int>>> &adj, int v, int l) {
    const auto &targets = adj.at(static_cast<std::size_t>(v)).at(static_cast<std::size_t>(l - 1));
    if (targets.empty()) return std::nullopt;
    return targets.front();
  }

  const CrystalGraph *graph_;
  std::vector<std::vector<std::vector<int>>> out_, in_;
};

/// Axiom check on a stored graph: per-color in/out degrees must be at most one
/// (axiom (6) in graph form), then the operator axioms on the stored tables.
inline std::vector<AxiomViolation> check_graph_axioms(const CrystalGraph &g) {
  GraphCrystal gc(g);
  std::vector<AxiomViolation> report;
  std::vector<int> all;
  for (const auto &v : g.vertices) {
    all.push_back(v.id);
    for (int l = 1; l <= g.spec.rank; ++l)
      if (gc.out_degree(v.id, l) > 1 || gc.in_degree(v.id, l) > 1)
        report.push_back({v.element, l, "6", "more than one edge of this color at the vertex"});
  }
  auto rest = check_axioms(gc, all);
  report.insert(report.end(), rest.begin(), rest.end());
  return report;
}

// ---------------------------------------------------------------------------
// Tensor product

/// B1 (x) B2 with f acting on the left factor iff phi(b1) > eps(b2) and e
/// acting on the left factor iff phi(b1) >= eps(b2).
template <Crystal C1, Crystal C2> class TensorCrystal {
public:
  using left_type = typename C1::element_type;
  using right_type = typename C2::element_type;
  using element_type = std::pair<left_type, right_type>;

  TensorCrystal(C1 left, C2 right) : left_(std::move(left)), right_(std::move(right)) {
    if (!(AlgebraSpec(left_.spec()) == AlgebraSpec(right_.spec())))
      throw std::invalid_argument("tensor factors have different algebra specs");
  }

  AlgebraSpec spec() const { return left_.spec(); }
  const C1 &left() const { return left_; }
  const C2 &right() const { return right_; }

  std::optional<element_type> f(const element_type &b, int l) const {
    if (left_.phi(b.first, l) > right_.eps(b.second, l)) {
      auto y = left_.f(b.first, l);
      if (!y) return std::nullopt;
      return element_type{std::move(*y), b.second};
    }
    auto y = right_.f(b.second, l);
    if (!y) return std::nullopt;
    return element_type{b.first, std::move(*y)};
  }

  std::optional<element_type> e(const element_type &b, int l) const {
    if (left_.phi(b.first, l) >= right_.eps(b.second, l)) {
      auto y = left_.e(b.first, l);
      if (!y) return std::nullopt;
      return element_type{std::move(*y), b.second};
    }
    auto y = right_.e(b.second, l);
    if (!y) return std::nullopt;
    return element_type{b.first, std::move(*y)};
  }

  Weight wt(const element_type &b) const { return left_.wt(b.first) + right_.wt(b.second); }

  int phi(const element_type &b, int l) const {
    const int p1 = left_.phi(b.first, l), p2 = right_.phi(b.second, l), e2 = right_.eps(b.second, l);
    return std::max(p2, p1 + p2 - e2);
  }

  int eps(const element_type &b, int l) const {
    const int e1 = left_.eps(b.first, l), e2 = right_.eps(b.second, l), p1 = left_.phi(b.first, l);
    return std::max(e1, e1 + e2 - p1);
  }

  std::string serialize(const element_type &b) const {
    return left_.serialize(b.first) + " (x) " + right_.serialize(b.second);
  }

private:
  C1 left_;
  C2 right_;
};

template <Crystal C1, Crystal C2> TensorCrystal<C1, C2> tensor(C1 a, C2 b) {
  return TensorCrystal<C1, C2>(std::move(a), std::move(b));
}

// ---------------------------------------------------------------------------
// Characters and isomorphism

using Character = std::map<Weight, int>;

inline Character character(const CrystalGraph &g) {
  Character ch;
  for (const auto &v : g.vertices) ++ch[v.weight];
  return ch;
}

/// "[w]xm" terms, weights in decreasing lexicographic order.
inline std::string format_character(const Character &ch) {
  std::string s;
  for (auto it = ch.rbegin(); it != ch.rend(); ++it) {
    if (!s.empty()) s += " ";
    s += it->first.str() + "x" + std::to_string(it->second);
  }
  return s;
}

struct IsomorphismResult {
  bool ok = false;
  std::vector<int> mapping; ///< mapping[id in A] = id in B, when ok
  std::string failure;
  int failed_vertex = -1; ///< vertex of A where the traversal diverged
  int failed_color = 0;

  explicit operator bool() const { return ok; }
};

namespace detail {

inline int unique_highest(const CrystalGraph &g, const char *which) {
  if (g.highest.size() != 1)
    throw std::invalid_argument(std::string("graph ") + which + " has " + std::to_string(g.highest.size()) +
                                " highest vertices, expected exactly one");
  return g.highest.front();
}

} // namespace detail

/// Highest-weight crystals generated from a unique highest vertex are rigid:
/// a color-preserving map is fixed by the image of that vertex. Walks both
/// graphs in parallel along f- and e-edges and reports the first mismatch.
inline IsomorphismResult isomorphism(const CrystalGraph &a, const CrystalGraph &b) {
  IsomorphismResult res;
  const int ha = detail::unique_highest(a, "A");
  const int hb = detail::unique_highest(b, "B");
  if (!(a.spec == b.spec)) {
    res.failure = "algebra specs differ";
    return res;
  }
  if (a.vertices[static_cast<std::size_t>(ha)].weight != b.vertices[static_cast<std::size_t>(hb)].weight) {
    res.failure = "highest weights differ: " + a.vertices[static_cast<std::size_t>(ha)].weight.str() + " vs " +
                  b.vertices[static_cast<std::size_t>(hb)].weight.str();
    res.failed_vertex = ha;
    return res;
  }
  if (a.size() != b.size()) {
    res.failure = "vertex counts differ: " + std::to_string(a.size()) + " vs " + std::to_string(b.size());
    return res;
  }

  GraphCrystal ca(a), cb(b);
  std::vector<int> map(a.size(), -1);
  std::vector<char> used(b.size(), 0);
  map[static_cast<std::size_t>(ha)] = hb;
  used[static_cast<std::size_t>(hb)] = 1;
  std::deque<int> queue{ha};
  auto fail = [&](int v, int l, std::string why) {
    res.failure = std::move(why);
    res.failed_vertex = v;
    res.failed_color = l;
    return res;
  };
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    const int w = map[static_cast<std::size_t>(v)];
    for (int l = 1; l <= a.spec.rank; ++l) {
      for (int dir = 0; dir < 2; ++dir) {
        auto x = dir == 0 ? ca.f(v, l) : ca.e(v, l);
        auto y = dir == 0 ? cb.f(w, l) : cb.e(w, l);
        if (x.has_value() != y.has_value())
          return fail(v, l, std::string(dir == 0 ? "f" : "e") + "-edge present in only one graph at " +
                                a.vertices[static_cast<std::size_t>(v)].element);
        if (!x) continue;
        int &slot = map[static_cast<std::size_t>(*x)];
        if (slot == -1) {
          if (used[static_cast<std::size_t>(*y)]) return fail(v, l, "map is not injective");
          slot = *y;
          used[static_cast<std::size_t>(*y)] = 1;
          queue.push_back(*x);
        } else if (slot != *y) {
          return fail(v, l, "inconsistent image along color " + std::to_string(l));
        }
      }
    }
  }
  for (std::size_t v = 0; v < a.size(); ++v) {
    if (map[v] == -1) return fail(static_cast<int>(v), 0, "graph A is not connected");
    const auto &va = a.vertices[v];
    const auto &vb = b.vertices[static_cast<std::size_t>(map[v])];
    if (va.weight != vb.weight || va.eps != vb.eps || va.phi != vb.phi)
      return fail(static_cast<int>(v), 0, "wt/eps/phi differ at " + va.element);
  }
  res.ok = true;
  res.mapping = std::move(map);
  return res;
}

} // namespace intseq
