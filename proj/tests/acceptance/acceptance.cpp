// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "../support.hpp"
#include "intseq/crystalcore.hpp"
#include "intseq/membership.hpp"
#include "intseq/monomials.hpp"
#include "intseq/seqcrystal.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

using namespace intseq;
using testing_support::acceptance_cases;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;

  void fail(const std::string &why) {
    if (ok) note = why;
    ok = false;
  }
};

using SeqComponent = GeneratedComponent<SeqElement>;

std::string label(const AlgebraSpec &spec, const Weight &w) { return spec.name() + " " + w.str(); }

// Components of every acceptance case, generated once.
const std::vector<std::pair<std::pair<AlgebraSpec, Weight>, SeqComponent>> &components() {
  static const auto all = [] {
    std::vector<std::pair<std::pair<AlgebraSpec, Weight>, SeqComponent>> out;
    for (const auto &[spec, w] : acceptance_cases())
      out.emplace_back(std::make_pair(spec, w), generate_component(SeqCrystal(spec), highest_element(spec, w)));
    return out;
  }();
  return all;
}

std::vector<int> chain_colors(const CrystalGraph &g) {
  std::vector<int> colors;
  int v = g.highest.at(0);
  for (bool moved = true; moved;) {
    moved = false;
    for (const auto &e : g.edges)
      if (e.from == v) {
        colors.push_back(e.color);
        v = e.to;
        moved = true;
        break;
      }
  }
  return colors;
}

Outcome fundamental_chain() {
  Outcome o;
  const std::vector<std::tuple<AlgebraSpec, Weight, std::vector<int>>> cases{
      {AlgebraSpec(Family::C, 2), Weight{1, 0}, {1, 2, 1}},
      {AlgebraSpec(Family::C, 3), Weight{1, 0, 0}, {1, 2, 3, 2, 1}}};
  for (const auto &[spec, w, colors] : cases) {
    const auto g = generate_component(SeqCrystal(spec), highest_element(spec, w)).graph;
    if (g.size() != colors.size() + 1 || g.edges.size() != colors.size() || chain_colors(g) != colors)
      o.fail(spec.name() + " chain has " + std::to_string(g.size()) + " vertices");
  }
  return o;
}

Outcome worked_examples() {
  Outcome o;
  const AlgebraSpec a4(Family::A, 4), c3(Family::C, 3);
  if (kashiwara_f(a4, parse_element(a4, "2:(2,2)(1,3),4:(2,4),3:(3,3)(2,4)"), 2))
    o.fail("A4 example: f_2 is not null");
  const auto e = kashiwara_e(c3, parse_element(c3, "2:(1,-2),3:(3,3)(1,-2)"), 3);
  if (!e || to_string(*e) != "2:(1,-2),3:(1,-2)") o.fail("C3 example: e_3 gives " + (e ? to_string(*e) : "null"));
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (const auto &[key, comp] : components()) {
    const auto &[spec, w] = key;
    const auto expected = testing_support::classical_dim(spec, w.coeffs);
    if (comp.elements.size() != expected || weyl_dim(spec, w) != expected)
      o.fail(label(spec, w) + ": " + std::to_string(comp.elements.size()) + " vertices, dimension " +
             std::to_string(expected));
  }
  return o;
}

Outcome axioms() {
  Outcome o;
  for (const auto &[key, comp] : components()) {
    const auto &[spec, w] = key;
    auto report = check_axioms(SeqCrystal(spec), comp.elements);
    const auto graph_report = check_graph_axioms(comp.graph);
    report.insert(report.end(), graph_report.begin(), graph_report.end());
    if (!report.empty())
      o.fail(label(spec, w) + ": " + report.front().element + " axiom " + report.front().axiom);
  }
  for (const auto &spec : {AlgebraSpec(Family::A, 1), AlgebraSpec(Family::A, 2), AlgebraSpec(Family::A, 3),
                           AlgebraSpec(Family::C, 2), AlgebraSpec(Family::C, 3)}) {
    testing_support::RandomElements gen(spec, 1729u);
    std::vector<SeqElement> xs;
    for (int t = 0; t < 1000; ++t) xs.push_back(gen.next());
    const auto report = check_axioms(SeqCrystal(spec), xs);
    if (!report.empty()) o.fail(spec.name() + " random " + report.front().element + " axiom " + report.front().axiom);
  }
  return o;
}

Outcome membership() {
  Outcome o;
  for (const auto &[key, comp] : components()) {
    const auto &[spec, w] = key;
    const LambdaLayout layout(spec, w);
    std::set<SeqElement> members;
    for (const auto &x : enumerate_candidates(spec, layout))
      if (spec.family == Family::A ? typeA_member(spec, x, layout) : typeC_member(spec, x, layout)) members.insert(x);
    if (members != std::set<SeqElement>(comp.elements.begin(), comp.elements.end()))
      o.fail(label(spec, w) + ": " + std::to_string(members.size()) + " members vs " +
             std::to_string(comp.elements.size()) + " vertices");
  }
  return o;
}

Outcome monomials() {
  Outcome o;
  for (const auto &[key, comp] : components()) {
    const auto &[spec, w] = key;
    const auto mono = generate_component(MonomialCrystal(spec), highest_monomial(w));
    if (auto iso = isomorphism(comp.graph, mono.graph); !iso) o.fail(label(spec, w) + ": " + iso.failure);
    if (spec.family == Family::C &&
        std::set<Monomial>(mono.elements.begin(), mono.elements.end()) != prop_iiii_monomials(spec, w))
      o.fail(label(spec, w) + ": filling set differs from the component");
  }
  return o;
}

template <class Map>
void commutes(const AlgebraSpec &spec, const std::vector<SeqElement> &xs, Map map, Outcome &o) {
  const SeqCrystal X(spec);
  const auto T = tensor(X, X);
  for (const auto &x : xs) {
    const SeqTensor image = map(x);
    for (int l = 1; l <= spec.rank; ++l) {
      const auto fx = X.f(x, l), ex = X.e(x, l);
      const auto tf = T.f(image, l), te = T.e(image, l);
      if (fx.has_value() != tf.has_value() || (fx && map(*fx) != *tf))
        o.fail(spec.name() + " " + to_string(x) + " f_" + std::to_string(l));
      if (ex.has_value() != te.has_value() || (ex && map(*ex) != *te))
        o.fail(spec.name() + " " + to_string(x) + " e_" + std::to_string(l));
    }
  }
}

Outcome morphisms() {
  Outcome o;
  for (int n = 2; n <= 3; ++n) {
    const AlgebraSpec spec(Family::C, n);
    for (int i = 2; i <= n; ++i) {
      const auto comp = generate_component(SeqCrystal(spec), highest_element(spec, fundamental_weight(spec, i)));
      commutes(spec, comp.elements, [&](const SeqElement &x) { return eta(spec, x); }, o);
    }
  }
  for (const auto &[key, comp] : components()) {
    const auto &[spec, w] = key;
    const LambdaLayout layout(spec, w);
    if (layout.k() < 2) continue;
    commutes(spec, comp.elements, [&](const SeqElement &x) { return split(spec, x, layout); }, o);
    const int j = layout.last_center();
    const SeqCrystal X(spec);
    const auto target = generate_component(
        tensor(X, X),
        SeqTensor{highest_element(spec, w - fundamental_weight(spec, j)), highest_element(spec, fundamental_weight(spec, j))});
    std::set<SeqTensor> image;
    for (const auto &x : comp.elements) image.insert(split(spec, x, layout));
    if (image != std::set<SeqTensor>(target.elements.begin(), target.elements.end()))
      o.fail(label(spec, w) + ": split image differs from the tensor component");
  }
  return o;
}

Outcome theta_rho() {
  Outcome o;
  std::vector<AlgebraSpec> specs;
  for (int n = 1; n <= 4; ++n) specs.emplace_back(Family::A, n);
  for (int n = 2; n <= 4; ++n) specs.emplace_back(Family::C, n);
  for (const auto &spec : specs)
    for (int i = 1; i <= spec.rank; ++i)
      for (const auto &c : enumerate_components(spec, i, 3))
        for (int l = 1; l <= spec.rank; ++l) {
          if (auto y = theta(spec, c, l); y && rho(spec, *y, l) != c)
            o.fail(spec.name() + " rho(theta(" + to_string(c) + "))");
          if (auto y = rho(spec, c, l); y && theta(spec, *y, l) != c)
            o.fail(spec.name() + " theta(rho(" + to_string(c) + "))");
        }
  return o;
}

Outcome c_independence() {
  Outcome o;
  for (const auto &[spec, w] : acceptance_cases()) {
    const auto a = generate_component(MonomialCrystal(spec, CMatrix::lower_zero(spec.rank)), highest_monomial(w));
    const auto b = generate_component(MonomialCrystal(spec, CMatrix::upper_zero(spec.rank)), highest_monomial(w));
    if (auto iso = isomorphism(a.graph, b.graph); !iso) o.fail(label(spec, w) + ": " + iso.failure);
  }
  return o;
}

} // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"fundamental chains C2/C3", fundamental_chain},
      {"worked examples A4 f_2, C3 e_3", worked_examples},
      {"component sizes equal Weyl dimensions", dimensions},
      {"crystal axioms and semiregularity", axioms},
      {"explicit membership equals generated components", membership},
      {"monomial components isomorphic, type C fillings", monomials},
      {"eta and split are strict embeddings", morphisms},
      {"theta/rho mutually inverse", theta_rho},
      {"monomial crystal independent of c", c_independence},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception &e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    std::cout << "criterion " << i + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[i].first << " (" << ms
              << " ms)";
    if (!o.ok) std::cout << "  first failure: " << o.note;
    std::cout << std::endl;
    all = all && o.ok;
  }
  return all ? 0 : 1;
}
