#pragma once

// Cross-check suites over a component R(lambda), reported per suite.

#include "intseq/crystalcore.hpp"
#include "intseq/membership.hpp"
#include "intseq/monomials.hpp"
#include "intseq/seqcrystal.hpp"

#include <json.hpp>

#include <set>
#include <sstream>
#include <string>
#include <vector>

namespace intseq {

enum class Suite { Axioms, Dim, Membership, Monomial, Tensor };

inline const std::vector<Suite> &all_suites() {
  static const std::vector<Suite> suites{Suite::Axioms, Suite::Dim, Suite::Membership, Suite::Monomial, Suite::Tensor};
  return suites;
}

inline std::string suite_name(Suite s) {
  switch (s) {
  case Suite::Axioms: return "axioms";
  case Suite::Dim: return "dim";
  case Suite::Membership: return "membership";
  case Suite::Monomial: return "monomial";
  case Suite::Tensor: return "tensor";
  }
  return "?";
}

struct SuiteResult {
  explicit SuiteResult(std::string n) : name(std::move(n)) {}

  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::string counterexample; ///< first failure, element grammar where applicable
  bool passed() const { return violations == 0; }

  void fail(std::string what) {
    if (violations++ == 0) counterexample = std::move(what);
  }
};

struct CheckReport {
  AlgebraSpec spec;
  Weight lambda;
  std::vector<SuiteResult> suites;

  bool passed() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult &s) { return s.passed(); });
  }

  std::string text() const {
    std::ostringstream out;
    out << "check " << spec.name() << " " << lambda.str() << "\n";
    for (const auto &s : suites) {
      out << "  " << s.name << ": " << (s.passed() ? "PASS" : "FAIL") << " (checked " << s.checked << ", violations "
          << s.violations << ")\n";
      if (!s.passed()) out << "    first counterexample: " << s.counterexample << "\n";
    }
    out << "status: " << (passed() ? "PASS" : "FAIL") << "\n";
    return out.str();
  }

  nlohmann::json json() const {
    nlohmann::json j;
    j["algebra"] = {{"family", std::string(1, family_char(spec.family))}, {"rank", spec.rank}};
    j["weight"] = lambda.coeffs;
    j["status"] = passed() ? "pass" : "fail";
    auto &arr = j["suites"] = nlohmann::json::array();
    for (const auto &s : suites) {
      nlohmann::json js{{"name", s.name}, {"status", s.passed() ? "pass" : "fail"}, {"checked", s.checked},
                        {"violations", s.violations}};
      js["counterexample"] = s.passed() ? nlohmann::json(nullptr) : nlohmann::json(s.counterexample);
      arr.push_back(std::move(js));
    }
    return j;
  }
};

namespace detail {

using SeqComponent = GeneratedComponent<SeqElement>;

inline SuiteResult suite_axioms(const AlgebraSpec &spec, const SeqComponent &comp) {
  SuiteResult r("axioms");
  r.checked = comp.elements.size();
  for (const auto &v : check_axioms(SeqCrystal(spec), comp.elements))
    r.fail(v.element + " color " + std::to_string(v.color) + " axiom " + v.axiom + ": " + v.detail);
  for (const auto &v : check_graph_axioms(comp.graph))
    r.fail("graph vertex " + v.element + " color " + std::to_string(v.color) + " axiom " + v.axiom + ": " + v.detail);
  return r;
}

inline SuiteResult suite_dim(const AlgebraSpec &spec, const Weight &lambda, const SeqComponent &comp) {
  SuiteResult r("dim");
  r.checked = 1;
  const auto expected = weyl_dim(spec, lambda);
  if (comp.elements.size() != expected)
    r.fail("component has " + std::to_string(comp.elements.size()) + " vertices, Weyl dimension is " +
           std::to_string(expected));
  return r;
}

inline SuiteResult suite_membership(const AlgebraSpec &spec, const Weight &lambda, const SeqComponent &comp) {
  SuiteResult r("membership");
  const LambdaLayout layout(spec, lambda);
  const std::set<SeqElement> vertices(comp.elements.begin(), comp.elements.end());
  for (const auto &x : enumerate_candidates(spec, layout)) {
    ++r.checked;
    const bool in = member(spec, x, layout);
    if (in != vertices.contains(x))
      r.fail(to_string(x) + (in ? " satisfies the conditions but is not generated" : " is generated but fails the conditions"));
  }
  for (const auto &x : vertices)
    if (!detail::layout_matches(spec, x, layout)) r.fail(to_string(x) + " is generated but breaks the center layout");
  return r;
}

inline SuiteResult suite_monomial(const AlgebraSpec &spec, const Weight &lambda, const SeqComponent &comp,
                                  std::size_t cap) {
  SuiteResult r("monomial");
  const Monomial top = highest_monomial(lambda);
  const MonomialCrystal lower(spec, CMatrix::lower_zero(spec.rank));
  const MonomialCrystal upper(spec, CMatrix::upper_zero(spec.rank));
  const auto m1 = generate_component(lower, top, cap);
  const auto m2 = generate_component(upper, top, cap);
  r.checked = m1.elements.size() + m2.elements.size();

  for (const auto &v : check_axioms(lower, m1.elements))
    r.fail(v.element + " color " + std::to_string(v.color) + " axiom " + v.axiom + ": " + v.detail);
  if (auto iso = isomorphism(comp.graph, m1.graph); !iso)
    r.fail("sequence component is not isomorphic to the monomial component: " + iso.failure);
  if (auto iso = isomorphism(m1.graph, m2.graph); !iso)
    r.fail("monomial components for the two c matrices are not isomorphic: " + iso.failure);

  if (spec.family == Family::C) {
    const std::set<Monomial> generated(m1.elements.begin(), m1.elements.end());
    const auto filled = prop_iiii_monomials(spec, lambda);
    r.checked += filled.size();
    for (const auto &m : filled)
      if (!generated.contains(m)) r.fail(to_string(m) + " comes from a filling but is not generated");
    for (const auto &m : generated)
      if (!filled.contains(m)) r.fail(to_string(m) + " is generated but comes from no filling");
  }
  return r;
}

template <class Map>
void check_strict(const AlgebraSpec &spec, const std::vector<SeqElement> &elements, Map &&map, SuiteResult &r) {
  const SeqCrystal X(spec);
  const auto T = tensor(X, X);
  for (const auto &x : elements) {
    const SeqTensor image = map(x);
    for (int l = 1; l <= spec.rank; ++l) {
      ++r.checked;
      const auto fx = X.f(x, l);
      const auto tf = T.f(image, l);
      if (fx.has_value() != tf.has_value() || (fx && map(*fx) != *tf))
        r.fail(to_string(x) + " color " + std::to_string(l) + ": f does not commute");
      const auto ex = X.e(x, l);
      const auto te = T.e(image, l);
      if (ex.has_value() != te.has_value() || (ex && map(*ex) != *te))
        r.fail(to_string(x) + " color " + std::to_string(l) + ": e does not commute");
    }
  }
}

inline SuiteResult suite_tensor(const AlgebraSpec &spec, const Weight &lambda, const SeqComponent &comp,
                                std::size_t cap) {
  SuiteResult r("tensor");
  const LambdaLayout layout(spec, lambda);
  if (layout.k() >= 2) {
    check_strict(spec, comp.elements, [&](const SeqElement &x) { return split(spec, x, layout); }, r);
    const int j = layout.last_center();
    const Weight rest = lambda - fundamental_weight(spec, j);
    const SeqCrystal X(spec);
    const auto T = tensor(X, X);
    const SeqTensor seed{highest_element(spec, rest), highest_element(spec, fundamental_weight(spec, j))};
    const auto target = generate_component(T, seed, cap);
    std::set<SeqTensor> image;
    for (const auto &x : comp.elements) image.insert(split(spec, x, layout));
    const std::set<SeqTensor> expected(target.elements.begin(), target.elements.end());
    r.checked += expected.size();
    for (const auto &t : expected)
      if (!image.contains(t)) r.fail(to_string(t.first) + " (x) " + to_string(t.second) + " is not in the image of split");
    for (const auto &t : image)
      if (!expected.contains(t)) r.fail(to_string(t.first) + " (x) " + to_string(t.second) + " lies outside the tensor component");
  }
  if (spec.family == Family::C) {
    const SeqCrystal X(spec);
    for (int i = 2; i <= spec.rank; ++i) {
      const auto fundamental = generate_component(X, highest_element(spec, fundamental_weight(spec, i)), cap);
      check_strict(spec, fundamental.elements, [&](const SeqElement &x) { return eta(spec, x); }, r);
    }
  }
  return r;
}

} // namespace detail

/// Generates R(lambda) once and runs the requested suites on it.
inline CheckReport run_checks(const AlgebraSpec &spec, const Weight &lambda, const std::vector<Suite> &suites,
                              std::size_t cap = default_vertex_cap) {
  CheckReport report{spec, lambda, {}};
  const auto comp = generate_component(SeqCrystal(spec), highest_element(spec, lambda), cap);
  for (Suite s : suites) {
    switch (s) {
    case Suite::Axioms: report.suites.push_back(detail::suite_axioms(spec, comp)); break;
    case Suite::Dim: report.suites.push_back(detail::suite_dim(spec, lambda, comp)); break;
    case Suite::Membership: report.suites.push_back(detail::suite_membership(spec, lambda, comp)); break;
    case Suite::Monomial: report.suites.push_back(detail::suite_monomial(spec, lambda, comp, cap)); break;
    case Suite::Tensor: report.suites.push_back(detail::suite_tensor(spec, lambda, comp, cap)); break;
    }
  }
  return report;
}

} // namespace intseq
