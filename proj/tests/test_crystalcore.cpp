#include "intseq/crystalcore.hpp"
#include "intseq/monomials.hpp"
#include "intseq/seqcrystal.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace intseq;

namespace {

const AlgebraSpec A1{Family::A, 1}, A2{Family::A, 2}, C2{Family::C, 2}, C3{Family::C, 3};

auto seq_component(const AlgebraSpec &spec, const Weight &w) {
  return generate_component(SeqCrystal(spec), highest_element(spec, w));
}

// Walks the unique f-path from the highest vertex and returns its colors.
std::vector<int> path_colors(const CrystalGraph &g) {
  std::vector<int> colors;
  int v = g.highest.at(0);
  while (true) {
    const GraphEdge *next = nullptr;
    for (const auto &e : g.edges)
      if (e.from == v) {
        EXPECT_EQ(next, nullptr) << "branching at " << v;
        next = &e;
      }
    if (!next) break;
    colors.push_back(next->color);
    v = next->to;
  }
  return colors;
}

} // namespace

TEST(Generate, FundamentalChains) {
  const auto c3 = seq_component(C3, Weight{1, 0, 0});
  EXPECT_EQ(c3.graph.size(), 6u);
  EXPECT_EQ(path_colors(c3.graph), (std::vector<int>{1, 2, 3, 2, 1}));
  const auto c2 = seq_component(C2, Weight{1, 0});
  EXPECT_EQ(c2.graph.size(), 4u);
  EXPECT_EQ(path_colors(c2.graph), (std::vector<int>{1, 2, 1}));
}

TEST(Generate, SmallExamples) {
  const auto zero = seq_component(C3, Weight{0, 0, 0});
  EXPECT_EQ(zero.graph.size(), 1u);
  EXPECT_TRUE(zero.graph.edges.empty());
  EXPECT_EQ(zero.graph.highest, std::vector<int>{0});
  EXPECT_EQ(seq_component(A2, Weight{1, 0}).graph.size(), 3u);
  EXPECT_EQ(seq_component(A2, Weight{1, 1}).graph.size(), 8u);
}

TEST(Generate, DeterministicAndDiscoveryOrdered) {
  const auto a = seq_component(C3, Weight{0, 1, 1});
  const auto b = seq_component(C3, Weight{0, 1, 1});
  EXPECT_EQ(a.graph, b.graph);
  for (std::size_t id = 0; id < a.graph.size(); ++id) {
    EXPECT_EQ(a.graph.vertices[id].id, static_cast<int>(id));
    EXPECT_EQ(a.graph.vertices[id].element, to_string(a.elements[id]));
  }
  EXPECT_EQ(a.graph.vertices[0].element, "E2,E3");
}

TEST(Generate, ClosesUnderRaisingFromAnySeed) {
  const auto from_top = seq_component(C3, Weight{0, 1, 0});
  const auto from_bottom = generate_component(SeqCrystal(C3), from_top.elements.back());
  const std::set<SeqElement> a(from_top.elements.begin(), from_top.elements.end());
  const std::set<SeqElement> b(from_bottom.elements.begin(), from_bottom.elements.end());
  EXPECT_EQ(a, b);
  EXPECT_EQ(from_bottom.graph.highest.size(), 1u);
}

TEST(Generate, CapIsEnforced) {
  EXPECT_THROW(generate_component(SeqCrystal(C3), highest_element(C3, Weight{0, 1, 0}), 13), CapExceeded);
  EXPECT_NO_THROW(generate_component(SeqCrystal(C3), highest_element(C3, Weight{0, 1, 0}), 14));
  EXPECT_THROW(generate_component(SeqCrystal(C3), SeqElement{}, 0), std::invalid_argument);
}

TEST(Axioms, GeneratedComponentsAreClean) {
  const auto a2 = seq_component(A2, Weight{1, 1});
  EXPECT_TRUE(check_axioms(SeqCrystal(A2), a2.elements).empty());
  EXPECT_TRUE(check_graph_axioms(a2.graph).empty());
  const MonomialCrystal m(C2);
  const auto mono = generate_component(m, highest_monomial(Weight{1, 0}));
  EXPECT_TRUE(check_axioms(m, mono.elements).empty());
}

TEST(Axioms, CorruptedGraphReportsAxiomSix) {
  auto g = seq_component(C3, Weight{0, 1, 0}).graph;
  // Recolor one edge onto a color that already leaves the same vertex.
  bool done = false;
  for (auto &e : g.edges) {
    for (const auto &other : g.edges)
      if (&other != &e && other.from == e.from && other.color != e.color) {
        e.color = other.color;
        done = true;
        break;
      }
    if (done) break;
  }
  ASSERT_TRUE(done);
  const auto report = check_graph_axioms(g);
  ASSERT_FALSE(report.empty());
  EXPECT_TRUE(std::any_of(report.begin(), report.end(), [](const AxiomViolation &v) { return v.axiom == "6"; }));
}

TEST(Axioms, GraphDegreesAtMostOne) {
  const auto g = seq_component(C3, Weight{1, 1, 0}).graph;
  GraphCrystal gc(g);
  for (const auto &v : g.vertices)
    for (int l = 1; l <= 3; ++l) {
      EXPECT_LE(gc.out_degree(v.id, l), 1u);
      EXPECT_LE(gc.in_degree(v.id, l), 1u);
    }
}

TEST(Tensor, RoutesByPhiAndEps) {
  const SeqCrystal X(A1);
  const auto T = tensor(X, X);
  const SeqElement top{Component::empty(1)};
  const SeqElement low = *X.f(top, 1);
  // phi(low) = 0, so f acts on the right factor.
  const auto y = T.f({low, top}, 1);
  ASSERT_TRUE(y.has_value());
  EXPECT_EQ(y->first, low);
  EXPECT_EQ(y->second, low);
}

TEST(Tensor, WeightIsAdditive) {
  const SeqCrystal X(C3);
  const auto T = tensor(X, X);
  const auto w = T.wt({highest_element(C3, Weight{0, 1, 0}), SeqElement{Component::empty(3)}});
  EXPECT_EQ(w, (Weight{0, 1, 1}));
}

TEST(Tensor, TwoFoldA1) {
  const SeqCrystal X(A1);
  const auto T = tensor(X, X);
  const SeqElement top{Component::empty(1)};
  const auto comp = generate_component(T, {top, top});
  EXPECT_EQ(comp.graph.size(), 3u);
  EXPECT_TRUE(check_axioms(T, comp.elements).empty());
  EXPECT_EQ(comp.graph.vertices[1].element, "1:(1,1) (x) E1");
}

TEST(Tensor, SpecMismatch) {
  EXPECT_THROW(tensor(SeqCrystal(C2), SeqCrystal(C3)), std::invalid_argument);
}

TEST(Character, Examples) {
  EXPECT_EQ(format_character(character(seq_component(A1, Weight{1}).graph)), "[1]x1 [-1]x1");
  const auto ch = character(seq_component(C2, Weight{1, 0}).graph);
  int total = 0;
  for (const auto &[w, m] : ch) {
    total += m;
    EXPECT_EQ(ch.at(-w), m);
  }
  EXPECT_EQ(total, 4);
  EXPECT_EQ(format_character(character(seq_component(C2, Weight{0, 0}).graph)), "[0,0]x1");
}

TEST(Character, MatchesMonomialComponent) {
  for (const Weight &w : {Weight{1, 1, 0}, Weight{0, 0, 2}}) {
    const auto a = character(seq_component(C3, w).graph);
    const auto b = character(generate_component(MonomialCrystal(C3), highest_monomial(w)).graph);
    EXPECT_EQ(a, b);
  }
}

TEST(Isomorphism, MonomialFundamental) {
  const auto seq = seq_component(C2, Weight{1, 0}).graph;
  const auto mono = generate_component(MonomialCrystal(C2), highest_monomial(Weight{1, 0})).graph;
  const auto res = isomorphism(seq, mono);
  ASSERT_TRUE(res.ok) << res.failure;
  EXPECT_EQ(res.mapping.size(), 4u);
}

TEST(Isomorphism, SelfIsIdentity) {
  const auto g = seq_component(C3, Weight{1, 0, 1}).graph;
  const auto res = isomorphism(g, g);
  ASSERT_TRUE(res.ok);
  for (std::size_t i = 0; i < res.mapping.size(); ++i) EXPECT_EQ(res.mapping[i], static_cast<int>(i));
}

TEST(Isomorphism, DifferentHighestWeights) {
  const auto res = isomorphism(seq_component(C2, Weight{1, 0}).graph, seq_component(C2, Weight{0, 1}).graph);
  EXPECT_FALSE(res.ok);
  EXPECT_NE(res.failure.find("highest weights differ"), std::string::npos);
}

TEST(Isomorphism, DetectsRecoloredEdge) {
  const auto g = seq_component(C3, Weight{1, 0, 0}).graph;
  auto h = g;
  h.edges[2].color = 1;
  const auto res = isomorphism(g, h);
  EXPECT_FALSE(res.ok);
  EXPECT_GE(res.failed_vertex, 0);
}

TEST(Isomorphism, RequiresUniqueHighestVertex) {
  auto g = seq_component(C2, Weight{1, 0}).graph;
  g.highest.push_back(1);
  EXPECT_THROW(isomorphism(g, g), std::invalid_argument);
  g.highest.clear();
  EXPECT_THROW(isomorphism(g, g), std::invalid_argument);
}
