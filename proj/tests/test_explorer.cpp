#include "doctest.h"

#include "silt/errors.hpp"
#include "silt/explorer.hpp"
#include "silt/fixtures.hpp"

using namespace silt;

namespace {

AlgebraPtr named(const std::string& n) {
  if (n == "A3") return build_algebra(fixtures::a3());
  if (n == "N3") return build_algebra(fixtures::n3());
  if (n == "K2") return build_algebra(fixtures::k2());
  return build_algebra(fixtures::sn22());
}

}  // namespace

TEST_CASE("trivial interval") {
  auto a = named("N3");
  SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a));
  CHECK(g.nodes.size() == 1);
  CHECK(g.edges.empty());
  CHECK(g.complete);
  CHECK(export_dot(g) == "digraph silting {\n  s0 [label=\"(0th)\\nP_1\\nP_2\\nP_3\"];\n}\n");
}

TEST_CASE("two-term intervals") {
  const std::vector<std::pair<std::string, int>> counts = {{"A3", 14}, {"N3", 20}, {"K2", 6}, {"SN22", 6}};
  for (const auto& [name, count] : counts) {
    INFO(name);
    auto a = named(name);
    SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -1));
    CHECK(g.complete);
    CHECK(static_cast<int>(g.nodes.size()) == count);
    CHECK(g.find(regular_complex(a)) == 0);
    CHECK(g.find(regular_complex(a, -1)) >= 0);
    CHECK(edges_descend(g));
    CHECK(edges_are_covering(g));
    CHECK(left_connected(g));
    // every node has exactly one edge per summand inside a two-term interval, except at the bottom
    std::vector<int> out(g.nodes.size(), 0);
    for (const auto& e : g.edges) ++out[e.from];
    CHECK(out[g.find(regular_complex(a, -1))] == 0);
    auto direct = two_term_by_presentations(a);
    CHECK(direct.size() == g.nodes.size());
    for (const auto& r : direct) CHECK(g.find(r.complex) >= 0);
  }
}

TEST_CASE("symmetric two-term members are tilting") {
  for (const auto& r : two_term_silting(named("N3"))) CHECK(r.status == Status::Tilting);
  auto a = named("SN22");
  int stable = 0;
  for (const auto& r : two_term_silting(a)) {
    bool fixed = iso_complexes(nu_complex(r.complex), r.complex);
    if (fixed) {
      ++stable;
      CHECK((iso_complexes(r.complex, regular_complex(a)) || iso_complexes(r.complex, regular_complex(a, -1))));
    }
    CHECK(fixed == (r.status == Status::Tilting));
  }
  CHECK(stable == 2);
}

TEST_CASE("wider intervals") {
  for (const auto& [name, count] : std::vector<std::pair<std::string, int>>{{"N3", 150}, {"K2", 19}}) {
    INFO(name);
    auto a = named(name);
    SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -2));
    CHECK(g.complete);
    CHECK(static_cast<int>(g.nodes.size()) == count);
    CHECK(left_connected(g));
  }
  auto a = named("K2");
  SiltingQuiverGraph capped = enumerate_interval(regular_record(a), regular_complex(a, -2), 5);
  CHECK(!capped.complete);
  CHECK(capped.nodes.size() == 5);
  CHECK_THROWS_AS(two_term_silting(a, 3), Error);
  CHECK_THROWS_AS(enumerate_interval(regular_record(a, 1), regular_complex(a)), Error);
}

TEST_CASE("Kronecker prefix") {
  auto a = build_algebra(fixtures::kronecker());
  SiltingQuiverGraph g = explore_left(regular_record(a), 6);
  CHECK(!g.complete);
  CHECK(edges_descend(g));
  auto x = [&](int k) { return presentation_complex(k % 2 ? tau_inverse(projective(a, 1)) : tau_inverse(projective(a, 0))); };
  ProjComplex x3 = presentation_complex(tau_inverse(tau_inverse(projective(a, 1))));
  std::vector<ProjComplex> chain = {regular_complex(a), direct_sum({stalk(a, {0}), x(1)}), direct_sum({x(2), x(1)}),
                                    direct_sum({x(2), x3})};
  for (std::size_t k = 0; k < chain.size(); ++k) {
    int i = g.find(chain[k]);
    REQUIRE(i >= 0);
    if (k > 0) {
      int p = g.find(chain[k - 1]);
      bool edge = false;
      for (const auto& e : g.edges) edge = edge || (e.from == p && e.to == i);
      CHECK(edge);
    }
  }
  ProjComplex target = direct_sum({two_term(a, {1, 1}, {0}, [&] {
                                     AMatrix m(1, 2);
                                     m.at(0, 0) = a->arrow_element(0);
                                     m.at(0, 1) = a->arrow_element(1);
                                     return m;
                                   }(),
                                                              -1),
                                   stalk(a, {1}, -1)});
  CHECK(g.find(target) < 0);
}

TEST_CASE("exports") {
  auto a = named("K2");
  SiltingQuiverGraph g = enumerate_interval(regular_record(a), regular_complex(a, -1));
  std::string dot = export_dot(g);
  CHECK(dot == export_dot(enumerate_interval(regular_record(a), regular_complex(a, -1))));
  CHECK(dot.find("s0 -> s1 [label=\"μ+ @ 0\"];") != std::string::npos);
  std::string ident = export_dot(g, true);
  CHECK(ident.find("style=dashed") != std::string::npos);
  CHECK(ident.find("[1]") != std::string::npos);
  auto cls = shift_classes(g);
  int shifted = 0;
  for (std::size_t k = 0; k < cls.size(); ++k)
    if (cls[k].first != static_cast<int>(k)) ++shifted;
  CHECK(shifted == 1);

  io::json j = export_json(g);
  CHECK(io::dump(j) == io::dump(export_json(g)));
  SiltingQuiverGraph back = graph_from_json(a, io::json::parse(io::dump(j)));
  CHECK(same_graph(g, back));
  CHECK(io::dump(export_json(back)) == io::dump(j));
  io::json bad = j;
  bad["edges"][0]["to"] = "s99";
  CHECK_THROWS_AS(graph_from_json(a, bad), Error);
}
