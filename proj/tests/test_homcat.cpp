#include "doctest.h"

#include "silt/complex.hpp"
#include "silt/errors.hpp"
#include "silt/fixtures.hpp"

using namespace silt;

namespace {

Element word(const AlgebraPtr& a, const std::vector<std::string>& names) {
  return a->path_element(parse_path(a->quiver(), names));
}

AMatrix single(const Element& e) {
  AMatrix m(1, 1);
  m.at(0, 0) = e;
  return m;
}

// The three-summand tilting complex on N3 (vertices 1, 2, 3 are indices 0, 1, 2).
ProjComplex n3_tilting(const AlgebraPtr& a) {
  ProjComplex row1 = make_complex(a, 0, {{1}, {1}, {0}},
                                  {single(word(a, {"x2", "x3", "x1"})), single(word(a, {"x1"}))});
  ProjComplex row2 = stalk(a, {1}, 0);
  ProjComplex row3 = two_term(a, {1}, {2}, single(word(a, {"x3", "x1"})), 0);
  return direct_sum({row1, row2, row3});
}

ProjComplex n3_t1(const AlgebraPtr& a) {
  return direct_sum({two_term(a, {1}, {0}, single(word(a, {"x1"})), 0), stalk(a, {1}, 0),
                     two_term(a, {1}, {2}, single(word(a, {"x3", "x1"})), 0)});
}

std::vector<ProjComplex> probe_objects(const AlgebraPtr& a) {
  std::vector<ProjComplex> out;
  for (int v = 0; v < a->num_vertices(); ++v) {
    out.push_back(stalk(a, {v}, 0));
    Representation s = simple(a, v);
    if (!is_projective(s)) out.push_back(presentation_complex(s));
  }
  return out;
}

}  // namespace

TEST_CASE("stalk complexes and shifts") {
  auto a3 = build_algebra(fixtures::a3());
  ProjComplex a = regular_complex(a3);
  CHECK(is_complex(a));
  CHECK(hom_dim(a, a, 0) == 6);
  CHECK(hom_dim(shift(a, 1), a, 1) == 6);
  CHECK(hom_dim(a, a, 1) == 0);
  CHECK(complex_key(shift(a, 0)) == complex_key(a));
  ProjComplex s1 = presentation_complex(simple(a3, 0));
  CHECK(complex_key(shift(shift(s1, 1), -1)) == complex_key(s1));
  CHECK(shift(s1, 1).lo == s1.lo - 1);
  CHECK(shift(s1, 1).diffs[0] == ascale(Scalar(-1), s1.diffs[0]));
}

TEST_CASE("A3: P_3 plus S_1 is pretilting") {
  auto a3 = build_algebra(fixtures::a3());
  ProjComplex t = direct_sum({stalk(a3, {2}, 0), presentation_complex(simple(a3, 0))});
  REQUIRE(is_complex(t));
  for (int i = -4; i <= 4; ++i)
    if (i != 0) CHECK(hom_dim(t, t, i) == 0);
  CHECK(hom_dim(t, t, 0) >= 2);
}

TEST_CASE("cones and minimization") {
  for (auto pres : {fixtures::a3(), fixtures::n3(), fixtures::k2()}) {
    auto a = build_algebra(pres);
    for (const auto& x : probe_objects(a)) {
      ProjComplex c = cone(x, x, identity_chain(x));
      CHECK(is_complex(c));
      CHECK(minimize(c).is_zero());
      CHECK(complex_key(minimize(x)) == complex_key(x));
      // contractible padding does not change the homotopy type
      ProjComplex padded = direct_sum({x, c});
      CHECK(iso_complexes(minimize(padded), x));
      for (const auto& y : probe_objects(a))
        for (int i = -2; i <= 2; ++i) CHECK(hom_dim(padded, y, i) == hom_dim(x, y, i));
    }
  }
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex p2 = stalk(n3, {1}, 0), p1 = stalk(n3, {0}, 0);
  ChainMap f{0, {single(word(n3, {"x1"}))}};
  REQUIRE(is_chain_map(p2, p1, f));
  ProjComplex c = cone(p2, p1, f);
  CHECK(c.lo == -1);
  CHECK(iso_complexes(c, presentation_complex(simple(n3, 0))));
  ChainMap zero{0, {AMatrix(1, 1)}};
  CHECK(iso_complexes(cone(p2, p1, zero), direct_sum({p1, shift(p2, 1)})));
}

TEST_CASE("chain maps compose and the identity is not null-homotopic") {
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex t = n3_tilting(n3);
  REQUIRE(is_complex(t));
  HomSpace h(t, t, 0);
  CHECK(h.dim() == hom_dim(t, t, 0));
  CHECK(!h.is_null_homotopic(identity_chain(t)));
  for (const auto& f : h.basis()) CHECK(is_chain_map(t, t, f));
  ChainMap sq = compose(*n3, identity_chain(t), identity_chain(t));
  CHECK(h.coords(sq) == h.coords(identity_chain(t)));
}

TEST_CASE("N3 tilting complex: decomposition and cohomology") {
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex t = n3_tilting(n3);
  auto parts = decompose_complex(t);
  CHECK(parts.size() == 3);
  for (int i = -4; i <= 4; ++i)
    if (i != 0) CHECK(hom_dim(t, t, i) == 0);
  Representation p2 = projective(n3, 1);
  Representation radp2 = radical(p2).rep;
  Representation rad2p2 = radical(radp2).rep;
  Representation expected = direct_sum({radp2, p2, rad2p2}).rep;
  CHECK(is_isomorphic(cohomology(t, 0), expected));
  CHECK(cohomology(t, 1).is_zero() == false);
  ProjComplex p = two_term(n3, {1}, {0}, single(word(n3, {"x1"})), 0);
  CHECK(is_isomorphic(cohomology(p, 1), simple(n3, 0)));
  CHECK(is_isomorphic(cohomology(p, 0), simple(n3, 1)));
  auto twice = decompose_complex(direct_sum({t, t}));
  CHECK(twice.size() == 6);
  auto reversed = decompose_complex(direct_sum({parts[2], parts[0], parts[1]}));
  REQUIRE(reversed.size() == parts.size());
  for (std::size_t k = 0; k < parts.size(); ++k) CHECK(complex_key(reversed[k]) == complex_key(parts[k]));
  CHECK(basic_summands(direct_sum({t, t})).size() == 3);
}

TEST_CASE("order relation") {
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex a = regular_complex(n3);
  CHECK(compare_order(a, shift(a, 1)));
  CHECK(!compare_order(shift(a, 1), a));
  ProjComplex t1 = n3_t1(n3);
  CHECK(compare_order(shift(a, -1), t1));
  CHECK(compare_order(t1, a));
  ProjComplex t = n3_tilting(n3);
  CHECK(complex_length(t) == 3);
  CHECK(compare_order(a, t) == false);
  CHECK(compare_order(shift(a, -2), t));
  CHECK(compare_order(t, a));
  // support [-(l-1), 0] gives A >= X >= A[l-1]
  for (const auto& x : {t, t1}) {
    int l = complex_length(x);
    ProjComplex y = shift(x, l - 1);
    CHECK(compare_order(a, y));
    CHECK(compare_order(y, shift(a, l - 1)));
    CHECK(!compare_order(y, shift(a, l - 2)));
  }
}

TEST_CASE("isomorphism") {
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex a = regular_complex(n3);
  ProjComplex t = n3_tilting(n3);
  CHECK(iso_complexes(t, t));
  CHECK(!iso_complexes(a, shift(a, 1)));
  CHECK(!iso_complexes(t, n3_t1(n3)));
  CHECK(iso_complexes(nu_complex(t), t));
  CHECK(fingerprint(t) == fingerprint(direct_sum({n3_tilting(n3)})));
}

TEST_CASE("Nakayama functor on complexes") {
  auto sn = build_algebra(fixtures::sn22());
  CHECK(iso_complexes(nu_complex(stalk(sn, {0}, 0)), stalk(sn, {1}, 0)));
  ProjComplex x = presentation_complex(simple(sn, 0));
  ProjComplex nx = nu_complex(x);
  CHECK(is_complex(nx));
  CHECK(iso_complexes(nu_inverse_complex(nx), x));
  auto k2 = build_algebra(fixtures::k2());
  for (const auto& y : probe_objects(k2)) CHECK(iso_complexes(nu_complex(y), y));
  auto a3 = build_algebra(fixtures::a3());
  CHECK_THROWS_AS(nu_complex(regular_complex(a3)), Error);
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex t = n3_tilting(n3);
  CHECK(is_isomorphic(cohomology(nu_complex(t), 0), cohomology(t, 0)));
}

TEST_CASE("Serre duality dimensions") {
  auto n3 = build_algebra(fixtures::n3());
  ProjComplex a = regular_complex(n3);
  ProjComplex t = n3_tilting(n3);
  CHECK(hom_dim(a, nu_complex(t), 0) == hom_dim(t, a, 0));
  for (auto pres : {fixtures::a3(), fixtures::n3(), fixtures::kronecker()}) {
    auto alg = build_algebra(pres);
    auto objs = probe_objects(alg);
    for (const auto& p : objs) {
      ModuleComplex np = nu_module_complex(p);
      for (const auto& x : objs)
        for (int i = -4; i <= 4; ++i) CHECK(hom_dim(p, x, i) == hom_dim_to_modules(x, np, -i));
    }
  }
}

TEST_CASE("pretty printer") {
  auto n3 = build_algebra(fixtures::n3());
  std::string s = pretty(n3_tilting(n3));
  CHECK(s.find("(0th)") != std::string::npos);
  CHECK(s.find("(2nd)") != std::string::npos);
  CHECK(s.find("x2x3x1") != std::string::npos);
  CHECK(pretty(zero_complex(n3)) == "0\n");
}
