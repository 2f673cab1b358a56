#include "doctest.h"

#include "silt/algebra.hpp"
#include "silt/errors.hpp"
#include "silt/fixtures.hpp"
#include "silt/poly.hpp"

using namespace silt;

namespace {

Element word(const Algebra& a, const std::vector<std::string>& w) {
  return a.path_element(parse_path(a.quiver(), w));
}

}  // namespace

TEST_CASE("scalar arithmetic is exact") {
  Scalar third = Scalar::rational(1, 3);
  CHECK(third + third + third == Scalar(1));
  CHECK((Scalar::rational(2, 7) * Scalar::rational(7, 2)).is_one());
  Scalar big(1);
  for (int i = 0; i < 40; ++i) big = big * Scalar(1000003);
  Scalar back = big;
  for (int i = 0; i < 40; ++i) back = back / Scalar(1000003);
  CHECK(back.is_one());
  Scalar m = Scalar::modular(3, 7);
  CHECK((m * m.inverse()).is_one());
  CHECK(Scalar::modular(5, 7) + Scalar::modular(4, 7) == Scalar::modular(2, 7));
  CHECK_THROWS_AS(Field::gf(9), Error);
}

TEST_CASE("matrix kernels and inverses") {
  Matrix m = Matrix::from_rows({{1, 2, 3}, {2, 4, 6}}, 3);
  CHECK(rank(m) == 1);
  auto ker = kernel(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m.apply(v)));
  Matrix s = Matrix::from_rows({{2, 1}, {1, 1}}, 2);
  auto inv = inverse(s);
  REQUIRE(inv);
  CHECK(s * *inv == Matrix::identity(2));
}

TEST_CASE("polynomial splitting gives idempotents") {
  // t^2 - t has roots 0 and 1
  Poly m = {Scalar(0), Scalar(-1), Scalar(1)};
  auto e = splitting_polynomial(m, Field::rationals());
  REQUIRE(e);
  auto sq = divmod(*e * *e, m).second;
  CHECK(trim(sq) == trim(*e));
  Poly irreducible = {Scalar(1), Scalar(0), Scalar(1)};
  CHECK_FALSE(splitting_polynomial(irreducible, Field::rationals()));
}

TEST_CASE("A3 basis and products") {
  auto a = build_algebra(fixtures::a3());
  CHECK(a->dim() == 6);
  CHECK(a->element_string(word(*a, {"a"}) + word(*a, {"b"})) == "a + b");
  CHECK(a->multiply(word(*a, {"a"}), word(*a, {"b"})) == word(*a, {"a", "b"}));
  CHECK(a->multiply(a->idempotent(0), word(*a, {"a"})) == word(*a, {"a"}));
  CHECK(a->multiply(word(*a, {"a"}), a->idempotent(0)).is_zero());
  CHECK(a->check_confluence());
  int total = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) total += static_cast<int>(a->block(i, j).size());
  CHECK(total == a->dim());
}

TEST_CASE("N3 and K2 dimensions") {
  auto n3 = build_algebra(fixtures::n3());
  CHECK(n3->dim() == 12);
  for (int v = 0; v < 3; ++v) {
    std::size_t out = 0;
    for (int w = 0; w < 3; ++w) out += n3->block(v, w).size();
    CHECK(out == 4);
  }
  CHECK(n3->multiply(word(*n3, {"x1", "x2", "x3"}), word(*n3, {"x1"})).is_zero());
  CHECK(n3->check_confluence());
  auto k2 = build_algebra(fixtures::k2());
  CHECK(k2->dim() == 6);
  CHECK(k2->check_confluence());
  CHECK(build_algebra(fixtures::sn22())->dim() == 4);
  CHECK(build_algebra(fixtures::kronecker())->dim() == 4);
}

TEST_CASE("rewriting errors") {
  try {
    build_algebra(fixtures::free_cycle(), 12);
    FAIL("expected PossiblyInfinite");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PossiblyInfinite);
  }
  auto pres = fixtures::a3();
  Path ab = parse_path(pres.quiver, {"a", "b"});
  Path wrong{0, 1, {0}};
  pres.relations.push_back({{Scalar(1), ab}, {Scalar(1), wrong}});
  CHECK_THROWS_AS(build_algebra(pres), Error);
}

TEST_CASE("non-monomial relations complete to a confluent system") {
  // commutative square 1 -> 2 -> 4, 1 -> 3 -> 4 with ab = cd
  Quiver q = Quiver::make({"1", "2", "3", "4"}, {{"a", "1", "2"}, {"b", "2", "4"}, {"c", "1", "3"}, {"d", "3", "4"}});
  AlgebraPresentation p{q, {{{Scalar(1), parse_path(q, {"a", "b"})}, {Scalar(-1), parse_path(q, {"c", "d"})}}}, {}};
  auto alg = build_algebra(p);
  CHECK(alg->dim() == 4 + 4 + 1);
  CHECK(alg->check_confluence());
  CHECK(alg->path_element(parse_path(q, {"a", "b"})) == alg->path_element(parse_path(q, {"c", "d"})));
  // a loop with x^2 = x^3 style overlap: x^2 - y^2 on a two-loop quiver truncated by x^3, y^3
  Quiver l = Quiver::make({"1"}, {{"x", "1", "1"}, {"y", "1", "1"}});
  Field f;
  AlgebraPresentation lp{l,
                         {{{Scalar(1), parse_path(l, {"x", "x"})}, {Scalar(-1), parse_path(l, {"y", "y"})}},
                          fixtures::monomial(l, {"x", "y"}, f),
                          fixtures::monomial(l, {"y", "x"}, f)},
                         f};
  auto la = build_algebra(lp);
  CHECK(la->dim() == 4);
  CHECK(la->check_confluence());
}
