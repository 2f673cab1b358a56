#include "doctest.h"

#include "silt/errors.hpp"
#include "silt/fixtures.hpp"
#include "silt/io.hpp"

using namespace silt;

TEST_CASE("algebra round trip") {
  for (auto pres : {fixtures::a3(), fixtures::n3(), fixtures::k2(), fixtures::sn22(), fixtures::kronecker(),
                    fixtures::n3(Field::gf(5))}) {
    io::json j = io::algebra_to_json(pres);
    AlgebraPresentation back = io::algebra_from_json(io::json::parse(io::dump(j)));
    CHECK(io::dump(io::algebra_to_json(back)) == io::dump(j));
    CHECK(build_algebra(back)->dim() == build_algebra(pres)->dim());
  }
  io::json n3 = io::algebra_to_json(fixtures::n3());
  CHECK(n3["field"] == "rationals");
  CHECK(n3["relations"][0][0]["path"] == io::json({"x1", "x2", "x3", "x1"}));
  CHECK(io::algebra_to_json(fixtures::n3(Field::gf(5)))["field"]["gf"] == 5);
  CHECK(io::parse_field("gf:7") == Field::gf(7));
  CHECK_THROWS_AS(io::parse_field("reals"), Error);
  CHECK_THROWS_AS(io::algebra_from_json(io::json::parse(R"({"vertices": ["1"]})")), Error);
}

TEST_CASE("complex and module round trips") {
  auto a = build_algebra(fixtures::n3());
  for (const auto& m : list_indecomposables(a)) {
    io::json mj = io::module_to_json(m, "N3");
    Representation mb = io::module_from_json(a, io::json::parse(io::dump(mj)));
    CHECK(mb.dims == m.dims);
    CHECK(mb.arrows == m.arrows);
    ProjComplex p = shift(presentation_complex(m), 1);
    ProjComplex pb = io::complex_from_json(a, io::json::parse(io::dump(io::complex_to_json(p, "N3"))));
    CHECK(complex_key(pb) == complex_key(p));
  }
  io::json bad = io::complex_to_json(presentation_complex(simple(a, 0)));
  bad["differentials"]["-1"][0][0] = io::json::array({{{"coeff", "1"}, {"path", {"x2"}}}});
  CHECK_THROWS_AS(io::complex_from_json(a, bad), Error);
  io::json bad_mod = io::module_to_json(projective(a, 0));
  bad_mod["arrows"]["x1"] = io::json::array({io::json::array({"1"})});
  CHECK_THROWS_AS(io::module_from_json(a, bad_mod), Error);
}

TEST_CASE("records replay from provenance") {
  auto a = build_algebra(fixtures::k2());
  SiltingRecord r = mutate(mutate(regular_record(a), 0, Direction::Left), 1, Direction::Left);
  io::json j = io::record_to_json(r, "K2");
  SiltingRecord back = io::record_from_json(a, io::json::parse(io::dump(j)));
  CHECK(complex_key(back.complex) == complex_key(r.complex));
  CHECK(back.status == r.status);
  CHECK(io::dump(io::record_to_json(back, "K2")) == io::dump(j));
  j["provenance"]["steps"][0]["parent"] = "wrong";
  CHECK_THROWS_AS(io::record_from_json(a, j), Error);
}
