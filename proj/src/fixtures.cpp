#include "silt/fixtures.hpp"

namespace silt::fixtures {

Relation monomial(const Quiver& q, const std::vector<std::string>& word, const Field& f) {
  return {PathTerm{Scalar::in_field(1, f), parse_path(q, word)}};
}

AlgebraPresentation a3(Field f) {
  return {Quiver::make({"1", "2", "3"}, {{"a", "1", "2"}, {"b", "2", "3"}}), {}, f};
}

AlgebraPresentation n3(Field f) {
  Quiver q = Quiver::make({"1", "2", "3"}, {{"x1", "1", "2"}, {"x2", "2", "3"}, {"x3", "3", "1"}});
  std::vector<Relation> rel = {monomial(q, {"x1", "x2", "x3", "x1"}, f), monomial(q, {"x2", "x3", "x1", "x2"}, f),
                               monomial(q, {"x3", "x1", "x2", "x3"}, f)};
  return {q, rel, f};
}

AlgebraPresentation k2(Field f) {
  Quiver q = Quiver::make({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  return {q, {monomial(q, {"a", "b", "a"}, f), monomial(q, {"b", "a", "b"}, f)}, f};
}

AlgebraPresentation sn22(Field f) {
  Quiver q = Quiver::make({"1", "2"}, {{"a", "1", "2"}, {"b", "2", "1"}});
  return {q, {monomial(q, {"a", "b"}, f), monomial(q, {"b", "a"}, f)}, f};
}

AlgebraPresentation kronecker(Field f) {
  return {Quiver::make({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}}), {}, f};
}

AlgebraPresentation free_cycle(Field f) {
  return {Quiver::make({"1", "2", "3"}, {{"x1", "1", "2"}, {"x2", "2", "3"}, {"x3", "3", "1"}}), {}, f};
}

}  // namespace silt::fixtures
