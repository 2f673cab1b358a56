#pragma once

#include <string>

#include "json.hpp"
#include "silt/silting.hpp"

namespace silt::io {

using json = nlohmann::json;

/// Field descriptor: "rationals" or {"gf": p}.
json field_to_json(const Field& f);
Field field_from_json(const json& j);
/// Command-line form: "rationals" or "gf:p".
Field parse_field(const std::string& text);

json algebra_to_json(const AlgebraPresentation& p);
AlgebraPresentation algebra_from_json(const json& j);

/// Element of e_from A e_to as a list of {coeff, path}; the empty path is e_from.
json element_to_json(const Algebra& a, const Element& x);
Element element_from_json(const Algebra& a, const json& j, int from, int to);

json complex_to_json(const ProjComplex& x, const std::string& algebra_ref = "");
ProjComplex complex_from_json(AlgebraPtr a, const json& j);

json module_to_json(const Representation& m, const std::string& algebra_ref = "");
Representation module_from_json(AlgebraPtr a, const json& j);

json steps_to_json(const std::vector<MutationStep>& steps);
std::vector<MutationStep> steps_from_json(const json& j);

/// Complex, status and provenance (root plus mutation steps).
json record_to_json(const SiltingRecord& r, const std::string& algebra_ref = "");
/// Replays the provenance and checks that the stored complex and status are reproduced.
SiltingRecord record_from_json(AlgebraPtr a, const json& j);

Status status_from_string(const std::string& s);

/// Canonical text: sorted keys, two-space indent, trailing newline.
std::string dump(const json& j);
json read_file(const std::string& path);

}  // namespace silt::io
