#include "silt/io.hpp"

#include <fstream>
#include <sstream>

#include "silt/errors.hpp"

namespace silt::io {

namespace {

json path_words(const Algebra& a, const Path& p) {
  json w = json::array();
  for (int k : p.word) w.push_back(a.quiver().arrow(k).name);
  return w;
}

Path path_from_words(const Quiver& q, const json& words, int from) {
  std::vector<std::string> names;
  for (const auto& n : words) names.push_back(n.get<std::string>());
  if (names.empty()) return Path{from, from, {}};
  return parse_path(q, names);
}

Scalar scalar_from_json(const json& j, const Field& f) {
  if (j.is_number_integer()) return Scalar::in_field(j.get<long long>(), f);
  require(j.is_string(), ErrorKind::Parse, "coefficient must be a string or an integer");
  return Scalar::parse(j.get<std::string>(), f);
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
    rows.push_back(row);
  }
  return rows;
}

int vertex_from_json(const Quiver& q, const json& j) {
  if (j.is_number_integer()) {
    int v = j.get<int>();
    require(v >= 0 && v < q.num_vertices(), ErrorKind::Parse, "vertex index out of range");
    return v;
  }
  return q.vertex_index(j.get<std::string>());
}

template <typename F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::Parse, std::string("malformed document: ") + e.what());
  }
}

}  // namespace

json field_to_json(const Field& f) {
  if (f.is_rational()) return "rationals";
  return json{{"gf", f.p}};
}

Field field_from_json(const json& j) {
  if (j.is_string()) return parse_field(j.get<std::string>());
  require(j.is_object() && j.contains("gf"), ErrorKind::Parse, "field must be \"rationals\" or {\"gf\": p}");
  return Field::gf(j.at("gf").get<std::uint32_t>());
}

Field parse_field(const std::string& text) {
  if (text == "rationals" || text == "Q") return Field::rationals();
  if (text.rfind("gf:", 0) == 0) {
    try {
      return Field::gf(static_cast<std::uint32_t>(std::stoul(text.substr(3))));
    } catch (const std::logic_error&) {
    }
  }
  fail(ErrorKind::Parse, "unknown field '" + text + "' (use rationals or gf:p)");
}

json algebra_to_json(const AlgebraPresentation& p) {
  const Quiver& q = p.quiver;
  json arrows = json::array();
  for (const auto& a : q.arrows())
    arrows.push_back({{"name", a.name}, {"source", q.vertex(a.source)}, {"target", q.vertex(a.target)}});
  json rels = json::array();
  for (const auto& r : p.relations) {
    json terms = json::array();
    for (const auto& t : r) {
      json w = json::array();
      for (int k : t.path.word) w.push_back(q.arrow(k).name);
      terms.push_back({{"coeff", t.coeff.str()}, {"path", w}});
    }
    rels.push_back(terms);
  }
  return {{"vertices", q.vertices()}, {"arrows", arrows}, {"relations", rels}, {"field", field_to_json(p.field)}};
}

AlgebraPresentation algebra_from_json(const json& j) {
  return guarded([&] {
    AlgebraPresentation p;
    p.field = j.contains("field") ? field_from_json(j.at("field")) : Field::rationals();
    std::vector<std::tuple<std::string, std::string, std::string>> arrows;
    for (const auto& a : j.at("arrows"))
      arrows.emplace_back(a.at("name").get<std::string>(), a.at("source").get<std::string>(),
                          a.at("target").get<std::string>());
    p.quiver = Quiver::make(j.at("vertices").get<std::vector<std::string>>(), arrows);
    if (j.contains("relations"))
      for (const auto& r : j.at("relations")) {
        Relation rel;
        for (const auto& t : r) {
          std::vector<std::string> names = t.at("path").get<std::vector<std::string>>();
          require(!names.empty(), ErrorKind::MalformedRelation, "relation terms need nonempty paths");
          rel.push_back({scalar_from_json(t.at("coeff"), p.field), parse_path(p.quiver, names)});
        }
        p.relations.push_back(rel);
      }
    return p;
  });
}

json element_to_json(const Algebra& a, const Element& x) {
  json out = json::array();
  for (const auto& [b, c] : x.terms) out.push_back({{"coeff", c.str()}, {"path", path_words(a, a.basis_path(b))}});
  return out;
}

Element element_from_json(const Algebra& a, const json& j, int from, int to) {
  Element x;
  for (const auto& t : j) {
    Path p = path_from_words(a.quiver(), t.at("path"), from);
    require(p.source == from && p.target == to, ErrorKind::Parse,
            "entry path does not run from " + a.quiver().vertex(from) + " to " + a.quiver().vertex(to));
    x = x + scalar_from_json(t.at("coeff"), a.field()) * a.path_element(p);
  }
  return x;
}

json complex_to_json(const ProjComplex& x, const std::string& algebra_ref) {
  const Algebra& a = *x.alg;
  json degrees = json::object(), diffs = json::object();
  for (int d = x.lo; d <= x.hi(); ++d) {
    json vs = json::array();
    for (int v : x.term(d)) vs.push_back(a.quiver().vertex(v));
    degrees[std::to_string(d)] = vs;
    if (d < x.hi()) {
      AMatrix m = x.diff(d);
      json rows = json::array();
      for (int r = 0; r < m.rows; ++r) {
        json row = json::array();
        for (int c = 0; c < m.cols; ++c) row.push_back(element_to_json(a, m.at(r, c)));
        rows.push_back(row);
      }
      diffs[std::to_string(d)] = rows;
    }
  }
  return {{"algebra", algebra_ref}, {"degrees", degrees}, {"differentials", diffs}};
}

ProjComplex complex_from_json(AlgebraPtr a, const json& j) {
  return guarded([&] {
    const Quiver& q = a->quiver();
    std::map<int, std::vector<int>> terms;
    for (const auto& [k, vs] : j.at("degrees").items()) {
      std::vector<int> verts;
      for (const auto& v : vs) verts.push_back(vertex_from_json(q, v));
      terms[std::stoi(k)] = verts;
    }
    if (terms.empty()) return zero_complex(a);
    const int lo = terms.begin()->first, hi = terms.rbegin()->first;
    std::vector<std::vector<int>> tv;
    for (int d = lo; d <= hi; ++d) tv.push_back(terms.count(d) ? terms[d] : std::vector<int>{});
    std::vector<AMatrix> diffs;
    const json empty = json::object();
    const json& dj = j.contains("differentials") ? j.at("differentials") : empty;
    for (int d = lo; d < hi; ++d) {
      const auto& src = tv[d - lo];
      const auto& tgt = tv[d - lo + 1];
      AMatrix m(static_cast<int>(tgt.size()), static_cast<int>(src.size()));
      const std::string key = std::to_string(d);
      if (dj.contains(key)) {
        const json& rows = dj.at(key);
        require(rows.size() == tgt.size(), ErrorKind::Parse, "differential " + key + " has the wrong row count");
        for (std::size_t r = 0; r < tgt.size(); ++r) {
          require(rows[r].size() == src.size(), ErrorKind::Parse, "differential " + key + " has the wrong shape");
          for (std::size_t c = 0; c < src.size(); ++c)
            m.at(static_cast<int>(r), static_cast<int>(c)) = element_from_json(*a, rows[r][c], tgt[r], src[c]);
        }
      }
      diffs.push_back(m);
    }
    ProjComplex x = make_complex(a, lo, tv, diffs);
    require(is_complex(x), ErrorKind::Parse, "differentials do not square to zero");
    return x;
  });
}

json module_to_json(const Representation& m, const std::string& algebra_ref) {
  json arrows = json::object();
  const Quiver& q = m.alg->quiver();
  for (int k = 0; k < q.num_arrows(); ++k) arrows[q.arrow(k).name] = matrix_to_json(m.arrows[k]);
  return {{"algebra", algebra_ref}, {"dims", m.dims}, {"arrows", arrows}};
}

Representation module_from_json(AlgebraPtr a, const json& j) {
  return guarded([&] {
    const Quiver& q = a->quiver();
    Representation m;
    m.alg = a;
    m.dims = j.at("dims").get<std::vector<int>>();
    require(static_cast<int>(m.dims.size()) == q.num_vertices(), ErrorKind::Parse, "dims must list every vertex");
    for (int k = 0; k < q.num_arrows(); ++k) {
      const Arrow& ar = q.arrow(k);
      Matrix mat(m.dims[ar.target], m.dims[ar.source]);
      const json& arrows = j.at("arrows");
      if (arrows.contains(ar.name)) {
        const json& rows = arrows.at(ar.name);
        require(rows.size() == mat.rows(), ErrorKind::Parse, "matrix of " + ar.name + " has the wrong shape");
        for (std::size_t r = 0; r < mat.rows(); ++r) {
          require(rows[r].size() == mat.cols(), ErrorKind::Parse, "matrix of " + ar.name + " has the wrong shape");
          for (std::size_t c = 0; c < mat.cols(); ++c) mat.at(r, c) = scalar_from_json(rows[r][c], a->field());
        }
      }
      m.arrows.push_back(mat);
    }
    require(satisfies_relations(m), ErrorKind::Parse, "module does not satisfy the relations");
    return m;
  });
}

json steps_to_json(const std::vector<MutationStep>& steps) {
  json out = json::array();
  for (const auto& s : steps)
    out.push_back({{"summand", s.summand}, {"direction", to_string(s.direction)}, {"parent", s.parent}});
  return out;
}

std::vector<MutationStep> steps_from_json(const json& j) {
  return guarded([&] {
    std::vector<MutationStep> out;
    for (const auto& s : j) {
      const std::string dir = s.at("direction").get<std::string>();
      require(dir == "left" || dir == "right", ErrorKind::Parse, "direction must be left or right");
      out.push_back({s.at("summand").get<int>(), dir == "left" ? Direction::Left : Direction::Right,
                     s.at("parent").get<std::string>()});
    }
    return out;
  });
}

Status status_from_string(const std::string& s) {
  for (Status st : {Status::NotPresilting, Status::Presilting, Status::Silting, Status::Tilting})
    if (s == to_string(st)) return st;
  fail(ErrorKind::Parse, "unknown status '" + s + "'");
}

json record_to_json(const SiltingRecord& r, const std::string& algebra_ref) {
  const ProjComplex& root = r.root.alg ? r.root : r.complex;
  return {{"complex", complex_to_json(r.complex, algebra_ref)},
          {"status", to_string(r.status)},
          {"generation_undecided", r.generation_undecided},
          {"certificate", to_string(r.certificate)},
          {"fingerprint", r.fingerprint},
          {"provenance", {{"root", complex_to_json(root, algebra_ref)}, {"steps", steps_to_json(r.steps)}}}};
}

SiltingRecord record_from_json(AlgebraPtr a, const json& j) {
  return guarded([&] {
    ProjComplex root = complex_from_json(a, j.at("provenance").at("root"));
    SiltingRecord r = replay(root, steps_from_json(j.at("provenance").at("steps")));
    if (j.contains("complex"))
      require(complex_key(r.complex) == complex_key(complex_from_json(a, j.at("complex"))), ErrorKind::Parse,
              "provenance does not reproduce the stored complex");
    if (j.contains("status"))
      require(to_string(r.status) == j.at("status").get<std::string>(), ErrorKind::Parse,
              "provenance does not reproduce the stored status");
    return r;
  });
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json read_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), ErrorKind::Parse, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  require(!j.is_discarded(), ErrorKind::Parse, path + " is not valid JSON");
  return j;
}

}  // namespace silt::io
