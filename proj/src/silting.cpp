#include "silt/silting.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "silt/errors.hpp"

namespace silt {

const char* to_string(Status s) {
  switch (s) {
    case Status::NotPresilting: return "not_presilting";
    case Status::Presilting: return "presilting";
    case Status::Silting: return "silting";
    case Status::Tilting: return "tilting";
  }
  return "?";
}

const char* to_string(Direction d) { return d == Direction::Left ? "left" : "right"; }

const char* to_string(Certificate c) {
  switch (c) {
    case Certificate::None: return "none";
    case Certificate::Generation: return "generation";
    case Certificate::Mutation: return "mutation";
  }
  return "?";
}

namespace {

/// Hom spaces and radicals among a fixed list of basic indecomposable complexes.
class AddCat {
 public:
  explicit AddCat(std::vector<ProjComplex> objs) : n_(std::move(objs)) {}

  int size() const { return static_cast<int>(n_.size()); }
  const ProjComplex& obj(int a) const { return n_[a]; }

  const HomSpace& hom(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = homs_.find(key);
    if (it == homs_.end()) it = homs_.emplace(key, std::make_unique<HomSpace>(n_[a], n_[b], 0)).first;
    return *it->second;
  }

  /// Representatives spanning J(N_a, N_b).
  const std::vector<ChainMap>& radical(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = rad_.find(key);
    if (it != rad_.end()) return it->second;
    const HomSpace& h = hom(a, b);
    std::vector<ChainMap> out;
    if (a != b) {
      out = h.basis();
    } else {
      out = endo_radical(n_[a], h);
    }
    return rad_.emplace(key, std::move(out)).first->second;
  }

  static std::vector<ChainMap> endo_radical(const ProjComplex& x, const HomSpace& h) {
    const Algebra& alg = *x.alg;
    const int sz = x.num_summands();
    if (!alg.field().is_rational() && static_cast<long long>(alg.field().p) <= sz)
      fail(ErrorKind::FieldTooSmall, "radical of an endomorphism ring needs characteristic above " +
                                         std::to_string(sz));
    std::vector<Matrix> tops;
    for (const auto& f : h.basis()) tops.push_back(top_matrix(x, f));
    const std::size_t k = tops.size();
    Matrix gram(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) gram.at(i, j) = (tops[i] * tops[j]).trace();
    std::vector<ChainMap> out;
    for (const auto& v : kernel(gram)) out.push_back(h.combine(v));
    return out;
  }

 private:
  std::vector<ProjComplex> n_;
  std::map<std::pair<int, int>, std::unique_ptr<HomSpace>> homs_;
  std::map<std::pair<int, int>, std::vector<ChainMap>> rad_;
};

AMatrix stack_rows(const std::vector<AMatrix>& blocks, int cols) {
  int rows = 0;
  for (const auto& b : blocks) rows += b.rows;
  AMatrix m(rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) m.at(off + r, c) = b.at(r, c);
    off += b.rows;
  }
  return m;
}

AMatrix stack_cols(const std::vector<AMatrix>& blocks, int rows) {
  int cols = 0;
  for (const auto& b : blocks) cols += b.cols;
  AMatrix m(rows, cols);
  int off = 0;
  for (const auto& b : blocks) {
    for (int r = 0; r < b.rows; ++r)
      for (int c = 0; c < b.cols; ++c) m.at(r, off + c) = b.at(r, c);
    off += b.cols;
  }
  return m;
}

Vec unit(std::size_t n, std::size_t k) {
  Vec v(n, Scalar(0));
  v[k] = 1;
  return v;
}

Approximation approximate(const ProjComplex& x, AddCat& cat, Direction side) {
  const int n = cat.size();
  AlgebraPtr alg = x.alg;
  Approximation out;
  for (int a = 0; a < n; ++a) out.basis.push_back(cat.obj(a));
  out.multiplicity.assign(n, 0);
  std::vector<std::unique_ptr<HomSpace>> hx(n);
  for (int a = 0; a < n; ++a)
    hx[a] = side == Direction::Left ? std::make_unique<HomSpace>(x, cat.obj(a), 0)
                                    : std::make_unique<HomSpace>(cat.obj(a), x, 0);
  std::vector<std::pair<int, ChainMap>> chosen;
  for (int a = 0; a < n; ++a) {
    const HomSpace& h = *hx[a];
    if (h.dim() == 0) continue;
    SpanBuilder span(h.dim());
    for (int b = 0; b < n && static_cast<int>(span.rank()) < h.dim(); ++b) {
      if (hx[b]->dim() == 0) continue;
      if (side == Direction::Left) {
        // r o g with g: X -> N_b, r in J(N_b, N_a)
        for (const auto& r : cat.radical(b, a))
          for (const auto& g : hx[b]->basis()) span.add(h.coords(compose(x, cat.obj(b), cat.obj(a), r, g)));
      } else {
        // g o r with r in J(N_a, N_b), g: N_b -> X
        for (const auto& r : cat.radical(a, b))
          for (const auto& g : hx[b]->basis())
            span.add(h.coords(compose(cat.obj(a), cat.obj(b), x, g, r)));
      }
    }
    for (int k = 0; k < h.dim(); ++k)
      if (span.add(unit(h.dim(), k))) {
        chosen.emplace_back(a, h.basis()[k]);
        ++out.multiplicity[a];
      }
  }
  std::vector<ProjComplex> parts;
  for (const auto& [a, g] : chosen) parts.push_back(cat.obj(a));
  out.object = parts.empty() ? zero_complex(alg) : direct_sum(parts);
  ChainMap f;
  if (side == Direction::Left) {
    f.lo = x.lo;
    for (int d = x.lo; d <= x.hi() && !x.is_zero(); ++d) {
      std::vector<AMatrix> blocks;
      for (const auto& [a, g] : chosen) blocks.push_back(component(x, cat.obj(a), g, d));
      f.comps.push_back(stack_rows(blocks, static_cast<int>(x.term(d).size())));
    }
  } else {
    const ProjComplex& src = out.object;
    f.lo = src.lo;
    for (int d = src.lo; d <= src.hi() && !src.is_zero(); ++d) {
      std::vector<AMatrix> blocks;
      for (const auto& [a, g] : chosen) blocks.push_back(component(cat.obj(a), x, g, d));
      f.comps.push_back(stack_cols(blocks, static_cast<int>(x.term(d).size())));
    }
  }
  out.map = f;
  return out;
}

ProjComplex sum_or_zero(AlgebraPtr a, const std::vector<ProjComplex>& parts) {
  return parts.empty() ? zero_complex(a) : direct_sum(parts);
}

bool negative_vanishing(const ProjComplex& x) {
  if (x.is_zero()) return true;
  for (int i = 1; i <= x.hi() - x.lo; ++i)
    if (hom_dim(x, x, -i) != 0) return false;
  return true;
}

Tower tower_over(const std::vector<ProjComplex>& summands, const ProjComplex& u, int cap) {
  AddCat cat(summands);
  Tower tower;
  ProjComplex cur = minimize(u);
  while (true) {
    if (tower.length() + 1 > cap) fail(ErrorKind::CapExceeded, "resolution tower longer than " + std::to_string(cap));
    Approximation ap = approximate(cur, cat, Direction::Right);
    ProjComplex next = minimize(shift(cone(ap.object, cur, ap.map), -1));
    tower.steps.push_back({cur, ap.object, ap.map, ap.multiplicity});
    if (next.is_zero()) break;
    cur = next;
  }
  return tower;
}

SiltingRecord assemble(AlgebraPtr a, std::vector<ProjComplex> summands) {
  std::stable_sort(summands.begin(), summands.end(), complex_less);
  SiltingRecord r;
  r.summands = summands;
  r.complex = sum_or_zero(a, summands);
  r.fingerprint = fingerprint(r.complex);
  return r;
}

long long det_abs_is_one(const std::vector<std::vector<long long>>& rows) {
  const std::size_t n = rows.size();
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Scalar(rows[i][j]);
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m.at(p, c).is_zero()) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m.at(p, j), m.at(c, j));
      det = -det;
    }
    det *= m.at(c, c);
    Scalar inv = m.at(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m.at(r, c).is_zero()) continue;
      Scalar k = m.at(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m.at(r, j) -= k * m.at(c, j);
    }
  }
  return (det == Scalar(1) || det == Scalar(-1)) ? 1 : 0;
}

}  // namespace

bool is_presilting(const ProjComplex& x0) {
  ProjComplex x = minimize(x0);
  if (x.is_zero()) return true;
  for (int i = 1; i <= x.hi() - x.lo; ++i)
    if (hom_dim(x, x, i) != 0) return false;
  return true;
}

bool is_pretilting(const ProjComplex& x) { return is_presilting(x) && negative_vanishing(minimize(x)); }

std::vector<std::vector<long long>> k0_classes(const std::vector<ProjComplex>& summands) {
  std::vector<std::vector<long long>> out;
  for (const auto& s : summands) {
    std::vector<long long> row(s.alg->num_vertices(), 0);
    for (int d = s.lo; d <= s.hi() && !s.is_zero(); ++d)
      for (int v : s.term(d)) row[v] += (d % 2 == 0) ? 1 : -1;
    out.push_back(row);
  }
  return out;
}

bool k0_unimodular(const std::vector<ProjComplex>& summands) {
  if (summands.empty()) return false;
  auto rows = k0_classes(summands);
  if (rows.size() != rows.front().size()) return false;
  return det_abs_is_one(rows) == 1;
}

bool in_add(const ProjComplex& u, const std::vector<ProjComplex>& summands) {
  for (const auto& p : decompose_complex(u)) {
    bool found = false;
    for (const auto& s : summands)
      if (iso_indecomposables(p, s)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

SiltingRecord classify(const ProjComplex& x, const ClassifyOptions& opt) {
  AlgebraPtr a = x.alg;
  SiltingRecord r = assemble(a, basic_summands(x));
  r.root = r.complex;
  if (!is_presilting(r.complex)) {
    r.status = Status::NotPresilting;
    return r;
  }
  r.status = Status::Presilting;
  if (static_cast<int>(r.summands.size()) != a->num_vertices() || !k0_unimodular(r.summands)) return r;
  try {
    tower_over(r.summands, regular_complex(a, r.complex.lo), opt.tower_cap);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::CapExceeded) throw;
    if (opt.strict) fail(ErrorKind::GenerationUndecided, "no generation witness within the tower cap");
    r.generation_undecided = true;
    return r;
  }
  r.certificate = Certificate::Generation;
  r.status = negative_vanishing(r.complex) ? Status::Tilting : Status::Silting;
  return r;
}

SiltingRecord regular_record(AlgebraPtr a, int n) {
  std::vector<ProjComplex> parts;
  for (int v = 0; v < a->num_vertices(); ++v) parts.push_back(stalk(a, {v}, -n));
  SiltingRecord r = assemble(a, parts);
  r.status = Status::Tilting;
  r.certificate = Certificate::Generation;
  r.root = r.complex;
  return r;
}

SiltingRecord shifted(const SiltingRecord& t, int n) {
  std::vector<ProjComplex> parts;
  for (const auto& s : t.summands) parts.push_back(shift(s, n));
  SiltingRecord r = assemble(t.complex.alg, parts);
  r.status = t.status;
  r.generation_undecided = t.generation_undecided;
  r.certificate = t.certificate;
  r.root = r.complex;
  return r;
}

Approximation minimal_approximation(const ProjComplex& x, const ProjComplex& m, Direction side) {
  return minimal_approximation(x, m.is_zero() ? std::vector<ProjComplex>{} : basic_summands(m), side);
}

Approximation minimal_approximation(const ProjComplex& x, const std::vector<ProjComplex>& summands,
                                    Direction side) {
  AddCat cat(summands);
  return approximate(x, cat, side);
}

SiltingRecord mutate(const SiltingRecord& t, int k, Direction d) {
  require(t.at_least(Status::Silting), ErrorKind::NotSilting, "mutation needs a silting record");
  require(k >= 0 && k < static_cast<int>(t.summands.size()), ErrorKind::SummandOutOfRange,
          "summand index " + std::to_string(k) + " out of range");
  AlgebraPtr a = t.complex.alg;
  const ProjComplex& x = t.summands[k];
  std::vector<ProjComplex> rest;
  for (int j = 0; j < static_cast<int>(t.summands.size()); ++j)
    if (j != k) rest.push_back(t.summands[j]);
  AddCat cat(rest);
  Approximation ap = approximate(x, cat, d);
  ProjComplex y = d == Direction::Left ? minimize(cone(x, ap.object, ap.map))
                                       : minimize(shift(cone(ap.object, x, ap.map), -1));
  std::vector<ProjComplex> parts = rest;
  std::vector<ProjComplex> ys = decompose_complex(y);
  require(ys.size() == 1, ErrorKind::Internal, "irreducible mutation produced a decomposable summand");
  parts.push_back(ys.front());
  SiltingRecord r = assemble(a, parts);
  r.status = negative_vanishing(r.complex) ? Status::Tilting : Status::Silting;
  r.certificate = Certificate::Mutation;
  r.root = t.root.alg ? t.root : t.complex;
  r.steps = t.steps;
  r.steps.push_back({k, d, t.fingerprint});
  for (int j = 0; j < static_cast<int>(r.summands.size()); ++j)
    if (complex_key(r.summands[j]) == complex_key(ys.front())) r.new_summand = j;
  return r;
}

SiltingRecord replay(const ProjComplex& root, const std::vector<MutationStep>& steps) {
  SiltingRecord r = classify(root);
  for (const auto& s : steps) {
    require(r.fingerprint == s.parent, ErrorKind::InvalidArgument, "provenance parent fingerprint mismatch");
    r = mutate(r, s.summand, s.direction);
  }
  return r;
}

Tower resolution_tower(const SiltingRecord& t, const ProjComplex& u, int cap) {
  require(t.at_least(Status::Silting), ErrorKind::NotSilting, "resolution tower needs a silting record");
  require(compare_order(t.complex, u), ErrorKind::OrderViolated, "resolution tower needs T >= U");
  return tower_over(t.summands, u, cap);
}

SiltingRecord make_closer(const SiltingRecord& t, const ProjComplex& u) {
  require(!in_add(u, t.summands), ErrorKind::UInAddT, "U already lies in add T");
  Tower tower = resolution_tower(t, u);
  const TowerStep& last = tower.steps.back();
  int pick = -1;
  for (int a = 0; a < static_cast<int>(last.multiplicity.size()); ++a)
    if (last.multiplicity[a] > 0) {
      pick = a;
      break;
    }
  require(pick >= 0, ErrorKind::Internal, "empty top of resolution tower");
  SiltingRecord p = mutate(t, pick, Direction::Left);
  require(compare_order(t.complex, p.complex) && compare_order(p.complex, u), ErrorKind::Internal,
          "make_closer postcondition failed");
  return p;
}

SiltingRecord bongartz_complete(const SiltingRecord& t, const ProjComplex& u0) {
  require(t.at_least(Status::Silting), ErrorKind::NotSilting, "completion needs a silting record");
  AlgebraPtr a = t.complex.alg;
  ProjComplex u = minimize(u0);
  require(is_presilting(u), ErrorKind::NotPresilting, "U is not presilting");
  require(compare_order(shift(t.complex, -1), u) && compare_order(u, t.complex), ErrorKind::OrderViolated,
          "completion needs T[-1] >= U >= T");
  std::vector<ProjComplex> us = u.is_zero() ? std::vector<ProjComplex>{} : basic_summands(u);
  Approximation ap = minimal_approximation(t.complex, us, Direction::Right);
  ProjComplex v = minimize(shift(cone(ap.object, t.complex, ap.map), -1));
  std::vector<ProjComplex> parts = us;
  parts.push_back(v);
  SiltingRecord w = classify(sum_or_zero(a, parts));
  require(w.at_least(Status::Silting), ErrorKind::Internal, "completion is not silting");
  return w;
}

MutationPath connect_descend(const SiltingRecord& t, const ProjComplex& u, int cap) {
  require(t.at_least(Status::Silting), ErrorKind::NotSilting, "descent needs a silting record");
  require(is_presilting(u), ErrorKind::NotPresilting, "U is not presilting");
  require(compare_order(t.complex, u), ErrorKind::OrderViolated, "descent needs T >= U");
  const int n = t.complex.alg->num_vertices();
  MutationPath path;
  path.start = t.fingerprint;
  path.records.push_back(t);
  const std::size_t base = t.steps.size();
  for (int i = 0;; ++i) {
    const SiltingRecord& cur = path.records.back();
    if (in_add(u, cur.summands)) {
      path.reached = static_cast<int>(basic_summands(u).size()) == n;
      path.end = cur.fingerprint;
      path.steps.assign(cur.steps.begin() + static_cast<long>(base), cur.steps.end());
      return path;
    }
    if (i >= cap) fail(ErrorKind::CapExceeded, "descent did not reach U within " + std::to_string(cap) + " steps");
    path.records.push_back(make_closer(cur, u));
  }
}

int nu_orbit_order(const SiltingRecord& t, int cap) {
  ProjComplex cur = t.complex;
  for (int n = 1; n <= cap; ++n) {
    cur = nu_complex(cur);
    if (iso_complexes(cur, t.complex)) return n;
  }
  fail(ErrorKind::CapExceeded, "nu orbit longer than " + std::to_string(cap));
}

bool is_tilting_via_nu(const SiltingRecord& t) { return iso_complexes(nu_complex(t.complex), t.complex); }

AlgebraPresentation end_algebra(const SiltingRecord& t) {
  AlgebraPtr alg = t.complex.alg;
  const int n = static_cast<int>(t.summands.size());
  require(n > 0, ErrorKind::InvalidArgument, "endomorphism algebra of the zero object");
  AddCat cat(t.summands);
  // J^m(T_j, T_i) as coordinate spans, m = 1, 2, ...
  using Spans = std::map<std::pair<int, int>, std::vector<Vec>>;
  auto span_of = [&](int j, int i, const std::vector<Vec>& vs) {
    std::vector<Vec> out;
    SpanBuilder sb(cat.hom(j, i).dim());
    for (const auto& v : vs)
      if (sb.add(v)) out.push_back(v);
    return out;
  };
  Spans j1;
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) {
      std::vector<Vec> vs;
      for (const auto& f : cat.radical(j, i)) vs.push_back(cat.hom(j, i).coords(f));
      j1[{j, i}] = span_of(j, i, vs);
    }
  auto product_spans = [&](const Spans& left) {
    // left is J^m; returns J^{m+1} = J o J^m
    Spans out;
    for (int j = 0; j < n; ++j)
      for (int i = 0; i < n; ++i) {
        std::vector<Vec> vs;
        for (int k = 0; k < n; ++k)
          for (const auto& s : left.at({j, k}))
            for (const auto& r : j1.at({k, i})) {
              ChainMap c = compose(cat.obj(j), cat.obj(k), cat.obj(i), cat.hom(k, i).combine(r),
                                   cat.hom(j, k).combine(s));
              vs.push_back(cat.hom(j, i).coords(c));
            }
        out[{j, i}] = span_of(j, i, vs);
      }
    return out;
  };
  auto all_zero = [&](const Spans& s) {
    for (const auto& [k, v] : s)
      if (!v.empty()) return false;
    return true;
  };
  Spans j2 = product_spans(j1);
  int nil = 1;
  {
    Spans cur = j1;
    while (!all_zero(cur)) {
      cur = product_spans(cur);
      ++nil;
      require(nil <= 64, ErrorKind::Internal, "radical of End(T) is not nilpotent");
    }
  }
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i + 1));
  // arrows i -> j are maps T_j -> T_i in J \ J^2
  std::vector<Arrow> arrows;
  std::vector<Vec> arrow_image;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      SpanBuilder sb(cat.hom(j, i).dim());
      for (const auto& v : j2[{j, i}]) sb.add(v);
      for (const auto& v : j1[{j, i}])
        if (sb.add(v)) {
          arrows.push_back({"f" + std::to_string(arrows.size() + 1), i, j});
          arrow_image.push_back(v);
        }
    }
  AlgebraPresentation pres;
  pres.quiver = Quiver(labels, arrows);
  pres.field = alg->field();
  struct Walk {
    Path path;
    Vec image;  // coordinates in Hom(T_target, T_source)
  };
  std::vector<Walk> level;
  for (std::size_t k = 0; k < arrows.size(); ++k)
    level.push_back({Path{arrows[k].source, arrows[k].target, {static_cast<int>(k)}}, arrow_image[k]});
  std::map<std::pair<int, int>, std::vector<Walk>> long_paths;
  for (int len = 2; len <= nil; ++len) {
    std::vector<Walk> next;
    for (const auto& w : level)
      for (std::size_t k = 0; k < arrows.size(); ++k) {
        if (arrows[k].source != w.path.target) continue;
        const int i = w.path.source, m = w.path.target, j = arrows[k].target;
        ChainMap c = compose(cat.obj(j), cat.obj(m), cat.obj(i), cat.hom(m, i).combine(w.image),
                             cat.hom(j, m).combine(arrow_image[k]));
        Walk nw{w.path, cat.hom(j, i).coords(c)};
        nw.path.target = j;
        nw.path.word.push_back(static_cast<int>(k));
        next.push_back(nw);
      }
    for (const auto& w : next) long_paths[{w.path.source, w.path.target}].push_back(w);
    level = std::move(next);
  }
  for (const auto& [ends, walks] : long_paths) {
    const std::size_t dim = cat.hom(ends.second, ends.first).dim();
    std::vector<Vec> cols;
    for (const auto& w : walks) cols.push_back(w.image);
    Matrix m = Matrix::from_columns(cols, dim);
    if (dim == 0) m = Matrix(0, cols.size());
    for (const auto& v : kernel(m)) {
      Relation rel;
      for (std::size_t p = 0; p < walks.size(); ++p)
        if (!v[p].is_zero()) rel.push_back({v[p], walks[p].path});
      pres.relations.push_back(rel);
    }
  }
  return pres;
}

}  // namespace silt
