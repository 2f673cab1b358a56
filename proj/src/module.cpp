#include "silt/module.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "silt/errors.hpp"
#include "silt/poly.hpp"

namespace silt {

int Representation::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

int Representation::offset(int v) const {
  int t = 0;
  for (int w = 0; w < v; ++w) t += dims[w];
  return t;
}

/// L with L * b = identity, for b of full column rank.
Matrix left_inverse(const Matrix& b) {
  const std::size_t n = b.rows(), k = b.cols();
  Matrix aug(n, k + n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < k; ++c) aug.at(r, c) = b.at(r, c);
    aug.at(r, k + r) = 1;
  }
  auto piv = rref(aug);
  require(piv.size() >= k && (k == 0 || piv[k - 1] == k - 1), ErrorKind::Internal, "basis is not independent");
  Matrix l(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < n; ++c) l.at(r, c) = aug.at(r, k + c);
  return l;
}

/// Independent columns spanning the column space of m.
Matrix column_basis(const Matrix& m) {
  Matrix t = m;
  auto piv = rref(t);
  std::vector<Vec> cols;
  for (auto p : piv) cols.push_back(m.column(p));
  return Matrix::from_columns(cols, m.rows());
}

namespace {

Matrix from_vectors(const std::vector<Vec>& v, std::size_t rows) { return Matrix::from_columns(v, rows); }

/// Extends an independent column set by standard basis vectors to a basis.
Matrix complement_columns(const Matrix& b) {
  SpanBuilder span(b.rows());
  for (std::size_t c = 0; c < b.cols(); ++c) span.add(b.column(c));
  std::vector<Vec> extra;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    Vec e(b.rows());
    e[i] = 1;
    if (span.add(e)) extra.push_back(e);
  }
  return from_vectors(extra, b.rows());
}

/// Submodule on an invariant family of independent column bases.
Sub sub_from_basis(const Representation& m, std::vector<Matrix> basis) {
  const Quiver& q = m.alg->quiver();
  Sub s;
  s.rep.alg = m.alg;
  const int nv = q.num_vertices();
  std::vector<Matrix> linv(nv);
  for (int v = 0; v < nv; ++v) {
    if (basis[v].rows() != static_cast<std::size_t>(m.dims[v])) basis[v] = Matrix(m.dims[v], 0);
    s.rep.dims.push_back(static_cast<int>(basis[v].cols()));
    linv[v] = left_inverse(basis[v]);
  }
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    s.rep.arrows.push_back(linv[a.target] * (m.arrows[k] * basis[a.source]));
  }
  s.incl.comps = basis;
  s.basis = std::move(basis);
  return s;
}

}  // namespace

Sub submodule(const Representation& m, std::vector<Matrix> basis) { return sub_from_basis(m, std::move(basis)); }

Representation subquotient(const Representation& m, const std::vector<Matrix>& outer,
                           const std::vector<Matrix>& inner) {
  Sub s = sub_from_basis(m, outer);
  std::vector<Matrix> coords;
  for (std::size_t v = 0; v < outer.size(); ++v) {
    const Matrix& in = inner[v].rows() == s.basis[v].rows() ? inner[v] : Matrix(s.basis[v].rows(), 0);
    coords.push_back(left_inverse(s.basis[v]) * in);
  }
  return quotient(s.rep, coords).rep;
}

Representation zero_module(AlgebraPtr a) {
  Representation r;
  r.alg = a;
  r.dims.assign(a->num_vertices(), 0);
  for (const auto& ar : a->quiver().arrows()) {
    (void)ar;
    r.arrows.emplace_back(0, 0);
  }
  return r;
}

Representation projective(AlgebraPtr a, int v) {
  Representation r;
  r.alg = a;
  const int nv = a->num_vertices();
  for (int w = 0; w < nv; ++w) r.dims.push_back(static_cast<int>(a->block(v, w).size()));
  for (int k = 0; k < a->quiver().num_arrows(); ++k) {
    const Arrow& ar = a->quiver().arrow(k);
    Matrix m(r.dims[ar.target], r.dims[ar.source]);
    const auto& src = a->block(v, ar.source);
    for (std::size_t c = 0; c < src.size(); ++c) {
      Element prod = a->multiply(a->basis_element(src[c]), a->arrow_element(k));
      for (const auto& [b, coeff] : prod.terms) m.at(a->position_in_block(b), c) = coeff;
    }
    r.arrows.push_back(std::move(m));
  }
  return r;
}

Representation injective(AlgebraPtr a, int v) {
  Representation r;
  r.alg = a;
  const int nv = a->num_vertices();
  for (int s = 0; s < nv; ++s) r.dims.push_back(static_cast<int>(a->block(s, v).size()));
  for (int k = 0; k < a->quiver().num_arrows(); ++k) {
    const Arrow& ar = a->quiver().arrow(k);
    Matrix m(r.dims[ar.target], r.dims[ar.source]);
    const auto& tgt = a->block(ar.target, v);
    for (std::size_t qi = 0; qi < tgt.size(); ++qi) {
      Element prod = a->multiply(a->arrow_element(k), a->basis_element(tgt[qi]));
      for (const auto& [b, coeff] : prod.terms) m.at(qi, a->position_in_block(b)) = coeff;
    }
    r.arrows.push_back(std::move(m));
  }
  return r;
}

Representation simple(AlgebraPtr a, int v) {
  Representation r = zero_module(a);
  r.dims[v] = 1;
  for (int k = 0; k < a->quiver().num_arrows(); ++k) {
    const Arrow& ar = a->quiver().arrow(k);
    r.arrows[k] = Matrix(r.dims[ar.target], r.dims[ar.source]);
  }
  return r;
}

Representation projective_sum(AlgebraPtr a, const std::vector<int>& verts) {
  std::vector<Representation> parts;
  for (int v : verts) parts.push_back(projective(a, v));
  if (parts.empty()) return zero_module(a);
  return direct_sum(parts).rep;
}

Representation injective_sum(AlgebraPtr a, const std::vector<int>& verts) {
  std::vector<Representation> parts;
  for (int v : verts) parts.push_back(injective(a, v));
  if (parts.empty()) return zero_module(a);
  return direct_sum(parts).rep;
}

Representation regular(AlgebraPtr a) {
  std::vector<int> all;
  for (int v = 0; v < a->num_vertices(); ++v) all.push_back(v);
  return projective_sum(a, all);
}

Representation dual_regular(AlgebraPtr a) {
  std::vector<int> all;
  for (int v = 0; v < a->num_vertices(); ++v) all.push_back(v);
  return injective_sum(a, all);
}

Matrix path_action(const Representation& m, const Path& p) {
  Matrix r = Matrix::identity(m.dims[p.source]);
  for (int k : p.word) r = m.arrows[k] * r;
  return r;
}

Matrix act(const Representation& m, const Element& x, int from, int to) {
  Matrix r(m.dims[to], m.dims[from]);
  for (const auto& [b, c] : x.terms) {
    const Path& p = m.alg->basis_path(b);
    if (p.source != from || p.target != to) continue;
    r = r + c * path_action(m, p);
  }
  return r;
}

bool satisfies_relations(const Representation& m) {
  const Quiver& q = m.alg->quiver();
  if (static_cast<int>(m.dims.size()) != q.num_vertices() || static_cast<int>(m.arrows.size()) != q.num_arrows())
    return false;
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    if (m.arrows[k].rows() != static_cast<std::size_t>(m.dims[a.target]) ||
        m.arrows[k].cols() != static_cast<std::size_t>(m.dims[a.source]))
      return false;
  }
  for (const auto& rel : m.alg->presentation().relations) {
    const Path& p0 = rel.front().path;
    Matrix s(m.dims[p0.target], m.dims[p0.source]);
    for (const auto& t : rel) s = s + t.coeff * path_action(m, t.path);
    if (!s.is_zero()) return false;
  }
  return true;
}

ModuleMap identity_map(const Representation& m) {
  ModuleMap f;
  for (int d : m.dims) f.comps.push_back(Matrix::identity(d));
  return f;
}

ModuleMap zero_map(const Representation& m, const Representation& n) {
  ModuleMap f;
  for (std::size_t v = 0; v < m.dims.size(); ++v) f.comps.emplace_back(n.dims[v], m.dims[v]);
  return f;
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(g.comps[v] * f.comps[v]);
  return h;
}

ModuleMap add(const ModuleMap& f, const ModuleMap& g) {
  ModuleMap h;
  for (std::size_t v = 0; v < f.comps.size(); ++v) h.comps.push_back(f.comps[v] + g.comps[v]);
  return h;
}

ModuleMap scale(const Scalar& s, const ModuleMap& f) {
  ModuleMap h;
  for (const auto& c : f.comps) h.comps.push_back(s * c);
  return h;
}

bool is_module_map(const Representation& m, const Representation& n, const ModuleMap& f) {
  const Quiver& q = m.alg->quiver();
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    if (!(n.arrows[k] * f.comps[a.source] == f.comps[a.target] * m.arrows[k])) return false;
  }
  return true;
}

bool is_zero(const ModuleMap& f) {
  for (const auto& c : f.comps)
    if (!c.is_zero()) return false;
  return true;
}

Matrix total_matrix(const Representation& m, const Representation& n, const ModuleMap& f) {
  Matrix t(n.total(), m.total());
  for (std::size_t v = 0; v < m.dims.size(); ++v) {
    int ro = n.offset(static_cast<int>(v)), co = m.offset(static_cast<int>(v));
    for (int r = 0; r < n.dims[v]; ++r)
      for (int c = 0; c < m.dims[v]; ++c) t.at(ro + r, co + c) = f.comps[v].at(r, c);
  }
  return t;
}

std::vector<ModuleMap> hom_modules(const Representation& m, const Representation& n) {
  const Quiver& q = m.alg->quiver();
  const int nv = q.num_vertices();
  std::vector<int> off(nv + 1, 0);
  for (int v = 0; v < nv; ++v) off[v + 1] = off[v] + n.dims[v] * m.dims[v];
  const int unknowns = off[nv];
  auto var = [&](int v, int r, int c) { return off[v] + r * m.dims[v] + c; };
  int eqs = 0;
  for (const auto& a : q.arrows()) eqs += n.dims[a.target] * m.dims[a.source];
  Matrix sys(eqs, unknowns);
  int row = 0;
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    const int j = a.source, t = a.target;
    // (N_a f_j - f_t M_a)(r, c) = 0
    for (int r = 0; r < n.dims[t]; ++r)
      for (int c = 0; c < m.dims[j]; ++c, ++row) {
        for (int s = 0; s < n.dims[j]; ++s) {
          const Scalar& x = n.arrows[k].at(r, s);
          if (!x.is_zero()) sys.at(row, var(j, s, c)) += x;
        }
        for (int s = 0; s < m.dims[t]; ++s) {
          const Scalar& x = m.arrows[k].at(s, c);
          if (!x.is_zero()) sys.at(row, var(t, r, s)) -= x;
        }
      }
  }
  std::vector<ModuleMap> out;
  for (const Vec& v : kernel(sys)) {
    ModuleMap f;
    for (int w = 0; w < nv; ++w) {
      Matrix c(n.dims[w], m.dims[w]);
      for (int r = 0; r < n.dims[w]; ++r)
        for (int cc = 0; cc < m.dims[w]; ++cc) c.at(r, cc) = v[var(w, r, cc)];
      f.comps.push_back(std::move(c));
    }
    out.push_back(std::move(f));
  }
  return out;
}

int hom_dim(const Representation& m, const Representation& n) {
  return static_cast<int>(hom_modules(m, n).size());
}

DirectSum direct_sum(const std::vector<Representation>& parts) {
  require(!parts.empty(), ErrorKind::Internal, "empty direct sum");
  DirectSum ds;
  AlgebraPtr a = parts.front().alg;
  const Quiver& q = a->quiver();
  const int nv = q.num_vertices();
  ds.rep.alg = a;
  ds.rep.dims.assign(nv, 0);
  for (const auto& p : parts)
    for (int v = 0; v < nv; ++v) ds.rep.dims[v] += p.dims[v];
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& ar = q.arrow(k);
    Matrix m(ds.rep.dims[ar.target], ds.rep.dims[ar.source]);
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      for (int r = 0; r < p.dims[ar.target]; ++r)
        for (int c = 0; c < p.dims[ar.source]; ++c) m.at(ro + r, co + c) = p.arrows[k].at(r, c);
      ro += p.dims[ar.target];
      co += p.dims[ar.source];
    }
    ds.rep.arrows.push_back(std::move(m));
  }
  std::vector<int> off(nv, 0);
  for (const auto& p : parts) {
    ModuleMap in, pr;
    for (int v = 0; v < nv; ++v) {
      Matrix i(ds.rep.dims[v], p.dims[v]), o(p.dims[v], ds.rep.dims[v]);
      for (int r = 0; r < p.dims[v]; ++r) {
        i.at(off[v] + r, r) = 1;
        o.at(r, off[v] + r) = 1;
      }
      in.comps.push_back(std::move(i));
      pr.comps.push_back(std::move(o));
      off[v] += p.dims[v];
    }
    ds.incl.push_back(std::move(in));
    ds.proj.push_back(std::move(pr));
  }
  return ds;
}

Sub generated_submodule(const Representation& m, const std::vector<std::vector<Vec>>& gens) {
  const Quiver& q = m.alg->quiver();
  const int nv = q.num_vertices();
  std::vector<SpanBuilder> spans;
  for (int v = 0; v < nv; ++v) spans.emplace_back(m.dims[v]);
  std::vector<std::vector<Vec>> chosen(nv);
  std::deque<std::pair<int, Vec>> queue;
  for (int v = 0; v < nv && v < static_cast<int>(gens.size()); ++v)
    for (const auto& g : gens[v]) queue.emplace_back(v, g);
  while (!queue.empty()) {
    auto [v, x] = queue.front();
    queue.pop_front();
    if (!spans[v].add(x)) continue;
    chosen[v].push_back(x);
    for (int k = 0; k < q.num_arrows(); ++k)
      if (q.arrow(k).source == v) queue.emplace_back(q.arrow(k).target, m.arrows[k].apply(x));
  }
  std::vector<Matrix> basis;
  for (int v = 0; v < nv; ++v) basis.push_back(from_vectors(chosen[v], m.dims[v]));
  return sub_from_basis(m, basis);
}

Sub kernel(const Representation& m, const Representation& n, const ModuleMap& f) {
  (void)n;
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < m.dims.size(); ++v) basis.push_back(from_vectors(kernel(f.comps[v]), m.dims[v]));
  return sub_from_basis(m, basis);
}

Sub image(const Representation& m, const Representation& n, const ModuleMap& f) {
  (void)m;
  std::vector<Matrix> basis;
  for (std::size_t v = 0; v < n.dims.size(); ++v) basis.push_back(column_basis(f.comps[v]));
  return sub_from_basis(n, basis);
}

Quot quotient(const Representation& m, const std::vector<Matrix>& sub_basis) {
  const Quiver& q = m.alg->quiver();
  const int nv = q.num_vertices();
  Quot out;
  out.rep.alg = m.alg;
  std::vector<Matrix> comp(nv);
  for (int v = 0; v < nv; ++v) {
    Matrix b = sub_basis[v].rows() == static_cast<std::size_t>(m.dims[v]) ? sub_basis[v] : Matrix(m.dims[v], 0);
    Matrix c = complement_columns(b);
    comp[v] = c;
    std::vector<Vec> all;
    for (std::size_t i = 0; i < b.cols(); ++i) all.push_back(b.column(i));
    for (std::size_t i = 0; i < c.cols(); ++i) all.push_back(c.column(i));
    Matrix full = from_vectors(all, m.dims[v]);
    auto inv = inverse(full);
    require(inv.has_value(), ErrorKind::Internal, "quotient basis not invertible");
    Matrix pr(c.cols(), m.dims[v]);
    for (std::size_t r = 0; r < c.cols(); ++r)
      for (int cc = 0; cc < m.dims[v]; ++cc) pr.at(r, cc) = inv->at(b.cols() + r, cc);
    out.rep.dims.push_back(static_cast<int>(c.cols()));
    out.proj.comps.push_back(std::move(pr));
  }
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    out.rep.arrows.push_back(out.proj.comps[a.target] * (m.arrows[k] * comp[a.source]));
  }
  return out;
}

Quot cokernel(const Representation& m, const Representation& n, const ModuleMap& f) {
  return quotient(n, image(m, n, f).basis);
}

Sub radical(const Representation& m) {
  const Quiver& q = m.alg->quiver();
  const int nv = q.num_vertices();
  std::vector<std::vector<Vec>> cols(nv);
  for (int k = 0; k < q.num_arrows(); ++k) {
    const Arrow& a = q.arrow(k);
    for (std::size_t c = 0; c < m.arrows[k].cols(); ++c) cols[a.target].push_back(m.arrows[k].column(c));
  }
  std::vector<Matrix> basis;
  for (int v = 0; v < nv; ++v) basis.push_back(column_basis(from_vectors(cols[v], m.dims[v])));
  return sub_from_basis(m, basis);
}

Sub socle(const Representation& m) {
  const Quiver& q = m.alg->quiver();
  const int nv = q.num_vertices();
  std::vector<Matrix> basis;
  for (int v = 0; v < nv; ++v) {
    std::vector<Vec> rows;
    for (int k = 0; k < q.num_arrows(); ++k)
      if (q.arrow(k).source == v)
        for (std::size_t r = 0; r < m.arrows[k].rows(); ++r) rows.push_back(m.arrows[k].row(r));
    Matrix st = Matrix::from_rows(rows, m.dims[v]);
    basis.push_back(from_vectors(kernel(st), m.dims[v]));
  }
  return sub_from_basis(m, basis);
}

std::vector<int> top_dims(const Representation& m) {
  Sub r = radical(m);
  std::vector<int> out;
  for (std::size_t v = 0; v < m.dims.size(); ++v) out.push_back(m.dims[v] - r.rep.dims[v]);
  return out;
}

std::vector<int> socle_dims(const Representation& m) { return socle(m).rep.dims; }

ModuleMap yoneda_map(const Representation& m, const std::vector<int>& verts, const std::vector<Vec>& gens) {
  AlgebraPtr a = m.alg;
  const int nv = a->num_vertices();
  ModuleMap f;
  for (int w = 0; w < nv; ++w) {
    std::vector<Vec> cols;
    for (std::size_t l = 0; l < verts.size(); ++l)
      for (int b : a->block(verts[l], w)) cols.push_back(path_action(m, a->basis_path(b)).apply(gens[l]));
    f.comps.push_back(from_vectors(cols, m.dims[w]));
  }
  return f;
}

ModuleMap proj_map(AlgebraPtr a, const std::vector<int>& src, const std::vector<int>& tgt, const AMatrix& d) {
  const int nv = a->num_vertices();
  ModuleMap f;
  for (int w = 0; w < nv; ++w) {
    std::vector<int> toff;
    int rows = 0;
    for (int v : tgt) {
      toff.push_back(rows);
      rows += static_cast<int>(a->block(v, w).size());
    }
    std::vector<Vec> cols;
    for (std::size_t l = 0; l < src.size(); ++l)
      for (int b : a->block(src[l], w)) {
        Vec col(rows, Scalar::in_field(0, a->field()));
        for (std::size_t k = 0; k < tgt.size(); ++k) {
          const Element& x = d.at(static_cast<int>(k), static_cast<int>(l));
          if (x.is_zero()) continue;
          Element y = a->multiply(x, a->basis_element(b));
          for (const auto& [bb, c] : y.terms) col[toff[k] + a->position_in_block(bb)] += c;
        }
        cols.push_back(std::move(col));
      }
    f.comps.push_back(from_vectors(cols, rows));
  }
  return f;
}

ModuleMap nu_proj_map(AlgebraPtr a, const std::vector<int>& src, const std::vector<int>& tgt, const AMatrix& d) {
  const int nv = a->num_vertices();
  ModuleMap f;
  for (int s = 0; s < nv; ++s) {
    std::vector<int> roff, coff;
    int rows = 0, cols = 0;
    for (int v : tgt) {
      roff.push_back(rows);
      rows += static_cast<int>(a->block(s, v).size());
    }
    for (int v : src) {
      coff.push_back(cols);
      cols += static_cast<int>(a->block(s, v).size());
    }
    Matrix m(rows, cols);
    for (std::size_t k = 0; k < tgt.size(); ++k)
      for (std::size_t l = 0; l < src.size(); ++l) {
        const Element& x = d.at(static_cast<int>(k), static_cast<int>(l));
        if (x.is_zero()) continue;
        const auto& qs = a->block(s, tgt[k]);
        for (std::size_t qi = 0; qi < qs.size(); ++qi) {
          Element y = a->multiply(a->basis_element(qs[qi]), x);
          for (const auto& [bb, c] : y.terms) m.at(roff[k] + qi, coff[l] + a->position_in_block(bb)) += c;
        }
      }
    f.comps.push_back(std::move(m));
  }
  return f;
}

ProjectiveCover projective_cover(const Representation& m) {
  Sub r = radical(m);
  ProjectiveCover pc;
  for (int v = 0; v < static_cast<int>(m.dims.size()); ++v) {
    Matrix c = complement_columns(r.basis[v]);
    for (std::size_t i = 0; i < c.cols(); ++i) {
      pc.verts.push_back(v);
      pc.gens.push_back(c.column(i));
    }
  }
  pc.map = yoneda_map(m, pc.verts, pc.gens);
  return pc;
}

namespace {

/// Column of an A-matrix from an element of a projective sum at vertex u.
std::vector<Element> elements_of(const Algebra& a, const std::vector<int>& verts, int u, const Vec& x) {
  std::vector<Element> out;
  int off = 0;
  for (int v : verts) {
    const auto& blk = a.block(v, u);
    Element e;
    for (std::size_t i = 0; i < blk.size(); ++i)
      if (!x[off + i].is_zero()) e.terms.emplace_back(blk[i], x[off + i]);
    std::sort(e.terms.begin(), e.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
    out.push_back(std::move(e));
    off += static_cast<int>(blk.size());
  }
  return out;
}

/// Cover of a submodule K of the projective sum P_{verts}, as an A-matrix into it.
std::pair<std::vector<int>, AMatrix> cover_of_sub(const Algebra& a, const std::vector<int>& verts, const Sub& k) {
  ProjectiveCover pc = projective_cover(k.rep);
  AMatrix d(static_cast<int>(verts.size()), static_cast<int>(pc.verts.size()));
  for (std::size_t l = 0; l < pc.verts.size(); ++l) {
    int u = pc.verts[l];
    Vec amb = k.incl.comps[u].apply(pc.gens[l]);
    auto col = elements_of(a, verts, u, amb);
    for (std::size_t r = 0; r < verts.size(); ++r) d.at(static_cast<int>(r), static_cast<int>(l)) = col[r];
  }
  return {pc.verts, d};
}

}  // namespace

Presentation projective_presentation(const Representation& m) {
  Presentation p;
  ProjectiveCover pc = projective_cover(m);
  p.p0 = pc.verts;
  Representation p0 = projective_sum(m.alg, p.p0);
  Sub k = kernel(p0, m, pc.map);
  auto [verts, d] = cover_of_sub(*m.alg, p.p0, k);
  p.p1 = verts;
  p.d = d;
  return p;
}

Resolution projective_resolution(const Representation& m, int steps) {
  Resolution res;
  ProjectiveCover pc = projective_cover(m);
  res.terms.push_back(pc.verts);
  Representation cur = projective_sum(m.alg, pc.verts);
  Sub k = kernel(cur, m, pc.map);
  for (int s = 0; s < steps; ++s) {
    auto [verts, d] = cover_of_sub(*m.alg, res.terms.back(), k);
    res.terms.push_back(verts);
    res.maps.push_back(d);
    if (verts.empty()) break;
    Representation next = projective_sum(m.alg, verts);
    ModuleMap f = proj_map(m.alg, verts, res.terms[res.terms.size() - 2], d);
    k = kernel(next, cur, f);
    cur = next;
  }
  return res;
}

namespace {

void require_trace_field(const Algebra& a, int size) {
  if (!a.field().is_rational() && static_cast<long long>(a.field().p) <= size)
    fail(ErrorKind::FieldTooSmall, "trace-form radical needs characteristic larger than " + std::to_string(size));
}

Vec flatten(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

Matrix unflatten(const Vec& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
  return m;
}

Matrix poly_eval(const Poly& p, const Matrix& x) {
  Matrix r(x.rows(), x.cols());
  for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it * Matrix::identity(x.rows());
  return r;
}

/// Nontrivial idempotent of a matrix algebra given by a basis, or empty when
/// the algebra is local. Throws FieldTooSmall when it is neither provably.
std::optional<Matrix> split_idempotent(const std::vector<Matrix>& basis, const Algebra& a) {
  if (basis.size() <= 1) return std::nullopt;
  const std::size_t n = basis.front().rows();
  require_trace_field(a, static_cast<int>(n));
  Matrix gram(basis.size(), basis.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j) gram.at(i, j) = (basis[i] * basis[j]).trace();
  if (rank(gram) <= 1) return std::nullopt;
  auto try_split = [&](const Matrix& phi) -> std::optional<Matrix> {
    Poly m = minimal_polynomial(flatten(Matrix::identity(n)), [&](const Vec& v) { return flatten(unflatten(v, n) * phi); });
    auto e = splitting_polynomial(m, a.field());
    if (!e) return std::nullopt;
    return poly_eval(*e, phi);
  };
  for (const auto& b : basis)
    if (auto e = try_split(b)) return e;
  for (int coeff = 1; coeff <= 3; ++coeff)
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j)
        if (auto e = try_split(basis[i] + Scalar(coeff) * basis[j])) return e;
  fail(ErrorKind::FieldTooSmall, "no splitting idempotent found over the ground field");
}

void split_module(const Representation& m, std::vector<Representation>& out) {
  if (m.total() == 0) return;
  auto end = hom_modules(m, m);
  std::vector<Matrix> mats;
  for (const auto& f : end) mats.push_back(total_matrix(m, m, f));
  auto e = split_idempotent(mats, *m.alg);
  if (!e) {
    out.push_back(m);
    return;
  }
  Matrix one_minus = Matrix::identity(e->rows()) - *e;
  for (const Matrix* idem : {&*e, &one_minus}) {
    std::vector<Matrix> basis;
    for (int v = 0; v < static_cast<int>(m.dims.size()); ++v) {
      int o = m.offset(v);
      Matrix blk(m.dims[v], m.dims[v]);
      for (int r = 0; r < m.dims[v]; ++r)
        for (int c = 0; c < m.dims[v]; ++c) blk.at(r, c) = idem->at(o + r, o + c);
      basis.push_back(column_basis(blk));
    }
    split_module(sub_from_basis(m, basis).rep, out);
  }
}

bool indecomposables_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return false;
  auto fs = hom_modules(m, n);
  if (fs.empty()) return false;
  auto gs = hom_modules(n, m);
  for (const auto& f : fs)
    for (const auto& g : gs) {
      Matrix t = total_matrix(m, m, compose(g, f));
      if (rank(t) == static_cast<std::size_t>(m.total())) return true;
    }
  return false;
}

}  // namespace

std::string loewy_string(const Representation& m) {
  if (m.total() == 0) return "0";
  const Quiver& q = m.alg->quiver();
  std::vector<std::string> layers;
  Representation cur = m;
  while (cur.total() > 0) {
    Sub r = radical(cur);
    std::string layer;
    for (int v = 0; v < q.num_vertices(); ++v)
      for (int k = 0; k < cur.dims[v] - r.rep.dims[v]; ++k) layer += (layer.empty() ? "" : " ") + q.vertex(v);
    layers.push_back(layer);
    cur = r.rep;
  }
  std::string s = "(";
  for (std::size_t i = 0; i < layers.size(); ++i) s += (i ? "/" : "") + layers[i];
  return s + ")";
}

bool module_less(const Representation& a, const Representation& b) {
  if (a.dims != b.dims) return a.dims < b.dims;
  std::string la = loewy_string(a), lb = loewy_string(b);
  if (la != lb) return la < lb;
  for (std::size_t k = 0; k < a.arrows.size(); ++k) {
    std::string x = a.arrows[k].str(), y = b.arrows[k].str();
    if (x != y) return x < y;
  }
  return false;
}

std::vector<std::pair<Representation, int>> decompose(const Representation& m) {
  std::vector<Representation> parts;
  split_module(m, parts);
  std::vector<std::pair<Representation, int>> groups;
  for (auto& p : parts) {
    bool found = false;
    for (auto& g : groups)
      if (indecomposables_isomorphic(g.first, p)) {
        ++g.second;
        found = true;
        break;
      }
    if (!found) groups.emplace_back(std::move(p), 1);
  }
  std::sort(groups.begin(), groups.end(), [](const auto& x, const auto& y) { return module_less(x.first, y.first); });
  return groups;
}

bool is_indecomposable(const Representation& m) {
  if (m.total() == 0) return false;
  std::vector<Representation> parts;
  split_module(m, parts);
  return parts.size() == 1;
}

bool is_isomorphic(const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return false;
  if (m.total() == 0) return true;
  auto dm = decompose(m), dn = decompose(n);
  if (dm.size() != dn.size()) return false;
  std::vector<bool> used(dn.size(), false);
  for (const auto& [x, mult] : dm) {
    bool ok = false;
    for (std::size_t j = 0; j < dn.size(); ++j)
      if (!used[j] && dn[j].second == mult && indecomposables_isomorphic(x, dn[j].first)) {
        used[j] = ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool is_projective(const Representation& m) {
  for (const auto& [x, mult] : decompose(m)) {
    auto t = top_dims(x);
    int v = -1, count = 0;
    for (int i = 0; i < static_cast<int>(t.size()); ++i) {
      count += t[i];
      if (t[i]) v = i;
    }
    if (count != 1 || projective(m.alg, v).dims != x.dims) return false;
  }
  return true;
}

bool is_injective(const Representation& m) {
  for (const auto& [x, mult] : decompose(m)) {
    auto s = socle_dims(x);
    int v = -1, count = 0;
    for (int i = 0; i < static_cast<int>(s.size()); ++i) {
      count += s[i];
      if (s[i]) v = i;
    }
    if (count != 1 || injective(m.alg, v).dims != x.dims) return false;
  }
  return true;
}

Representation dual(const Representation& m, AlgebraPtr target) {
  if (!target) target = m.alg->opposite();
  Representation d;
  d.alg = target;
  d.dims = m.dims;
  for (const auto& a : m.arrows) d.arrows.push_back(a.transpose());
  return d;
}

Representation nu_module(const Representation& m) {
  if (m.total() == 0) return zero_module(m.alg);
  Presentation p = projective_presentation(m);
  Representation i1 = injective_sum(m.alg, p.p1), i0 = injective_sum(m.alg, p.p0);
  ModuleMap f = nu_proj_map(m.alg, p.p1, p.p0, p.d);
  return cokernel(i1, i0, f).rep;
}

Representation nu_inverse_module(const Representation& m) { return dual(nu_module(dual(m)), m.alg); }

Representation tau(const Representation& m) {
  if (m.total() == 0) return zero_module(m.alg);
  Presentation p = projective_presentation(m);
  if (p.p1.empty()) return zero_module(m.alg);
  Representation i1 = injective_sum(m.alg, p.p1), i0 = injective_sum(m.alg, p.p0);
  ModuleMap f = nu_proj_map(m.alg, p.p1, p.p0, p.d);
  return kernel(i1, i0, f).rep;
}

Representation tau_inverse(const Representation& m) { return dual(tau(dual(m)), m.alg); }

namespace {

/// Hom(P_{tgt}, n) -> Hom(P_{src}, n), precomposition with d: P_{src} -> P_{tgt}.
Matrix pullback_matrix(const Representation& n, const std::vector<int>& tgt, const std::vector<int>& src,
                       const AMatrix& d) {
  std::vector<int> ro, co;
  int rows = 0, cols = 0;
  for (int v : src) {
    ro.push_back(rows);
    rows += n.dims[v];
  }
  for (int v : tgt) {
    co.push_back(cols);
    cols += n.dims[v];
  }
  Matrix m(rows, cols);
  for (std::size_t l = 0; l < src.size(); ++l)
    for (std::size_t k = 0; k < tgt.size(); ++k) {
      const Element& x = d.at(static_cast<int>(k), static_cast<int>(l));
      if (x.is_zero()) continue;
      Matrix blk = act(n, x, tgt[k], src[l]);
      for (std::size_t r = 0; r < blk.rows(); ++r)
        for (std::size_t c = 0; c < blk.cols(); ++c) m.at(ro[l] + r, co[k] + c) = blk.at(r, c);
    }
  return m;
}

int hom_from_proj_dim(const Representation& n, const std::vector<int>& verts) {
  int t = 0;
  for (int v : verts) t += n.dims[v];
  return t;
}

}  // namespace

int ext1_dim(const Representation& m, const Representation& n) {
  if (m.total() == 0 || n.total() == 0) return 0;
  Resolution r = projective_resolution(m, 2);
  if (r.terms.size() < 2 || r.terms[1].empty()) return 0;
  Matrix d1 = pullback_matrix(n, r.terms[0], r.terms[1], r.maps[0]);
  int cocycles = hom_from_proj_dim(n, r.terms[1]);
  if (r.terms.size() > 2 && !r.terms[2].empty()) {
    Matrix d2 = pullback_matrix(n, r.terms[1], r.terms[2], r.maps[1]);
    cocycles = static_cast<int>(kernel(d2).size());
  }
  return cocycles - static_cast<int>(rank(d1));
}

Representation ar_middle(const Representation& n) {
  AlgebraPtr a = n.alg;
  Representation x = tau(n);
  require(x.total() > 0, ErrorKind::InvalidArgument, "almost split sequence needs a nonprojective module");
  Resolution r = projective_resolution(n, 2);
  const auto& p0 = r.terms[0];
  const auto& p1 = r.terms[1];
  const int h1 = hom_from_proj_dim(x, p1);
  Matrix d1 = pullback_matrix(x, p0, p1, r.maps[0]);
  std::vector<Vec> z;
  if (r.terms.size() > 2 && !r.terms[2].empty()) {
    z = kernel(pullback_matrix(x, p1, r.terms[2], r.maps[1]));
  } else {
    for (int i = 0; i < h1; ++i) {
      Vec e(h1);
      e[i] = 1;
      z.push_back(e);
    }
  }
  // complement of the coboundaries inside the cocycles
  SpanBuilder span(h1);
  std::vector<Vec> bnd;
  for (std::size_t c = 0; c < d1.cols(); ++c)
    if (span.add(d1.column(c))) bnd.push_back(d1.column(c));
  std::vector<Vec> comp;
  for (const auto& v : z)
    if (span.add(v)) comp.push_back(v);
  require(!comp.empty(), ErrorKind::Internal, "vanishing Ext for a nonprojective indecomposable");
  // linear forms vanishing on the coboundaries
  Matrix bt = Matrix::from_rows(bnd, h1);
  std::vector<Vec> ann = bnd.empty() ? std::vector<Vec>{} : kernel(bt);
  if (bnd.empty())
    for (int i = 0; i < h1; ++i) {
      Vec e(h1);
      e[i] = 1;
      ann.push_back(e);
    }
  Matrix w = Matrix::from_rows(ann, h1);
  // radical of End(x): trace-zero endomorphisms (x is indecomposable)
  auto end = hom_modules(x, x);
  std::vector<Vec> traces;
  for (const auto& f : end) traces.push_back({total_matrix(x, x, f).trace()});
  Matrix trow(1, end.size());
  for (std::size_t i = 0; i < end.size(); ++i) trow.at(0, i) = traces[i][0];
  std::vector<ModuleMap> rad;
  for (const auto& c : kernel(trow)) {
    ModuleMap s = zero_map(x, x);
    for (std::size_t i = 0; i < end.size(); ++i)
      if (!c[i].is_zero()) s = add(s, scale(c[i], end[i]));
    rad.push_back(s);
  }
  Matrix zc = Matrix::from_columns(comp, h1);
  std::vector<Vec> rows;
  for (const auto& s : rad) {
    Matrix sm(h1, h1);
    int off = 0;
    for (int v : p1) {
      for (int i = 0; i < x.dims[v]; ++i)
        for (int j = 0; j < x.dims[v]; ++j) sm.at(off + i, off + j) = s.comps[v].at(i, j);
      off += x.dims[v];
    }
    Matrix cond = w * (sm * zc);
    for (std::size_t i = 0; i < cond.rows(); ++i) rows.push_back(cond.row(i));
  }
  Vec coeffs;
  if (rows.empty()) {
    coeffs.assign(comp.size(), Scalar(0));
    coeffs[0] = 1;
  } else {
    auto sol = kernel(Matrix::from_rows(rows, comp.size()));
    require(!sol.empty(), ErrorKind::Internal, "Ext socle is empty");
    coeffs = sol.front();
  }
  Vec zeta = zc.apply(coeffs);
  // split zeta into generator images
  std::vector<Vec> gens;
  int off = 0;
  for (int v : p1) {
    gens.emplace_back(zeta.begin() + off, zeta.begin() + off + x.dims[v]);
    off += x.dims[v];
  }
  Representation p0m = projective_sum(a, p0), p1m = projective_sum(a, p1);
  DirectSum target = direct_sum({p0m, x});
  ModuleMap pm = proj_map(a, p1, p0, r.maps[0]);
  ModuleMap zm = scale(Scalar(-1), yoneda_map(x, p1, gens));
  ModuleMap f = add(compose(target.incl[0], pm), compose(target.incl[1], zm));
  return cokernel(p1m, target.rep, f).rep;
}

std::vector<Representation> list_indecomposables(AlgebraPtr a, int cap) {
  std::vector<Representation> found;
  std::deque<std::size_t> queue;
  auto add_all = [&](const Representation& m) {
    if (m.total() == 0) return;
    for (auto& [x, mult] : decompose(m)) {
      bool known = false;
      for (const auto& y : found)
        if (indecomposables_isomorphic(x, y)) {
          known = true;
          break;
        }
      if (known) continue;
      if (static_cast<int>(found.size()) >= cap)
        fail(ErrorKind::CapExceeded, "more than " + std::to_string(cap) + " indecomposables");
      found.push_back(x);
      queue.push_back(found.size() - 1);
    }
  };
  for (int v = 0; v < a->num_vertices(); ++v) {
    add_all(projective(a, v));
    add_all(injective(a, v));
    Representation p = projective(a, v);
    add_all(radical(p).rep);
    Representation i = injective(a, v);
    add_all(quotient(i, socle(i).basis).rep);
  }
  while (!queue.empty()) {
    Representation m = found[queue.front()];
    queue.pop_front();
    if (!is_projective(m)) {
      add_all(tau(m));
      add_all(ar_middle(m));
    }
    if (!is_injective(m)) add_all(tau_inverse(m));
  }
  std::sort(found.begin(), found.end(), module_less);
  return found;
}

}  // namespace silt
