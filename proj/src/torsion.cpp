#include "silt/torsion.hpp"

#include <algorithm>

#include "silt/errors.hpp"

namespace silt {

bool TorsionClass::contains(const Representation& x) const { return hom_dim(x, cogenerator) == 0; }

bool TorsionClass::in_perp(const Representation& y) const {
  for (const auto& c : indecomposables)
    if (hom_dim(c, y) != 0) return false;
  return true;
}

TorsionClass perp_class(const Representation& m, int cap) {
  TorsionClass c;
  c.alg = m.alg;
  c.cogenerator = m;
  c.all = list_indecomposables(m.alg, cap);
  for (const auto& x : c.all)
    if (hom_dim(x, m) == 0) c.indecomposables.push_back(x);
  // C = perp(C-perp) on the indecomposable list
  std::vector<Representation> perp;
  for (const auto& y : c.all)
    if (c.in_perp(y)) perp.push_back(y);
  for (const auto& x : c.all) {
    bool in_double = true;
    for (const auto& y : perp)
      if (hom_dim(x, y) != 0) {
        in_double = false;
        break;
      }
    require(in_double == c.contains(x), ErrorKind::Internal, "perp class is not closed");
  }
  // every class met here comes from a representation-finite list
  c.covariantly_finite = true;
  class_data(c);
  return c;
}

Sub torsion_part(const TorsionClass& c, const Representation& x) {
  const int nv = x.alg->num_vertices();
  std::vector<Matrix> basis;
  for (int v = 0; v < nv; ++v) basis.push_back(Matrix::identity(x.dims[v]));
  Sub cur = submodule(x, basis);
  while (true) {
    // intersection of the kernels of all maps cur -> M
    std::vector<ModuleMap> maps = hom_modules(cur.rep, c.cogenerator);
    if (maps.empty()) return cur;  // cur lies in C
    std::vector<Matrix> kb;
    for (int v = 0; v < nv; ++v) {
      std::vector<Vec> rows;
      for (const auto& f : maps)
        for (std::size_t r = 0; r < f.comps[v].rows(); ++r) rows.push_back(f.comps[v].row(r));
      Matrix stacked = Matrix::from_rows(rows, cur.rep.dims[v]);
      std::vector<Vec> ker = kernel(stacked);
      Matrix k = ker.empty() ? Matrix(cur.rep.dims[v], 0) : Matrix::from_columns(ker, cur.rep.dims[v]);
      kb.push_back(cur.basis[v] * k);
    }
    Sub next = submodule(x, kb);
    if (next.rep.total() == cur.rep.total()) {
      Quot q = quotient(x, cur.basis);
      require(c.in_perp(q.rep), ErrorKind::Internal, "X / t(X) is not in the perpendicular class");
      return cur;
    }
    cur = next;
  }
}

void class_data(TorsionClass& c) {
  AlgebraPtr a = c.alg;
  c.ext_projectives.clear();
  c.ext_injectives.clear();
  for (const auto& x : c.indecomposables)
    if (c.in_perp(tau(x))) c.ext_projectives.push_back(x);
  for (int v = 0; v < a->num_vertices(); ++v) {
    Sub t = torsion_part(c, injective(a, v));
    if (t.rep.is_zero()) continue;
    for (const auto& [y, mult] : decompose(t.rep)) {
      bool seen = false;
      for (const auto& z : c.ext_injectives)
        if (is_isomorphic(y, z)) seen = true;
      if (!seen) c.ext_injectives.push_back(y);
    }
  }
  std::stable_sort(c.ext_injectives.begin(), c.ext_injectives.end(), module_less);
  // ann C: elements acting as zero on every indecomposable in C
  std::vector<Vec> rows;
  const int dim = a->dim();
  for (const auto& x : c.indecomposables) {
    std::vector<Matrix> actions;
    for (int b = 0; b < dim; ++b) {
      const Path& p = a->basis_path(b);
      actions.push_back(path_action(x, p));
    }
    // one linear condition per matrix entry of every vertex block
    for (int s = 0; s < a->num_vertices(); ++s)
      for (int t = 0; t < a->num_vertices(); ++t)
        for (int r = 0; r < x.dims[t]; ++r)
          for (int q = 0; q < x.dims[s]; ++q) {
            Vec row(dim, Scalar(0));
            bool any = false;
            for (int b : a->block(s, t)) {
              row[b] = actions[b].at(r, q);
              any = any || !row[b].is_zero();
            }
            if (any) rows.push_back(row);
          }
  }
  c.annihilator.clear();
  Matrix m = rows.empty() ? Matrix(0, dim) : Matrix::from_rows(rows, dim);
  for (const auto& v : kernel(m)) c.annihilator.push_back(a->sparse(v));
}

std::vector<int> perp_injective_vertices(const TorsionClass& c) {
  std::vector<int> out;
  for (int v = 0; v < c.alg->num_vertices(); ++v)
    if (c.in_perp(injective(c.alg, v))) out.push_back(v);
  return out;
}

bool nu_stable(const TorsionClass& c) {
  for (const auto& x : c.indecomposables) {
    Representation nx = nu_module(x);
    if (!nx.is_zero() && !c.contains(nx)) return false;
  }
  return true;
}

SiltingRecord torsion_silting(const TorsionClass& c) {
  require(c.covariantly_finite, ErrorKind::NotCovariantlyFinite, "torsion class is not covariantly finite");
  AlgebraPtr a = c.alg;
  std::vector<ProjComplex> parts;
  for (const auto& x : c.ext_projectives) {
    Presentation p = projective_presentation(x);
    parts.push_back(two_term(a, p.p1, p.p0, p.d, 0));
  }
  for (int v : perp_injective_vertices(c)) parts.push_back(stalk(a, {v}, 0));
  ProjComplex t = parts.empty() ? zero_complex(a) : direct_sum(parts);
  return classify(t);
}

Representation okuyama_rickard_cogenerator(AlgebraPtr a, const std::vector<int>& e) {
  std::vector<int> rest;
  for (int v = 0; v < a->num_vertices(); ++v)
    if (std::find(e.begin(), e.end(), v) == e.end()) rest.push_back(v);
  return injective_sum(a, rest);
}

SiltingRecord okuyama_rickard(AlgebraPtr a, const std::vector<int>& e) {
  const int nv = a->num_vertices();
  std::vector<bool> in_e(nv, false);
  for (int v : e) {
    require(v >= 0 && v < nv, ErrorKind::InvalidArgument, "idempotent vertex out of range");
    in_e[v] = true;
  }
  std::vector<ProjComplex> parts;
  for (int v = 0; v < nv; ++v) {
    if (!in_e[v]) {
      parts.push_back(stalk(a, {v}, 0));
      continue;
    }
    Representation p = projective(a, v);
    std::vector<std::vector<Vec>> gens(nv);
    for (int w = 0; w < nv; ++w)
      if (!in_e[w])
        for (int i = 0; i < p.dims[w]; ++i) {
          Vec u(p.dims[w], Scalar(0));
          u[i] = 1;
          gens[w].push_back(u);
        }
    Sub s = generated_submodule(p, gens);
    ProjectiveCover pc = projective_cover(s.rep);
    AMatrix d(1, static_cast<int>(pc.verts.size()));
    for (std::size_t l = 0; l < pc.verts.size(); ++l) {
      const int w = pc.verts[l];
      Vec amb = s.basis[w].apply(pc.gens[l]);
      const auto& blk = a->block(v, w);
      Vec dense(a->dim(), Scalar(0));
      for (std::size_t i = 0; i < blk.size(); ++i) dense[blk[i]] = amb[i];
      d.at(0, static_cast<int>(l)) = a->sparse(dense);
    }
    parts.push_back(two_term(a, pc.verts, {v}, d, 0));
  }
  return classify(minimize(direct_sum(parts)));
}

Reduction two_term_reduce(const SiltingRecord& p) {
  AlgebraPtr a = p.complex.alg;
  ProjComplex reg = regular_complex(a);
  require(compare_order(p.complex, reg), ErrorKind::OrderViolated, "two-term reduction needs P >= A");
  Reduction out;
  const int bound = std::max(1, p.complex.hi() + 1);
  for (int l = 1; l <= bound; ++l)
    if (compare_order(shift(reg, -l), p.complex)) {
      out.length = l;
      break;
    }
  require(out.length > 0, ErrorKind::OrderViolated, "no l with A[-l] >= P");
  Representation h0 = cohomology(nu_module_complex(p.complex), 0);
  out.torsion = perp_class(h0);
  out.result = torsion_silting(out.torsion);
  const ProjComplex& t = out.result.complex;
  require(compare_order(shift(reg, -1), t) && compare_order(t, reg) &&
              compare_order(shift(t, -out.length + 1), p.complex) && compare_order(p.complex, t),
          ErrorKind::Internal, "two-term reduction postconditions failed");
  if (a->nakayama().self_injective) {
    ProjComplex np = nu_complex(p.complex);
    out.tilting_expected = in_add(np, p.summands) && in_add(p.complex, decompose_complex(np));
  }
  return out;
}

}  // namespace silt
