#include "silt/errors.hpp"
#include "silt/module.hpp"

namespace silt {

namespace {

/// An isomorphism m -> n between indecomposables, if there is one.
std::optional<ModuleMap> find_isomorphism(const Representation& m, const Representation& n) {
  if (m.dims != n.dims) return std::nullopt;
  auto fs = hom_modules(m, n);
  auto gs = hom_modules(n, m);
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (rank(total_matrix(m, m, compose(g, f))) == static_cast<std::size_t>(m.total())) return f;
  return std::nullopt;
}

Matrix gram(const Algebra& a, const Vec& lambda) {
  const int d = a.dim();
  Matrix g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (const auto& [k, c] : a.basis_product(i, j).terms) g.at(i, j) += c * lambda[k];
  return g;
}

}  // namespace

NakayamaData compute_nakayama_data(const Algebra& alg) {
  AlgebraPtr a = alg.shared_from_this();
  const int n = a->num_vertices();
  NakayamaData out;
  std::vector<Representation> ps, is;
  for (int v = 0; v < n; ++v) {
    ps.push_back(projective(a, v));
    is.push_back(injective(a, v));
  }
  std::vector<int> rho(n, -1);
  std::vector<std::vector<Matrix>> transport(n);
  bool self_inj = true;
  for (int i = 0; i < n && self_inj; ++i) {
    for (int j = 0; j < n; ++j) {
      auto f = find_isomorphism(ps[j], is[i]);
      if (f) {
        rho[i] = j;
        transport[i] = f->comps;
        break;
      }
    }
    if (rho[i] < 0) self_inj = false;
  }
  out.self_injective = self_inj;
  if (!self_inj) {
    out.symmetric = false;
    return out;
  }
  out.permutation = rho;
  out.transport = transport;
  for (int i = 0; i < n; ++i)
    if (rho[i] != i) {
      out.symmetric = false;
      return out;
    }
  // forms with lambda(xy) = lambda(yx)
  const int d = a->dim();
  std::vector<Vec> eqs;
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Vec row(d, Scalar(0));
      for (const auto& [k, c] : a->basis_product(i, j).terms) row[k] += c;
      for (const auto& [k, c] : a->basis_product(j, i).terms) row[k] -= c;
      if (!is_zero(row)) eqs.push_back(row);
    }
  std::vector<Vec> sols;
  if (eqs.empty()) {
    for (int k = 0; k < d; ++k) {
      Vec e(d, Scalar(0));
      e[k] = 1;
      sols.push_back(e);
    }
  } else {
    sols = kernel(Matrix::from_rows(eqs, d));
  }
  std::vector<Vec> cands;
  if (!sols.empty()) {
    Vec all(d, Scalar(0));
    for (const auto& s : sols) all = silt::add(all, s);
    cands.push_back(all);
    for (const auto& s : sols) cands.push_back(s);
    for (int c = 2; c <= 4; ++c)
      for (std::size_t i = 0; i < sols.size(); ++i) {
        Vec v = all;
        v = silt::add(v, scale(Scalar(c - 1), sols[i]));
        cands.push_back(v);
      }
  }
  for (const auto& lam : cands)
    if (rank(gram(*a, lam)) == static_cast<std::size_t>(d)) {
      out.symmetric = true;
      out.symmetric_form = lam;
      return out;
    }
  out.symmetric = std::nullopt;
  return out;
}

}  // namespace silt
