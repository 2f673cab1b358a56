#include "silt/complex.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <unordered_map>

#include "silt/errors.hpp"
#include "silt/poly.hpp"

namespace silt {

namespace {

const std::vector<int> kEmpty;

Scalar sign(int n) { return (n % 2 == 0) ? Scalar(1) : Scalar(-1); }

/// Coefficient vector of an element restricted to a block.
void scatter(const Algebra& a, const Element& x, Vec& out, int base, const Scalar& s) {
  for (const auto& [b, c] : x.terms) out[base + a.position_in_block(b)] += s * c;
}

}  // namespace

const std::vector<int>& ProjComplex::term(int d) const {
  if (d < lo || d > hi()) return kEmpty;
  return terms[d - lo];
}

AMatrix ProjComplex::diff(int d) const {
  if (d >= lo && d < hi()) return diffs[d - lo];
  return AMatrix(static_cast<int>(term(d + 1).size()), static_cast<int>(term(d).size()));
}

int ProjComplex::num_summands() const {
  int n = 0;
  for (const auto& t : terms) n += static_cast<int>(t.size());
  return n;
}

ProjComplex zero_complex(AlgebraPtr a) {
  ProjComplex x;
  x.alg = a;
  return x;
}

ProjComplex make_complex(AlgebraPtr a, int lo, std::vector<std::vector<int>> terms, std::vector<AMatrix> diffs) {
  diffs.resize(terms.empty() ? 0 : terms.size() - 1);
  for (std::size_t k = 0; k + 1 < terms.size(); ++k)
    if (diffs[k].rows != static_cast<int>(terms[k + 1].size()) || diffs[k].cols != static_cast<int>(terms[k].size()))
      diffs[k] = AMatrix(static_cast<int>(terms[k + 1].size()), static_cast<int>(terms[k].size()));
  std::size_t first = 0, last = terms.size();
  while (first < last && terms[first].empty()) ++first;
  while (last > first && terms[last - 1].empty()) --last;
  ProjComplex x;
  x.alg = a;
  if (first == last) return x;
  x.lo = lo + static_cast<int>(first);
  x.terms.assign(terms.begin() + first, terms.begin() + last);
  x.diffs.assign(diffs.begin() + first, diffs.begin() + (last - 1));
  return x;
}

ProjComplex stalk(AlgebraPtr a, const std::vector<int>& verts, int degree) {
  return make_complex(a, degree, {verts}, {});
}

ProjComplex regular_complex(AlgebraPtr a, int degree) {
  std::vector<int> all;
  for (int v = 0; v < a->num_vertices(); ++v) all.push_back(v);
  return stalk(a, all, degree);
}

ProjComplex two_term(AlgebraPtr a, const std::vector<int>& p1, const std::vector<int>& p0, const AMatrix& d,
                     int lo) {
  return make_complex(a, lo, {p1, p0}, {d});
}

ProjComplex presentation_complex(const Representation& m) {
  Presentation p = projective_presentation(m);
  return two_term(m.alg, p.p1, p.p0, p.d, -1);
}

bool is_complex(const ProjComplex& x) {
  for (int d = x.lo; d + 1 < x.hi(); ++d)
    if (!amul(*x.alg, x.diff(d + 1), x.diff(d)).is_zero()) return false;
  for (int d = x.lo; d < x.hi(); ++d) {
    const AMatrix m = x.diff(d);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        for (const auto& [b, coeff] : m.at(r, c).terms) {
          const Path& p = x.alg->basis_path(b);
          if (p.source != x.term(d + 1)[r] || p.target != x.term(d)[c]) return false;
        }
  }
  return true;
}

ProjComplex shift(const ProjComplex& x, int n) {
  ProjComplex y = x;
  y.lo = x.lo - n;
  if (n % 2 != 0)
    for (auto& d : y.diffs) d = ascale(Scalar(-1), d);
  return y;
}

ProjComplex direct_sum(const std::vector<ProjComplex>& parts) {
  require(!parts.empty(), ErrorKind::Internal, "empty direct sum of complexes");
  AlgebraPtr a = parts.front().alg;
  int lo = 0, hi = -1;
  bool any = false;
  for (const auto& p : parts) {
    if (p.is_zero()) continue;
    lo = any ? std::min(lo, p.lo) : p.lo;
    hi = any ? std::max(hi, p.hi()) : p.hi();
    any = true;
  }
  if (!any) return zero_complex(a);
  std::vector<std::vector<int>> terms;
  std::vector<AMatrix> diffs;
  for (int d = lo; d <= hi; ++d) {
    std::vector<int> t;
    for (const auto& p : parts) t.insert(t.end(), p.term(d).begin(), p.term(d).end());
    terms.push_back(t);
  }
  for (int d = lo; d < hi; ++d) {
    AMatrix m(static_cast<int>(terms[d + 1 - lo].size()), static_cast<int>(terms[d - lo].size()));
    int ro = 0, co = 0;
    for (const auto& p : parts) {
      AMatrix pd = p.diff(d);
      for (int r = 0; r < pd.rows; ++r)
        for (int c = 0; c < pd.cols; ++c) m.at(ro + r, co + c) = pd.at(r, c);
      ro += pd.rows;
      co += pd.cols;
    }
    diffs.push_back(m);
  }
  return make_complex(a, lo, terms, diffs);
}

ProjComplex minimize(const ProjComplex& x0) {
  const Algebra& a = *x0.alg;
  int lo = x0.lo;
  std::vector<std::vector<int>> terms = x0.terms;
  std::vector<AMatrix> diffs = x0.diffs;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < diffs.size() && !changed; ++k) {
      AMatrix& d = diffs[k];
      for (int r = 0; r < d.rows && !changed; ++r)
        for (int c = 0; c < d.cols && !changed; ++c) {
          int v = terms[k][c];
          if (terms[k + 1][r] != v || top_coefficient(a, d.at(r, c), v).is_zero()) continue;
          AMatrix u(1, 1);
          u.at(0, 0) = d.at(r, c);
          AMatrix uinv = ainverse(a, u, {v});
          std::vector<int> keep_rows, keep_cols;
          for (int i = 0; i < d.rows; ++i)
            if (i != r) keep_rows.push_back(i);
          for (int j = 0; j < d.cols; ++j)
            if (j != c) keep_cols.push_back(j);
          AMatrix delta = aselect(d, keep_rows, keep_cols);
          AMatrix gamma = aselect(d, keep_rows, {c});
          AMatrix beta = aselect(d, {r}, keep_cols);
          AMatrix nd = aadd(delta, ascale(Scalar(-1), amul(a, gamma, amul(a, uinv, beta))));
          if (k > 0) {
            std::vector<int> all_prev;
            for (int j = 0; j < diffs[k - 1].cols; ++j) all_prev.push_back(j);
            diffs[k - 1] = aselect(diffs[k - 1], keep_cols, all_prev);
          }
          if (k + 1 < diffs.size()) {
            std::vector<int> all_next;
            for (int i = 0; i < diffs[k + 1].rows; ++i) all_next.push_back(i);
            diffs[k + 1] = aselect(diffs[k + 1], all_next, keep_rows);
          }
          diffs[k] = nd;
          terms[k].erase(terms[k].begin() + c);
          terms[k + 1].erase(terms[k + 1].begin() + r);
          changed = true;
        }
    }
  }
  return make_complex(x0.alg, lo, terms, diffs);
}

AMatrix component(const ProjComplex& x, const ProjComplex& y, const ChainMap& f, int d) {
  int k = d - f.lo;
  if (k >= 0 && k < static_cast<int>(f.comps.size())) return f.comps[k];
  return AMatrix(static_cast<int>(y.term(d).size()), static_cast<int>(x.term(d).size()));
}

ProjComplex cone(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  AlgebraPtr a = x.alg ? x.alg : y.alg;
  if (x.is_zero()) return y;
  int lo = x.lo - 1, hi = x.hi() - 1;
  if (!y.is_zero()) {
    lo = std::min(lo, y.lo);
    hi = std::max(hi, y.hi());
  }
  std::vector<std::vector<int>> terms;
  std::vector<AMatrix> diffs;
  for (int d = lo; d <= hi; ++d) {
    std::vector<int> t = x.term(d + 1);
    t.insert(t.end(), y.term(d).begin(), y.term(d).end());
    terms.push_back(t);
  }
  for (int d = lo; d < hi; ++d) {
    AMatrix dx = ascale(Scalar(-1), x.diff(d + 1));
    AMatrix fy = component(x, y, f, d + 1);
    AMatrix dy = y.diff(d);
    AMatrix z(dx.rows, dy.cols);
    AMatrix m(dx.rows + dy.rows, dx.cols + dy.cols);
    for (int r = 0; r < dx.rows; ++r)
      for (int c = 0; c < dx.cols; ++c) m.at(r, c) = dx.at(r, c);
    for (int r = 0; r < fy.rows; ++r)
      for (int c = 0; c < fy.cols; ++c) m.at(dx.rows + r, c) = fy.at(r, c);
    for (int r = 0; r < dy.rows; ++r)
      for (int c = 0; c < dy.cols; ++c) m.at(dx.rows + r, dx.cols + c) = dy.at(r, c);
    diffs.push_back(m);
  }
  return make_complex(a, lo, terms, diffs);
}

ChainMap identity_chain(const ProjComplex& x) {
  ChainMap f;
  f.lo = x.lo;
  for (const auto& t : x.terms) f.comps.push_back(aidentity(*x.alg, t));
  return f;
}

ChainMap compose(const Algebra& a, const ChainMap& g, const ChainMap& f) {
  ChainMap h;
  h.lo = f.lo;
  for (std::size_t k = 0; k < f.comps.size(); ++k) {
    int d = f.lo + static_cast<int>(k);
    int gk = d - g.lo;
    if (gk < 0 || gk >= static_cast<int>(g.comps.size())) {
      h.comps.emplace_back(0, f.comps[k].cols);
      continue;
    }
    h.comps.push_back(amul(a, g.comps[gk], f.comps[k]));
  }
  return h;
}

ChainMap compose(const ProjComplex& x, const ProjComplex& y, const ProjComplex& z, const ChainMap& g,
                 const ChainMap& f) {
  ChainMap h;
  h.lo = x.lo;
  const Algebra& a = *(x.alg ? x.alg : y.alg);
  for (int d = x.lo; d <= x.hi() && !x.is_zero(); ++d)
    h.comps.push_back(amul(a, component(y, z, g, d), component(x, y, f, d)));
  return h;
}

ChainMap add(const ChainMap& f, const ChainMap& g) {
  ChainMap h = f;
  for (std::size_t k = 0; k < f.comps.size(); ++k) h.comps[k] = aadd(f.comps[k], g.comps[k]);
  return h;
}

ChainMap scale(const Scalar& s, const ChainMap& f) {
  ChainMap h = f;
  for (auto& c : h.comps) c = ascale(s, c);
  return h;
}

ChainMap shift(const ChainMap& f, int n) {
  ChainMap g = f;
  g.lo = f.lo - n;
  return g;
}

bool is_chain_map(const ProjComplex& x, const ProjComplex& y, const ChainMap& f) {
  const Algebra& a = *x.alg;
  if (x.is_zero()) return true;
  for (int d = x.lo - 1; d <= x.hi(); ++d) {
    AMatrix l = amul(a, y.diff(d), component(x, y, f, d));
    AMatrix r = amul(a, component(x, y, f, d + 1), x.diff(d));
    if (!(aadd(l, ascale(Scalar(-1), r)).is_zero())) return false;
  }
  return true;
}

ChainMap sum_inclusion(const std::vector<ProjComplex>& parts, std::size_t k) {
  ProjComplex s = direct_sum(parts);
  const ProjComplex& p = parts[k];
  ChainMap f;
  f.lo = p.lo;
  for (int d = p.lo; d <= p.hi() && !p.is_zero(); ++d) {
    int off = 0;
    for (std::size_t j = 0; j < k; ++j) off += static_cast<int>(parts[j].term(d).size());
    AMatrix m(static_cast<int>(s.term(d).size()), static_cast<int>(p.term(d).size()));
    for (int c = 0; c < m.cols; ++c) m.at(off + c, c) = p.alg->idempotent(p.term(d)[c]);
    f.comps.push_back(m);
  }
  return f;
}

ChainMap sum_projection(const std::vector<ProjComplex>& parts, std::size_t k) {
  ProjComplex s = direct_sum(parts);
  const ProjComplex& p = parts[k];
  ChainMap f;
  f.lo = s.lo;
  for (int d = s.lo; d <= s.hi() && !s.is_zero(); ++d) {
    int off = 0;
    for (std::size_t j = 0; j < k; ++j) off += static_cast<int>(parts[j].term(d).size());
    AMatrix m(static_cast<int>(p.term(d).size()), static_cast<int>(s.term(d).size()));
    for (int r = 0; r < m.rows; ++r) m.at(r, off + r) = p.alg->idempotent(p.term(d)[r]);
    f.comps.push_back(m);
  }
  return f;
}

MapLayout::MapLayout(const ProjComplex& x, const ProjComplex& y, int degree_offset)
    : alg_(x.alg ? x.alg.get() : y.alg.get()), off_deg_(degree_offset) {
  if (x.is_zero()) return;
  lo_ = x.lo;
  hi_ = x.hi();
  for (int d = lo_; d <= hi_; ++d) {
    const auto& s = x.term(d);
    const auto& t = y.term(d + off_deg_);
    src_.push_back(s);
    tgt_.push_back(t);
    std::vector<int> base;
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < s.size(); ++c) {
        base.push_back(size_);
        size_ += static_cast<int>(alg_->block(t[r], s[c]).size());
      }
    base_.push_back(base);
  }
}

Vec MapLayout::flatten(const ChainMap& f) const {
  Vec v(size_, Scalar(0));
  for (int d = lo_; d <= hi_; ++d) {
    int k = d - lo_;
    int fk = d - f.lo;
    if (fk < 0 || fk >= static_cast<int>(f.comps.size())) continue;
    const AMatrix& m = f.comps[fk];
    const int cols = static_cast<int>(src_[k].size());
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) scatter(*alg_, m.at(r, c), v, base_[k][r * cols + c], Scalar(1));
  }
  return v;
}

ChainMap MapLayout::unflatten(const Vec& v) const {
  ChainMap f;
  f.lo = lo_;
  for (int d = lo_; d <= hi_; ++d) {
    int k = d - lo_;
    const auto& s = src_[k];
    const auto& t = tgt_[k];
    AMatrix m(static_cast<int>(t.size()), static_cast<int>(s.size()));
    for (std::size_t r = 0; r < t.size(); ++r)
      for (std::size_t c = 0; c < s.size(); ++c) {
        const auto& blk = alg_->block(t[r], s[c]);
        int base = base_[k][r * s.size() + c];
        Element e;
        for (std::size_t i = 0; i < blk.size(); ++i)
          if (!v[base + i].is_zero()) e.terms.emplace_back(blk[i], v[base + i]);
        std::sort(e.terms.begin(), e.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        m.at(static_cast<int>(r), static_cast<int>(c)) = e;
      }
    f.comps.push_back(m);
  }
  return f;
}

namespace {

/// Linear systems for degree-0 maps x -> y: cycle equations and homotopy image.
struct Systems {
  Matrix eq;    // rows: equations, cols: map coordinates
  Matrix homo;  // rows: map coordinates, cols: homotopy coordinates
};

Systems build_systems(const ProjComplex& x, const ProjComplex& y, const MapLayout& layout, bool with_homotopy) {
  const Algebra& a = *(x.alg ? x.alg : y.alg);
  Systems s;
  const int n = layout.size();
  if (x.is_zero()) {
    s.eq = Matrix(0, n);
    s.homo = Matrix(n, 0);
    return s;
  }
  const int lo = x.lo, hi = x.hi();
  // equation blocks: degree d gives X^d -> Y^{d+1}
  std::map<int, std::vector<int>> eq_base;
  int neq = 0;
  for (int d = lo; d <= hi; ++d) {
    const auto& src = x.term(d);
    const auto& tgt = y.term(d + 1);
    std::vector<int> base;
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c) {
        base.push_back(neq);
        neq += static_cast<int>(a.block(tgt[r], src[c]).size());
      }
    eq_base[d] = base;
  }
  std::vector<Vec> cols;
  cols.reserve(n);
  std::vector<AMatrix> dx, dy;
  for (int d = lo - 1; d <= hi + 1; ++d) {
    dx.push_back(x.diff(d));
    dy.push_back(y.diff(d));
  }
  auto DX = [&](int d) -> const AMatrix& { return dx[d - lo + 1]; };
  auto DY = [&](int d) -> const AMatrix& { return dy[d - lo + 1]; };
  for (int d = lo; d <= hi; ++d) {
    const auto& src = x.term(d);
    const auto& tgt = y.term(d);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int b : a.block(tgt[r], src[c])) {
          Vec col(neq, Scalar(0));
          Element be = a.basis_element(b);
          // d_Y f at degree d
          const AMatrix& ddy = DY(d);
          const auto& tgt1 = y.term(d + 1);
          for (int r2 = 0; r2 < ddy.rows; ++r2) {
            const Element& e = ddy.at(r2, static_cast<int>(r));
            if (e.is_zero()) continue;
            scatter(a, a.multiply(e, be), col, eq_base[d][r2 * src.size() + c], Scalar(1));
          }
          (void)tgt1;
          // - f d_X at degree d - 1
          if (d - 1 >= lo) {
            const AMatrix& ddx = DX(d - 1);
            const auto& src0 = x.term(d - 1);
            for (int c2 = 0; c2 < ddx.cols; ++c2) {
              const Element& e = ddx.at(static_cast<int>(c), c2);
              if (e.is_zero()) continue;
              scatter(a, a.multiply(be, e), col, eq_base[d - 1][r * src0.size() + c2], Scalar(-1));
            }
          }
          cols.push_back(std::move(col));
        }
  }
  s.eq = Matrix::from_columns(cols, neq);
  if (!with_homotopy) return s;
  std::vector<Vec> hcols;
  // map-coordinate bases for writing d_Y h + h d_X
  std::map<int, std::vector<int>> fbase;
  {
    int off = 0;
    for (int d = lo; d <= hi; ++d) {
      const auto& src = x.term(d);
      const auto& tgt = y.term(d);
      std::vector<int> base;
      for (std::size_t r = 0; r < tgt.size(); ++r)
        for (std::size_t c = 0; c < src.size(); ++c) {
          base.push_back(off);
          off += static_cast<int>(a.block(tgt[r], src[c]).size());
        }
      fbase[d] = base;
    }
  }
  for (int d = lo; d <= hi; ++d) {
    const auto& src = x.term(d);
    const auto& tgt = y.term(d - 1);
    for (std::size_t r = 0; r < tgt.size(); ++r)
      for (std::size_t c = 0; c < src.size(); ++c)
        for (int b : a.block(tgt[r], src[c])) {
          Vec col(n, Scalar(0));
          Element be = a.basis_element(b);
          const AMatrix& ddy = DY(d - 1);
          for (int r2 = 0; r2 < ddy.rows; ++r2) {
            const Element& e = ddy.at(r2, static_cast<int>(r));
            if (e.is_zero()) continue;
            scatter(a, a.multiply(e, be), col, fbase[d][r2 * src.size() + c], Scalar(1));
          }
          if (d - 1 >= lo) {
            const AMatrix& ddx = DX(d - 1);
            const auto& src0 = x.term(d - 1);
            for (int c2 = 0; c2 < ddx.cols; ++c2) {
              const Element& e = ddx.at(static_cast<int>(c), c2);
              if (e.is_zero()) continue;
              scatter(a, a.multiply(be, e), col, fbase[d - 1][r * src0.size() + c2], Scalar(1));
            }
          }
          hcols.push_back(std::move(col));
        }
  }
  s.homo = Matrix::from_columns(hcols, n);
  return s;
}

std::mutex cache_mutex;
std::unordered_map<std::string, int> hom_cache;
std::set<AlgebraPtr> cache_owners;

}  // namespace

HomSpace::HomSpace(const ProjComplex& x, const ProjComplex& y, int i, bool want_basis)
    : x_(x), y_(shift(y, i)), layout_(x_, y_) {
  Systems s = build_systems(x_, y_, layout_, true);
  const int n = layout_.size();
  if (!want_basis) {
    dim_ = n - static_cast<int>(rank(s.eq)) - static_cast<int>(rank(s.homo));
    return;
  }
  std::vector<Vec> z = kernel(s.eq);
  SpanBuilder span(n);
  std::vector<Vec> bvecs;
  for (std::size_t c = 0; c < s.homo.cols(); ++c) {
    Vec col = s.homo.column(c);
    if (span.add(col)) bvecs.push_back(col);
  }
  for (const auto& v : z) {
    cycles_.push_back(layout_.unflatten(v));
    if (span.add(v)) basis_vecs_.push_back(v);
  }
  dim_ = static_cast<int>(basis_vecs_.size());
  for (const auto& v : basis_vecs_) basis_.push_back(layout_.unflatten(v));
  // rows extracting quotient coordinates
  std::vector<Vec> all = basis_vecs_;
  all.insert(all.end(), bvecs.begin(), bvecs.end());
  const std::size_t k = all.size();
  Matrix aug(n, k + n);
  for (std::size_t c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) aug.at(r, c) = all[c][r];
  for (int r = 0; r < n; ++r) aug.at(r, k + r) = 1;
  rref(aug);
  coord_rows_ = Matrix(dim_, n);
  for (int r = 0; r < dim_; ++r)
    for (int c = 0; c < n; ++c) coord_rows_.at(r, c) = aug.at(r, k + c);
}

Vec HomSpace::coords(const ChainMap& f) const {
  if (dim_ == 0) return {};
  return coord_rows_.apply(layout_.flatten(f));
}

ChainMap HomSpace::combine(const Vec& c) const {
  Vec v(layout_.size(), Scalar(0));
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!c[i].is_zero()) v = silt::add(v, scale(c[i], basis_vecs_[i]));
  return layout_.unflatten(v);
}

bool HomSpace::is_null_homotopic(const ChainMap& f) const { return is_zero(coords(f)); }

int hom_dim(const ProjComplex& x, const ProjComplex& y, int i) {
  if (x.is_zero() || y.is_zero()) return 0;
  // supports that cannot meet give zero without any algebra
  if (y.hi() - i < x.lo || y.lo - i > x.hi()) return 0;
  std::ostringstream key;
  key << x.alg.get() << '#' << complex_key(x) << '#' << complex_key(y) << '#' << i;
  std::string k = key.str();
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = hom_cache.find(k);
    if (it != hom_cache.end()) return it->second;
  }
  int d = HomSpace(x, y, i, false).dim();
  std::lock_guard<std::mutex> lock(cache_mutex);
  cache_owners.insert(x.alg);
  hom_cache.emplace(k, d);
  return d;
}

std::vector<ChainMap> chain_maps(const ProjComplex& x, const ProjComplex& y) {
  MapLayout layout(x, y);
  Systems s = build_systems(x, y, layout, false);
  std::vector<ChainMap> out;
  for (const auto& v : kernel(s.eq)) out.push_back(layout.unflatten(v));
  return out;
}

Matrix top_matrix(const ProjComplex& x, const ChainMap& f) {
  const Algebra& a = *x.alg;
  const int n = x.num_summands();
  Matrix t(n, n);
  int off = 0;
  for (int d = x.lo; d <= x.hi() && !x.is_zero(); ++d) {
    const auto& vs = x.term(d);
    AMatrix m = component(x, x, f, d);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        if (vs[r] == vs[c]) t.at(off + r, off + c) = top_coefficient(a, m.at(r, c), vs[r]);
    off += static_cast<int>(vs.size());
  }
  return t;
}

namespace {

void require_trace_field(const Algebra& a, int size) {
  if (!a.field().is_rational() && static_cast<long long>(a.field().p) <= size)
    fail(ErrorKind::FieldTooSmall, "trace-form radical needs characteristic larger than " + std::to_string(size));
}

Vec flat(const Matrix& m) {
  Vec v;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v.push_back(m.at(r, c));
  return v;
}

Matrix unflat(const Vec& v, std::size_t n) {
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = v[r * n + c];
  return m;
}

/// Splits the idempotent eps of the sum of projectives `verts`.
/// Returns (summand vertices, s: P_J -> X, r: X -> P_J) with r s = 1, s r = eps.
struct DegreeSplit {
  std::vector<int> verts;
  AMatrix s, r;
};

DegreeSplit split_degree(const Algebra& a, const std::vector<int>& verts, const AMatrix& eps) {
  const int n = static_cast<int>(verts.size());
  Matrix top(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c)
      if (verts[r] == verts[c]) top.at(r, c) = top_coefficient(a, eps.at(r, c), verts[r]);
  Matrix t = top;
  auto piv = rref(t);
  std::vector<int> jcols(piv.begin(), piv.end());
  Matrix sel(jcols.size(), n);
  for (std::size_t i = 0; i < jcols.size(); ++i)
    for (int r = 0; r < n; ++r) sel.at(i, r) = top.at(r, jcols[i]);
  auto rpiv = rref(sel);
  std::vector<int> lrows(rpiv.begin(), rpiv.end());
  auto by_vertex = [&](int p, int q) { return verts[p] != verts[q] ? verts[p] < verts[q] : p < q; };
  std::sort(jcols.begin(), jcols.end(), by_vertex);
  std::sort(lrows.begin(), lrows.end(), by_vertex);
  DegreeSplit ds;
  for (int j : jcols) ds.verts.push_back(verts[j]);
  std::vector<int> lv;
  for (int l : lrows) lv.push_back(verts[l]);
  require(lv == ds.verts, ErrorKind::Internal, "idempotent top is not vertex-compatible");
  std::vector<int> all;
  for (int i = 0; i < n; ++i) all.push_back(i);
  ds.s = aselect(eps, all, jcols);
  AMatrix u = aselect(eps, lrows, jcols);
  ds.r = amul(a, ainverse(a, u, ds.verts), aselect(eps, lrows, all));
  return ds;
}

ProjComplex image_of_idempotent(const ProjComplex& x, const ChainMap& e) {
  const Algebra& a = *x.alg;
  std::vector<DegreeSplit> parts;
  std::vector<std::vector<int>> terms;
  for (int d = x.lo; d <= x.hi(); ++d) {
    parts.push_back(split_degree(a, x.term(d), component(x, x, e, d)));
    terms.push_back(parts.back().verts);
  }
  std::vector<AMatrix> diffs;
  for (int d = x.lo; d < x.hi(); ++d) {
    const auto& p0 = parts[d - x.lo];
    const auto& p1 = parts[d + 1 - x.lo];
    diffs.push_back(amul(a, p1.r, amul(a, x.diff(d), p0.s)));
  }
  return make_complex(x.alg, x.lo, terms, diffs);
}

/// Nontrivial idempotent chain endomorphism, or nullopt when End is local.
std::optional<ChainMap> find_idempotent(const ProjComplex& x) {
  const Algebra& a = *x.alg;
  std::vector<ChainMap> c = chain_maps(x, x);
  if (c.size() <= 1) return std::nullopt;
  const std::size_t n = static_cast<std::size_t>(x.num_summands());
  require_trace_field(a, static_cast<int>(n));
  std::vector<Matrix> tops;
  for (const auto& f : c) tops.push_back(top_matrix(x, f));
  Matrix gram(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i; j < c.size(); ++j) gram.at(i, j) = gram.at(j, i) = (tops[i] * tops[j]).trace();
  if (rank(gram) <= 1) return std::nullopt;
  MapLayout layout(x, x);
  auto try_split = [&](const ChainMap& phi, const Matrix& tphi) -> std::optional<ChainMap> {
    Poly mt = minimal_polynomial(flat(Matrix::identity(n)), [&](const Vec& v) { return flat(unflat(v, n) * tphi); });
    if (!splitting_polynomial(mt, a.field())) return std::nullopt;
    Vec one = layout.flatten(identity_chain(x));
    Poly m = minimal_polynomial(one, [&](const Vec& v) { return layout.flatten(compose(a, layout.unflatten(v), phi)); });
    auto e = splitting_polynomial(m, a.field());
    if (!e) return std::nullopt;
    ChainMap acc = scale(Scalar(0), identity_chain(x));
    for (auto it = e->rbegin(); it != e->rend(); ++it) acc = add(compose(a, acc, phi), scale(*it, identity_chain(x)));
    return acc;
  };
  for (std::size_t i = 0; i < c.size(); ++i)
    if (auto e = try_split(c[i], tops[i])) return e;
  for (int coeff = 1; coeff <= 3; ++coeff)
    for (std::size_t i = 0; i < c.size(); ++i)
      for (std::size_t j = i + 1; j < c.size(); ++j) {
        ChainMap phi = add(c[i], scale(Scalar(coeff), c[j]));
        if (auto e = try_split(phi, tops[i] + Scalar(coeff) * tops[j])) return e;
      }
  fail(ErrorKind::FieldTooSmall, "no splitting idempotent for a decomposable complex over the ground field");
}

void split_complex(const ProjComplex& x, std::vector<ProjComplex>& out) {
  if (x.is_zero()) return;
  auto e = find_idempotent(x);
  if (!e) {
    out.push_back(x);
    return;
  }
  ChainMap comp = add(identity_chain(x), scale(Scalar(-1), *e));
  split_complex(minimize(image_of_idempotent(x, *e)), out);
  split_complex(minimize(image_of_idempotent(x, comp)), out);
}

std::vector<std::vector<int>> sorted_terms(const ProjComplex& x) {
  std::vector<std::vector<int>> t = x.terms;
  for (auto& v : t) std::sort(v.begin(), v.end());
  return t;
}

}  // namespace

std::vector<ProjComplex> decompose_complex(const ProjComplex& x) {
  std::vector<ProjComplex> out;
  split_complex(minimize(x), out);
  std::stable_sort(out.begin(), out.end(), complex_less);
  return out;
}

bool is_indecomposable(const ProjComplex& x) {
  ProjComplex m = minimize(x);
  return !m.is_zero() && !find_idempotent(m);
}

bool iso_indecomposables(const ProjComplex& x0, const ProjComplex& y0) {
  ProjComplex x = minimize(x0), y = minimize(y0);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo != y.lo || sorted_terms(x) != sorted_terms(y)) return false;
  auto fs = chain_maps(x, y);
  if (fs.empty()) return false;
  auto gs = chain_maps(y, x);
  const std::size_t n = static_cast<std::size_t>(x.num_summands());
  for (const auto& f : fs)
    for (const auto& g : gs)
      if (rank(top_matrix(x, compose(*x.alg, g, f))) == n) return true;
  return false;
}

bool iso_complexes(const ProjComplex& x0, const ProjComplex& y0) {
  ProjComplex x = minimize(x0), y = minimize(y0);
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  if (x.lo != y.lo || sorted_terms(x) != sorted_terms(y)) return false;
  auto dx = decompose_complex(x), dy = decompose_complex(y);
  if (dx.size() != dy.size()) return false;
  std::vector<bool> used(dy.size(), false);
  for (const auto& p : dx) {
    bool ok = false;
    for (std::size_t j = 0; j < dy.size(); ++j)
      if (!used[j] && iso_indecomposables(p, dy[j])) {
        used[j] = ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

std::vector<ProjComplex> basic_summands(const ProjComplex& x) {
  std::vector<ProjComplex> out;
  for (auto& p : decompose_complex(x)) {
    bool dup = false;
    for (const auto& q : out)
      if (iso_indecomposables(p, q)) {
        dup = true;
        break;
      }
    if (!dup) out.push_back(p);
  }
  return out;
}

ProjComplex basic_part(const ProjComplex& x) {
  auto parts = basic_summands(x);
  if (parts.empty()) return zero_complex(x.alg);
  return direct_sum(parts);
}

bool compare_order(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero() || y.is_zero()) return true;
  for (int i = 1; i <= y.hi() - x.lo; ++i)
    if (hom_dim(x, y, i) != 0) return false;
  return true;
}

int complex_length(const ProjComplex& x) {
  ProjComplex m = minimize(x);
  return m.is_zero() ? 0 : m.hi() - m.lo + 1;
}

std::string complex_key(const ProjComplex& x) {
  std::ostringstream os;
  if (x.is_zero()) return "0";
  os << x.lo << ':';
  for (const auto& t : x.terms) {
    os << '[';
    for (int v : t) os << v << ',';
    os << ']';
  }
  for (const auto& d : x.diffs) {
    os << '{';
    for (const auto& e : d.e) {
      for (const auto& [b, c] : e.terms) os << b << '*' << c << '+';
      os << ';';
    }
    os << '}';
  }
  return os.str();
}

std::string fingerprint(const ProjComplex& x0) {
  ProjComplex x = minimize(x0);
  if (x.is_zero()) return "0";
  std::ostringstream os;
  os << x.lo << ".." << x.hi() << '|';
  for (const auto& t : sorted_terms(x)) {
    for (int v : t) os << v << ',';
    os << '|';
  }
  const int n = x.alg->num_vertices();
  for (int v = 0; v < n; ++v) {
    ProjComplex p = stalk(x.alg, {v}, 0);
    for (int k = x.lo; k <= x.hi(); ++k) os << hom_dim(p, x, k) << '.';
    for (int k = -x.hi(); k <= -x.lo; ++k) os << hom_dim(x, p, k) << '.';
    os << '|';
  }
  return os.str();
}

bool complex_less(const ProjComplex& x, const ProjComplex& y) {
  if (x.is_zero() != y.is_zero()) return x.is_zero();
  if (x.is_zero()) return false;
  if (x.lo != y.lo) return x.lo < y.lo;
  if (x.hi() != y.hi()) return x.hi() < y.hi();
  auto tx = sorted_terms(x), ty = sorted_terms(y);
  if (tx != ty) return tx < ty;
  std::string fx = fingerprint(x), fy = fingerprint(y);
  if (fx != fy) return fx < fy;
  return complex_key(x) < complex_key(y);
}

namespace {

std::string ordinal(int d) {
  int m = std::abs(d) % 100;
  const char* suf = "th";
  if (m < 11 || m > 13) {
    if (m % 10 == 1) suf = "st";
    if (m % 10 == 2) suf = "nd";
    if (m % 10 == 3) suf = "rd";
  }
  return "(" + std::to_string(d) + suf + ")";
}

std::string term_label(const Algebra& a, const std::vector<int>& t) {
  if (t.empty()) return "";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "+" : "") + ("P_" + a.quiver().vertex(t[i]));
  return s;
}

}  // namespace

std::string pretty(const ProjComplex& x) {
  if (x.is_zero()) return "0\n";
  const Algebra& a = *x.alg;
  auto parts = decompose_complex(x);
  const int lo = x.lo, hi = x.hi();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header;
  for (int d = lo; d <= hi; ++d) header.push_back(ordinal(d));
  rows.push_back(header);
  for (const auto& p : parts) {
    std::vector<std::string> row(hi - lo + 1);
    for (int d = lo; d <= hi; ++d) {
      std::string cell = term_label(a, p.term(d));
      if (!cell.empty() && !p.term(d + 1).empty()) {
        AMatrix m = p.diff(d);
        std::string lab = (m.rows == 1 && m.cols == 1) ? a.element_string(m.at(0, 0)) : amatrix_string(a, m);
        if (!lab.empty() && lab[0] == '-') lab = "[" + lab + "]";
        cell += " -" + lab + "->";
      }
      row[d - lo] = cell;
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(hi - lo + 1, 0);
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::string cell = r[i];
      cell.resize(width[i], ' ');
      line += cell + (i + 1 < r.size() ? " " : "");
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    os << line << '\n';
  }
  return os.str();
}

ModuleComplex module_complex(const ProjComplex& x) {
  ModuleComplex m;
  m.alg = x.alg;
  m.lo = x.lo;
  for (const auto& t : x.terms) m.terms.push_back(projective_sum(x.alg, t));
  for (int d = x.lo; d < x.hi(); ++d) m.diffs.push_back(proj_map(x.alg, x.term(d), x.term(d + 1), x.diff(d)));
  return m;
}

ModuleComplex nu_module_complex(const ProjComplex& x) {
  ModuleComplex m;
  m.alg = x.alg;
  m.lo = x.lo;
  for (const auto& t : x.terms) m.terms.push_back(injective_sum(x.alg, t));
  for (int d = x.lo; d < x.hi(); ++d) m.diffs.push_back(nu_proj_map(x.alg, x.term(d), x.term(d + 1), x.diff(d)));
  return m;
}

Representation cohomology(const ModuleComplex& x, int i) {
  if (x.terms.empty() || i < x.lo || i > x.hi()) return zero_module(x.alg);
  const Representation& t = x.terms[i - x.lo];
  std::vector<Matrix> outer, inner;
  if (i < x.hi()) {
    outer = kernel(t, x.terms[i + 1 - x.lo], x.diffs[i - x.lo]).basis;
  } else {
    for (int d : t.dims) outer.push_back(Matrix::identity(d));
  }
  if (i > x.lo) {
    inner = image(x.terms[i - 1 - x.lo], t, x.diffs[i - 1 - x.lo]).basis;
  } else {
    for (int d : t.dims) inner.emplace_back(d, 0);
  }
  return subquotient(t, outer, inner);
}

Representation cohomology(const ProjComplex& x, int i) {
  if (x.is_zero()) return zero_module(x.alg);
  return cohomology(module_complex(x), i);
}

int hom_dim_to_modules(const ProjComplex& x, const ModuleComplex& z, int i) {
  if (x.is_zero() || z.terms.empty()) return 0;
  const Algebra& a = *x.alg;
  // zs = z[i]: term d is z^{d+i}, differential (-1)^i d_z
  auto zterm = [&](int d) -> const Representation* {
    int k = d + i - z.lo;
    if (k < 0 || k >= static_cast<int>(z.terms.size())) return nullptr;
    return &z.terms[k];
  };
  auto zdiff = [&](int d, int v) -> Matrix {
    int k = d + i - z.lo;
    const Representation* s = zterm(d);
    const Representation* t = zterm(d + 1);
    int rows = t ? t->dims[v] : 0, cols = s ? s->dims[v] : 0;
    if (!s || !t) return Matrix(rows, cols);
    return sign(i) * z.diffs[k].comps[v];
  };
  auto vdim = [&](int d, int v) { const Representation* s = zterm(d); return s ? s->dims[v] : 0; };
  const int lo = x.lo, hi = x.hi();
  std::map<std::pair<int, int>, int> var;  // (degree, summand) -> offset
  int n = 0;
  for (int d = lo; d <= hi; ++d)
    for (std::size_t c = 0; c < x.term(d).size(); ++c) {
      var[{d, static_cast<int>(c)}] = n;
      n += vdim(d, x.term(d)[c]);
    }
  std::map<std::pair<int, int>, int> eqo;
  int neq = 0;
  for (int d = lo; d <= hi; ++d)
    for (std::size_t c = 0; c < x.term(d).size(); ++c) {
      eqo[{d, static_cast<int>(c)}] = neq;
      neq += vdim(d + 1, x.term(d)[c]);
    }
  Matrix eq(neq, n);
  for (int d = lo; d <= hi; ++d) {
    const auto& src = x.term(d);
    for (std::size_t c = 0; c < src.size(); ++c) {
      int v = src[c];
      int row0 = eqo[{d, static_cast<int>(c)}];
      Matrix dz = zdiff(d, v);
      int col0 = var[{d, static_cast<int>(c)}];
      for (std::size_t r = 0; r < dz.rows(); ++r)
        for (std::size_t cc = 0; cc < dz.cols(); ++cc) eq.at(row0 + r, col0 + cc) += dz.at(r, cc);
      if (d + 1 <= hi && zterm(d + 1)) {
        AMatrix dx = x.diff(d);
        const auto& src1 = x.term(d + 1);
        for (std::size_t c1 = 0; c1 < src1.size(); ++c1) {
          const Element& e = dx.at(static_cast<int>(c1), static_cast<int>(c));
          if (e.is_zero()) continue;
          Matrix m = act(*zterm(d + 1), e, src1[c1], v);
          int cv = var[{d + 1, static_cast<int>(c1)}];
          for (std::size_t r = 0; r < m.rows(); ++r)
            for (std::size_t cc = 0; cc < m.cols(); ++cc) eq.at(row0 + r, cv + cc) -= m.at(r, cc);
        }
      }
    }
  }
  std::vector<Vec> hcols;
  for (int d = lo; d <= hi; ++d) {
    const auto& src = x.term(d);
    for (std::size_t c = 0; c < src.size(); ++c) {
      int v = src[c];
      int hd = vdim(d - 1, v);
      for (int k = 0; k < hd; ++k) {
        Vec col(n, Scalar(0));
        Vec unit(hd, Scalar(0));
        unit[k] = 1;
        Matrix dz = zdiff(d - 1, v);
        Vec img = dz.apply(unit);
        int o = var[{d, static_cast<int>(c)}];
        for (std::size_t r = 0; r < img.size(); ++r) col[o + r] += img[r];
        if (d - 1 >= lo) {
          AMatrix dx = x.diff(d - 1);
          const auto& src0 = x.term(d - 1);
          for (std::size_t c0 = 0; c0 < src0.size(); ++c0) {
            const Element& e = dx.at(static_cast<int>(c), static_cast<int>(c0));
            if (e.is_zero()) continue;
            Vec im = act(*zterm(d - 1), e, v, src0[c0]).apply(unit);
            int o0 = var[{d - 1, static_cast<int>(c0)}];
            for (std::size_t r = 0; r < im.size(); ++r) col[o0 + r] += im[r];
          }
        }
        hcols.push_back(std::move(col));
      }
    }
  }
  (void)a;
  int rh = hcols.empty() ? 0 : static_cast<int>(rank(Matrix::from_columns(hcols, n)));
  return n - static_cast<int>(rank(eq)) - rh;
}

namespace {

const NakayamaData& require_self_injective(const Algebra& a) {
  const NakayamaData& nd = a.nakayama();
  require(nd.self_injective, ErrorKind::NotSelfInjective, "nu on projective complexes needs a self-injective algebra");
  return nd;
}

/// nu(L_x) for x in e_r A e_c, moved to P_{rho(c)} -> P_{rho(r)} through the transport isomorphisms.
Element nu_entry(AlgebraPtr a, const Element& x, int r, int c) {
  const NakayamaData& nd = require_self_injective(*a);
  const int pr = nd.permutation[r], pc = nd.permutation[c];
  AMatrix one(1, 1);
  one.at(0, 0) = x;
  ModuleMap nm = nu_proj_map(a, {c}, {r}, one);
  // generator of P_{rho(c)} sits at vertex rho(c)
  const int w = pc;
  Vec g(a->block(pc, w).size(), Scalar(0));
  g[a->position_in_block(a->idempotent_index(pc))] = 1;
  Vec in_ic = nd.transport[c][w].apply(g);
  Vec in_ir = nm.comps[w].apply(in_ic);
  auto inv = inverse(nd.transport[r][w]);
  require(inv.has_value(), ErrorKind::Internal, "transport is not invertible");
  Vec out = inv->apply(in_ir);
  const auto& blk = a->block(pr, w);
  Element e;
  for (std::size_t i = 0; i < blk.size(); ++i)
    if (!out[i].is_zero()) e.terms.emplace_back(blk[i], out[i]);
  std::sort(e.terms.begin(), e.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
  return e;
}

}  // namespace

ProjComplex nu_complex(const ProjComplex& x) {
  if (x.is_zero()) return x;
  const NakayamaData& nd = require_self_injective(*x.alg);
  std::vector<std::vector<int>> terms;
  for (const auto& t : x.terms) {
    std::vector<int> nt;
    for (int v : t) nt.push_back(nd.permutation[v]);
    terms.push_back(nt);
  }
  std::vector<AMatrix> diffs;
  for (int d = x.lo; d < x.hi(); ++d) {
    AMatrix m = x.diff(d), out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        if (!m.at(r, c).is_zero()) out.at(r, c) = nu_entry(x.alg, m.at(r, c), x.term(d + 1)[r], x.term(d)[c]);
    diffs.push_back(out);
  }
  return make_complex(x.alg, x.lo, terms, diffs);
}

ProjComplex nu_inverse_complex(const ProjComplex& x) {
  if (x.is_zero()) return x;
  AlgebraPtr a = x.alg;
  const NakayamaData& nd = require_self_injective(*a);
  const int nv = a->num_vertices();
  std::vector<int> inv(nv);
  for (int v = 0; v < nv; ++v) inv[nd.permutation[v]] = v;
  std::vector<std::vector<int>> terms;
  for (const auto& t : x.terms) {
    std::vector<int> nt;
    for (int v : t) nt.push_back(inv[v]);
    terms.push_back(nt);
  }
  std::vector<AMatrix> diffs;
  for (int d = x.lo; d < x.hi(); ++d) {
    AMatrix m = x.diff(d), out(m.rows, m.cols);
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c) {
        if (m.at(r, c).is_zero()) continue;
        int sr = inv[x.term(d + 1)[r]], sc = inv[x.term(d)[c]];
        // solve nu(y) = entry over the block e_sr A e_sc
        const auto& blk = a->block(sr, sc);
        const auto& tblk = a->block(nd.permutation[sr], nd.permutation[sc]);
        std::vector<Vec> cols;
        for (int b : blk) {
          Element img = nu_entry(a, a->basis_element(b), sr, sc);
          Vec col(tblk.size(), Scalar(0));
          for (const auto& [bb, cc] : img.terms) col[a->position_in_block(bb)] += cc;
          cols.push_back(col);
        }
        Vec rhs(tblk.size(), Scalar(0));
        for (const auto& [bb, cc] : m.at(r, c).terms) rhs[a->position_in_block(bb)] += cc;
        auto sol = solve(Matrix::from_columns(cols, tblk.size()), rhs);
        require(sol.has_value(), ErrorKind::Internal, "nu is not surjective on a Hom block");
        Element e;
        for (std::size_t i = 0; i < blk.size(); ++i)
          if (!(*sol)[i].is_zero()) e.terms.emplace_back(blk[i], (*sol)[i]);
        std::sort(e.terms.begin(), e.terms.end(), [](const auto& p, const auto& q) { return p.first < q.first; });
        out.at(r, c) = e;
      }
    diffs.push_back(out);
  }
  return make_complex(a, x.lo, terms, diffs);
}

}  // namespace silt
