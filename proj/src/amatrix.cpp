#include "silt/amatrix.hpp"

#include <sstream>

#include "silt/errors.hpp"

namespace silt {

bool AMatrix::is_zero() const {
  for (const auto& x : e)
    if (!x.is_zero()) return false;
  return true;
}

AMatrix amul(const Algebra& a, const AMatrix& x, const AMatrix& y) {
  require(x.cols == y.rows, ErrorKind::Internal, "A-matrix product shape mismatch");
  AMatrix r(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const Element& u = x.at(i, k);
      if (u.is_zero()) continue;
      for (int j = 0; j < y.cols; ++j) {
        const Element& v = y.at(k, j);
        if (v.is_zero()) continue;
        r.at(i, j) = r.at(i, j) + a.multiply(u, v);
      }
    }
  return r;
}

AMatrix aadd(const AMatrix& x, const AMatrix& y) {
  require(x.rows == y.rows && x.cols == y.cols, ErrorKind::Internal, "A-matrix sum shape mismatch");
  AMatrix r = x;
  for (std::size_t i = 0; i < r.e.size(); ++i) r.e[i] = r.e[i] + y.e[i];
  return r;
}

AMatrix ascale(const Scalar& s, const AMatrix& x) {
  AMatrix r = x;
  for (auto& v : r.e) v = s * v;
  return r;
}

AMatrix aidentity(const Algebra& a, const std::vector<int>& verts) {
  int n = static_cast<int>(verts.size());
  AMatrix r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = a.idempotent(verts[i]);
  return r;
}

AMatrix aselect(const AMatrix& x, const std::vector<int>& rows, const std::vector<int>& cols) {
  AMatrix r(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.at(i, j) = x.at(rows[i], cols[j]);
  return r;
}

AMatrix ablock(const AMatrix& a, const AMatrix& b, const AMatrix& c, const AMatrix& d) {
  int top = std::max(a.rows, b.rows), bottom = std::max(c.rows, d.rows);
  int left = std::max(a.cols, c.cols), right = std::max(b.cols, d.cols);
  AMatrix r(top + bottom, left + right);
  auto put = [&](const AMatrix& m, int r0, int c0) {
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(r0 + i, c0 + j) = m.at(i, j);
  };
  put(a, 0, 0);
  put(b, 0, left);
  put(c, top, 0);
  put(d, top, left);
  return r;
}

Scalar top_coefficient(const Algebra& a, const Element& x, int vertex) {
  return x.coeff(a.idempotent_index(vertex));
}

Matrix top_block(const Algebra& a, const AMatrix& x, const std::vector<int>& verts, int vertex) {
  std::vector<int> idx;
  for (int i = 0; i < static_cast<int>(verts.size()); ++i)
    if (verts[i] == vertex) idx.push_back(i);
  Matrix m(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) m.at(i, j) = top_coefficient(a, x.at(idx[i], idx[j]), vertex);
  return m;
}

AMatrix ainverse(const Algebra& a, const AMatrix& x, const std::vector<int>& verts) {
  const int n = static_cast<int>(verts.size());
  AMatrix dinv(n, n);
  for (int v = 0; v < a.num_vertices(); ++v) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (verts[i] == v) idx.push_back(i);
    if (idx.empty()) continue;
    auto inv = inverse(top_block(a, x, verts, v));
    require(inv.has_value(), ErrorKind::Internal, "A-matrix with singular top is not invertible");
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (!inv->at(i, j).is_zero()) dinv.at(idx[i], idx[j]) = inv->at(i, j) * a.idempotent(v);
  }
  // x = d (1 + d^-1 r) with d^-1 r radical, hence nilpotent
  AMatrix nil = aadd(amul(a, dinv, x), ascale(Scalar(-1), aidentity(a, verts)));
  AMatrix neg = ascale(Scalar(-1), nil);
  AMatrix sum = aidentity(a, verts), power = aidentity(a, verts);
  for (int k = 0; k <= a.loewy_bound(); ++k) {
    power = amul(a, power, neg);
    if (power.is_zero()) break;
    sum = aadd(sum, power);
  }
  return amul(a, sum, dinv);
}

std::string amatrix_string(const Algebra& a, const AMatrix& x) {
  std::ostringstream os;
  for (int i = 0; i < x.rows; ++i) {
    os << "[";
    for (int j = 0; j < x.cols; ++j) os << (j ? ", " : "") << a.element_string(x.at(i, j));
    os << "]";
  }
  return os.str();
}

}  // namespace silt
