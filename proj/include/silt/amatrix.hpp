#pragma once

#include <string>
#include <vector>

#include "silt/algebra.hpp"

namespace silt {

/// Matrix with entries in A describing a map between finite sums of
/// indecomposable projectives. Entry (r, c) maps the c-th source summand to
/// the r-th target summand and lies in e_{tgt[r]} A e_{src[c]}.
struct AMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Element> e;

  AMatrix() = default;
  AMatrix(int r, int c) : rows(r), cols(c), e(static_cast<std::size_t>(r) * c) {}

  Element& at(int r, int c) { return e[static_cast<std::size_t>(r) * cols + c]; }
  const Element& at(int r, int c) const { return e[static_cast<std::size_t>(r) * cols + c]; }
  bool is_zero() const;
  friend bool operator==(const AMatrix&, const AMatrix&) = default;
};

AMatrix amul(const Algebra& a, const AMatrix& x, const AMatrix& y);
AMatrix aadd(const AMatrix& x, const AMatrix& y);
AMatrix ascale(const Scalar& s, const AMatrix& x);
AMatrix aidentity(const Algebra& a, const std::vector<int>& verts);
/// Sub-matrix on the given row and column index lists.
AMatrix aselect(const AMatrix& x, const std::vector<int>& rows, const std::vector<int>& cols);
/// Block matrix [[a, b], [c, d]]; empty blocks are allowed.
AMatrix ablock(const AMatrix& a, const AMatrix& b, const AMatrix& c, const AMatrix& d);

/// Coefficient of the vertex idempotent in an entry between equal vertices.
Scalar top_coefficient(const Algebra& a, const Element& x, int vertex);
/// Scalar matrix of tops for an endomorphism of a sum of projectives,
/// restricted to the summands at `vertex` (rows and columns in order).
Matrix top_block(const Algebra& a, const AMatrix& x, const std::vector<int>& verts, int vertex);

/// Inverse of an endomorphism of a sum of projectives whose top is invertible.
AMatrix ainverse(const Algebra& a, const AMatrix& x, const std::vector<int>& verts);

std::string amatrix_string(const Algebra& a, const AMatrix& x);

}  // namespace silt
