#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "silt/matrix.hpp"

namespace silt {

/// Univariate polynomial, coefficients from degree 0 upwards, no trailing zeros.
using Poly = std::vector<Scalar>;

Poly trim(Poly p);
int degree(const Poly& p);
Poly operator*(const Poly& a, const Poly& b);
Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
/// Quotient and remainder; `b` must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Returns (g, s, t) with s a + t b = g, g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b);

/// Roots in the ground field. Over Q the rational-root test is used on the
/// scaled integer polynomial; over GF(p) every residue is tried.
std::vector<Scalar> field_roots(const Poly& p, const Field& f);

/// Minimal polynomial of an element x of a finite-dimensional algebra.
/// `one` is the coordinate vector of the unit, `times_x` maps v to v*x.
Poly minimal_polynomial(const Vec& one, const std::function<Vec(const Vec&)>& times_x);

/// For a minimal polynomial m = (t-l)^a q with q(l) != 0 and deg q >= 1,
/// returns e(t) with e = 1 mod (t-l)^a and e = 0 mod q, so e(x) is a
/// nontrivial idempotent. Empty when m has no such root.
std::optional<Poly> splitting_polynomial(const Poly& m, const Field& f);

}  // namespace silt
