#include "silt/poly.hpp"

#include <algorithm>

#include "silt/errors.hpp"

namespace silt {

Poly trim(Poly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int degree(const Poly& p) { return static_cast<int>(trim(p).size()) - 1; }

Poly operator*(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return trim(r);
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return trim(r);
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly nb = b;
  for (auto& c : nb) c = -c;
  return a + nb;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  Poly bb = trim(b);
  require(!bb.empty(), ErrorKind::Internal, "polynomial division by zero");
  Poly r = trim(a);
  Poly q;
  Scalar lead_inv = bb.back().inverse();
  while (!r.empty() && r.size() >= bb.size()) {
    std::size_t shift = r.size() - bb.size();
    Scalar c = r.back() * lead_inv;
    if (q.size() < shift + 1) q.resize(shift + 1);
    q[shift] = c;
    for (std::size_t i = 0; i < bb.size(); ++i) r[i + shift] -= c * bb[i];
    r = trim(r);
  }
  return {trim(q), r};
}

ExtGcd ext_gcd(const Poly& a, const Poly& b) {
  Poly r0 = trim(a), r1 = trim(b);
  Poly s0 = {Scalar(1)}, s1 = {};
  Poly t0 = {}, t1 = {Scalar(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = r1;
    r1 = r;
    Poly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = s1;
    s1 = s2;
    t0 = t1;
    t1 = t2;
  }
  if (r0.empty()) return {r0, s0, t0};
  Scalar inv = r0.back().inverse();
  Poly c = {inv};
  return {r0 * c, s0 * c, t0 * c};
}

namespace {

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar v;
  for (auto it = p.rbegin(); it != p.rend(); ++it) v = v * x + *it;
  return v;
}

std::vector<mpz_class> divisors(mpz_class n, std::size_t limit) {
  if (n < 0) n = -n;
  std::vector<mpz_class> out;
  if (n == 0) return out;
  // trial division up to sqrt(n); numbers here come from tiny fixtures
  mpz_class d = 1;
  std::size_t steps = 0;
  while (d * d <= n) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
    d += 1;
    if (++steps > limit) break;
  }
  return out;
}

}  // namespace

std::vector<Scalar> field_roots(const Poly& p0, const Field& f) {
  Poly p = trim(p0);
  std::vector<Scalar> roots;
  if (p.size() <= 1) return roots;
  if (!f.is_rational()) {
    if (f.p > 2000000) fail(ErrorKind::FieldTooSmall, "root search over large prime fields is not supported");
    for (std::uint32_t v = 0; v < f.p; ++v) {
      Scalar x = Scalar::modular(v, f.p);
      if (eval(p, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // clear denominators
  std::vector<mpq_class> q;
  for (auto& c : p) q.push_back(c.to_mpq());
  mpz_class l = 1;
  for (auto& c : q) l = lcm(l, mpz_class(c.get_den()));
  std::vector<mpz_class> z;
  for (auto& c : q) z.push_back(mpz_class(c * l));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  if (low > 0) roots.push_back(Scalar(0));
  auto num = divisors(z[low], 2000000);
  auto den = divisors(z.back(), 2000000);
  std::vector<mpq_class> cands;
  for (auto& a : num)
    for (auto& b : den) {
      mpq_class c(a, b);
      c.canonicalize();
      cands.push_back(c);
      cands.push_back(-c);
    }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  for (auto& c : cands) {
    mpq_class v = 0;
    for (auto it = q.rbegin(); it != q.rend(); ++it) v = v * c + *it;
    if (v == 0) {
      Scalar s = Scalar::parse(c.get_str(), f);
      if (std::find(roots.begin(), roots.end(), s) == roots.end()) roots.push_back(s);
    }
  }
  return roots;
}

Poly minimal_polynomial(const Vec& one, const std::function<Vec(const Vec&)>& times_x) {
  std::vector<Vec> powers{one};
  const std::size_t n = one.size();
  for (std::size_t k = 1; k <= n + 1; ++k) {
    Vec next = times_x(powers.back());
    // solve next = sum c_i powers_i
    Matrix m = Matrix::from_columns(powers, n);
    if (auto c = solve(m, next)) {
      Poly poly(k + 1);
      for (std::size_t i = 0; i < k; ++i) poly[i] = -(*c)[i];
      poly[k] = 1;
      return poly;
    }
    powers.push_back(std::move(next));
  }
  fail(ErrorKind::Internal, "minimal polynomial did not terminate");
}

std::optional<Poly> splitting_polynomial(const Poly& m0, const Field& f) {
  Poly m = trim(m0);
  if (m.size() <= 2) return std::nullopt;
  for (const Scalar& lambda : field_roots(m, f)) {
    Poly lin = {-lambda, Scalar(1)};
    Poly q = m, power = {Scalar(1)};
    while (true) {
      auto [quot, rem] = divmod(q, lin);
      if (!rem.empty()) break;
      q = quot;
      power = power * lin;
    }
    if (degree(q) < 1) continue;
    // s * power + t * q = 1; e = t * q is 1 mod power and 0 mod q
    ExtGcd g = ext_gcd(power, q);
    Poly e = g.t * q;
    return divmod(e, m).second;
  }
  return std::nullopt;
}

}  // namespace silt
