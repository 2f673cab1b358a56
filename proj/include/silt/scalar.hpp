#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>

#include <gmpxx.h>

namespace silt {

/// Ground field descriptor: the rationals (modulus 0) or GF(p).
struct Field {
  std::uint32_t p = 0;

  static Field rationals() { return {}; }
  static Field gf(std::uint32_t p);

  bool is_rational() const { return p == 0; }
  std::string str() const;
  friend bool operator==(const Field&, const Field&) = default;
};

/// Exact element of Q or GF(p).
///
/// Rationals use an int64 numerator/denominator fast path and fall back to
/// GMP when an intermediate result leaves that range. A scalar built from a
/// plain integer carries no modulus and adopts the modulus of whatever it is
/// combined with.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(int v) : num_(v) {}        // NOLINT(google-explicit-constructor)

  static Scalar rational(long long num, long long den);
  static Scalar modular(long long v, std::uint32_t p);
  static Scalar in_field(long long v, const Field& f) {
    return f.is_rational() ? Scalar(v) : modular(v, f.p);
  }
  /// Parses "3", "-2/5" (rationals) or an integer reduced mod p.
  static Scalar parse(const std::string& text, const Field& f);

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  std::uint32_t modulus() const { return mod_; }

  Scalar inverse() const;
  Scalar operator-() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }
  Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
  Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
  Scalar& operator*=(const Scalar& b) { return *this = *this * b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order used only for canonical sorting (numeric for rationals).
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Canonical text: "n", "n/d", or the residue for GF(p).
  std::string str() const;
  /// Integer numerator/denominator when the value is small (rationals only).
  bool small_integer(long long& out) const;
  mpq_class to_mpq() const;

 private:
  static Scalar from_mpq(const mpq_class& q, std::uint32_t mod);
  static std::uint32_t join(const Scalar& a, const Scalar& b);
  long long residue(std::uint32_t p) const;

  long long num_ = 0;
  long long den_ = 1;
  std::uint32_t mod_ = 0;
  std::shared_ptr<const mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace silt
