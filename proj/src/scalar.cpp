#include "silt/scalar.hpp"

#include <numeric>
#include <ostream>

#include "silt/errors.hpp"

namespace silt {

namespace {

using i128 = __int128;

constexpr i128 kMax = static_cast<i128>(INT64_MAX);
constexpr i128 kMin = -kMax;  // keep symmetric so negation never overflows

bool fits(i128 v) { return v <= kMax && v >= kMin; }

i128 gcd128(i128 a, i128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; static_cast<std::uint64_t>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

long long mod_pow(long long b, long long e, long long p) {
  long long r = 1 % p;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = static_cast<long long>(static_cast<i128>(r) * b % p);
    b = static_cast<long long>(static_cast<i128>(b) * b % p);
    e >>= 1;
  }
  return r;
}

}  // namespace

Field Field::gf(std::uint32_t p) {
  require(is_prime(p), ErrorKind::InvalidArgument, "field order " + std::to_string(p) + " is not prime");
  return Field{p};
}

std::string Field::str() const { return p == 0 ? "rationals" : "gf:" + std::to_string(p); }

Scalar Scalar::rational(long long num, long long den) {
  require(den != 0, ErrorKind::InvalidArgument, "zero denominator");
  i128 n = num, d = den;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  i128 g = gcd128(n, d);
  if (g > 1) {
    n /= g;
    d /= g;
  }
  Scalar s;
  if (fits(n) && fits(d)) {
    s.num_ = static_cast<long long>(n);
    s.den_ = static_cast<long long>(d);
    return s;
  }
  mpq_class q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return from_mpq(q, 0);
}

Scalar Scalar::modular(long long v, std::uint32_t p) {
  Scalar s;
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  s.num_ = r;
  s.mod_ = p;
  return s;
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
  auto slash = text.find('/');
  try {
    if (f.is_rational()) {
      mpq_class q(text);
      q.canonicalize();
      return from_mpq(q, 0);
    }
    require(slash == std::string::npos, ErrorKind::Parse, "fractions are not accepted over " + f.str());
    mpz_class z(text);
    mpz_class r = z % static_cast<unsigned long>(f.p);
    if (r < 0) r += f.p;
    return modular(r.get_si(), f.p);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::Parse, "bad scalar '" + text + "'");
  }
}

Scalar Scalar::from_mpq(const mpq_class& q, std::uint32_t mod) {
  Scalar s;
  s.mod_ = mod;
  if (q.get_num().fits_slong_p() && q.get_den().fits_slong_p()) {
    long long n = q.get_num().get_si(), d = q.get_den().get_si();
    if (n != INT64_MIN && d != INT64_MIN) {
      s.num_ = n;
      s.den_ = d;
      return s;
    }
  }
  s.big_ = std::make_shared<const mpq_class>(q);
  s.num_ = 0;
  s.den_ = 1;
  return s;
}

mpq_class Scalar::to_mpq() const {
  if (big_) return *big_;
  mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
  q.canonicalize();
  return q;
}

std::uint32_t Scalar::join(const Scalar& a, const Scalar& b) {
  if (a.mod_ == b.mod_) return a.mod_;
  if (a.mod_ == 0) return b.mod_;
  if (b.mod_ == 0) return a.mod_;
  fail(ErrorKind::InvalidArgument, "mixing scalars of different prime fields");
}

long long Scalar::residue(std::uint32_t p) const {
  if (mod_ == p) return num_;
  mpq_class q = to_mpq();
  mpz_class n = q.get_num() % static_cast<unsigned long>(p);
  mpz_class d = q.get_den() % static_cast<unsigned long>(p);
  long long nn = n.get_si(), dd = d.get_si();
  if (nn < 0) nn += p;
  require(dd != 0, ErrorKind::InvalidArgument, "denominator divisible by field characteristic");
  return static_cast<long long>(static_cast<i128>(nn) * mod_pow(dd, p - 2, p) % p);
}

Scalar Scalar::inverse() const {
  require(!is_zero(), ErrorKind::InvalidArgument, "division by zero");
  if (mod_ != 0) return modular(mod_pow(num_, mod_ - 2, mod_), mod_);
  if (big_) {
    mpq_class q = 1 / *big_;
    return from_mpq(q, 0);
  }
  return rational(den_, num_);
}

Scalar Scalar::operator-() const {
  if (mod_ != 0) return modular(num_ == 0 ? 0 : mod_ - num_, mod_);
  if (big_) return from_mpq(-*big_, 0);
  Scalar s = *this;
  s.num_ = -num_;
  return s;
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::uint32_t m = Scalar::join(a, b);
  if (m != 0) return Scalar::modular((a.residue(m) + b.residue(m)) % m, m);
  if (!a.big_ && !b.big_) {
    if (a.den_ == 1 && b.den_ == 1) {
      i128 s = static_cast<i128>(a.num_) + b.num_;
      if (fits(s)) return Scalar(static_cast<long long>(s));
    } else {
      i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
      i128 d = static_cast<i128>(a.den_) * b.den_;
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
      if (fits(n) && fits(d)) {
        Scalar s;
        s.num_ = static_cast<long long>(n);
        s.den_ = static_cast<long long>(d);
        return s;
      }
    }
  }
  return Scalar::from_mpq(a.to_mpq() + b.to_mpq(), 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::uint32_t m = Scalar::join(a, b);
  if (m != 0)
    return Scalar::modular(static_cast<long long>(static_cast<i128>(a.residue(m)) * b.residue(m) % m), m);
  if (a.is_zero() || b.is_zero()) return Scalar();
  if (!a.big_ && !b.big_) {
    i128 n = static_cast<i128>(a.num_) * b.num_;
    i128 d = static_cast<i128>(a.den_) * b.den_;
    if (d != 1) {
      i128 g = gcd128(n, d);
      if (g > 1) {
        n /= g;
        d /= g;
      }
    }
    if (fits(n) && fits(d)) {
      Scalar s;
      s.num_ = static_cast<long long>(n);
      s.den_ = static_cast<long long>(d);
      return s;
    }
  }
  return Scalar::from_mpq(a.to_mpq() * b.to_mpq(), 0);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.mod_ != b.mod_) {
    std::uint32_t m = Scalar::join(a, b);
    return a.residue(m) == b.residue(m);
  }
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.to_mpq() == b.to_mpq();
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.mod_ != 0 || b.mod_ != 0) {
    std::uint32_t m = Scalar::join(a, b);
    return a.residue(m) < b.residue(m);
  }
  if (!a.big_ && !b.big_)
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  return a.to_mpq() < b.to_mpq();
}

bool Scalar::small_integer(long long& out) const {
  if (big_ || den_ != 1) return false;
  out = num_;
  return true;
}

std::string Scalar::str() const {
  if (big_) return big_->get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::PossiblyInfinite: return "PossiblyInfinite";
    case ErrorKind::MalformedRelation: return "MalformedRelation";
    case ErrorKind::FieldTooSmall: return "FieldTooSmall";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::NotSilting: return "NotSilting";
    case ErrorKind::NotPresilting: return "NotPresilting";
    case ErrorKind::SummandOutOfRange: return "SummandOutOfRange";
    case ErrorKind::OrderViolated: return "OrderViolated";
    case ErrorKind::UInAddT: return "UInAddT";
    case ErrorKind::GenerationUndecided: return "GenerationUndecided";
    case ErrorKind::NotCovariantlyFinite: return "NotCovariantlyFinite";
    case ErrorKind::NotSelfInjective: return "NotSelfInjective";
    case ErrorKind::Parse: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::Internal: return "InternalError";
  }
  return "Error";
}

}  // namespace silt
