#pragma once

// Exact scalar fields: rationals (GMP-backed) and prime fields GF(p) with a
// runtime modulus. Both types plug into Eigen through NumTraits so dense
// matrices over them behave like any other Eigen scalar.

#include <Eigen/Core>
#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace chainring {

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT
  Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    q_.canonicalize();
  }
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "a", "-a", "a/b".
  static Rational parse(std::string_view s);

  const mpq_class& raw() const { return q_; }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: inverse of zero");
    return Rational(mpq_class(1 / q_));
  }
  std::string str() const { return q_.get_str(); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }
  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }
  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }
  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_{0};
};

/// Element of GF(p). The modulus travels with the value; modulus 0 marks an
/// integer constant (as produced by Eigen's Zero()/Identity()) that adopts
/// the modulus of whatever it is combined with.
class ModP {
 public:
  ModP() = default;
  ModP(long v) : v_(v), p_(0) {}  // NOLINT(google-explicit-constructor)
  ModP(int v) : v_(v), p_(0) {}   // NOLINT
  ModP(std::int64_t v, std::uint32_t p) : p_(p) {
    if (p < 2) throw std::invalid_argument("ModP: modulus must be >= 2");
    v_ = reduce(v, p);
  }

  static ModP parse(std::string_view s, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  ModP inverse() const;
  std::string str() const { return std::to_string(v_); }

  ModP& operator+=(const ModP& o) { return combine(o, [](std::int64_t a, std::int64_t b) { return a + b; }); }
  ModP& operator-=(const ModP& o) { return combine(o, [](std::int64_t a, std::int64_t b) { return a - b; }); }
  ModP& operator*=(const ModP& o) { return combine(o, [](std::int64_t a, std::int64_t b) { return a * b; }); }
  ModP& operator/=(const ModP& o) { return *this *= o.inverse(); }
  friend ModP operator+(ModP a, const ModP& b) { return a += b; }
  friend ModP operator-(ModP a, const ModP& b) { return a -= b; }
  friend ModP operator*(ModP a, const ModP& b) { return a *= b; }
  friend ModP operator/(ModP a, const ModP& b) { return a /= b; }
  ModP operator-() const {
    ModP r = *this;
    r.v_ = p_ == 0 ? -v_ : (v_ == 0 ? 0 : p_ - v_);
    return r;
  }
  friend bool operator==(const ModP& a, const ModP& b) {
    std::uint32_t p = a.p_ ? a.p_ : b.p_;
    if (p == 0) return a.v_ == b.v_;
    return reduce(a.v_, p) == reduce(b.v_, p);
  }
  friend bool operator!=(const ModP& a, const ModP& b) { return !(a == b); }
  // Total order on representatives; only used for canonical sorting.
  friend bool operator<(const ModP& a, const ModP& b) { return a.v_ < b.v_; }
  friend bool operator>(const ModP& a, const ModP& b) { return b < a; }
  friend bool operator<=(const ModP& a, const ModP& b) { return !(b < a); }
  friend bool operator>=(const ModP& a, const ModP& b) { return !(a < b); }
  friend std::ostream& operator<<(std::ostream& os, const ModP& r) { return os << r.str(); }

 private:
  static std::int64_t reduce(std::int64_t v, std::uint32_t p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    return r < 0 ? r + p : r;
  }
  template <class Op>
  ModP& combine(const ModP& o, Op op) {
    if (p_ != 0 && o.p_ != 0 && p_ != o.p_) throw std::invalid_argument("ModP: mixed moduli");
    std::uint32_t p = p_ ? p_ : o.p_;
    if (p == 0) {
      v_ = op(v_, o.v_);
    } else {
      v_ = reduce(op(reduce(v_, p), reduce(o.v_, p)), p);
      p_ = p;
    }
    return *this;
  }

  std::int64_t v_ = 0;
  std::uint32_t p_ = 0;
};

/// Runtime description of the coefficient field, as given on the command
/// line or in instance files: "Q" or "Fp:p".
struct FieldSpec {
  enum class Kind { Rational, Prime } kind = Kind::Rational;
  std::uint32_t p = 0;

  static FieldSpec parse(std::string_view s);
  std::string str() const { return kind == Kind::Rational ? "Q" : "Fp:" + std::to_string(p); }
  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

bool is_prime(std::uint64_t n);

/// Uniform interface the templates use to make, parse and print scalars.
template <class K>
struct FieldOps;

template <>
struct FieldOps<Rational> {
  FieldSpec spec;
  Rational from_int(long v) const { return Rational(v); }
  Rational parse(std::string_view s) const { return Rational::parse(s); }
  std::uint64_t characteristic() const { return 0; }
};

template <>
struct FieldOps<ModP> {
  FieldSpec spec;
  ModP from_int(long v) const { return ModP(v, spec.p); }
  ModP parse(std::string_view s) const { return ModP::parse(s, spec.p); }
  std::uint64_t characteristic() const { return spec.p; }
};

inline bool is_zero(const Rational& r) { return r.is_zero(); }
inline bool is_zero(const ModP& r) { return r.is_zero(); }
inline std::string to_string(const Rational& r) { return r.str(); }
inline std::string to_string(const ModP& r) { return r.str(); }

}  // namespace chainring

namespace Eigen {

template <>
struct NumTraits<chainring::Rational> : GenericNumTraits<chainring::Rational> {
  typedef chainring::Rational Real;
  typedef chainring::Rational NonInteger;
  typedef chainring::Rational Literal;
  typedef chainring::Rational Nested;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 4,
    AddCost = 16,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<chainring::ModP> : GenericNumTraits<chainring::ModP> {
  typedef chainring::ModP Real;
  typedef chainring::ModP NonInteger;
  typedef chainring::ModP Literal;
  typedef chainring::ModP Nested;
  enum {
    IsInteger = 0,
    IsSigned = 0,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 3
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen
