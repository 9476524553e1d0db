#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "greenring/rational.hpp"

namespace greenring {

/// Raised for arithmetic that the field cannot perform (inverse of zero, 0·∞).
struct FieldError : std::domain_error {
  using std::domain_error::domain_error;
};

/// Syntax error in a textual scalar or expression, with a byte offset.
struct ParseError : std::runtime_error {
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at offset " + std::to_string(offset)), offset(offset) {}
  std::size_t offset;
};

class FieldElem;

/// The n-th cyclotomic polynomial, coefficients from x^0 upward. Monic.
std::vector<Rational> cyclotomic_poly(int n);

/// Q(ζ_n) presented as Q[x]/Φ_n(x), with q := x.
/// One instance per n, created on first use and immutable afterwards.
class CycloField {
 public:
  static const CycloField& get(int n);

  int n() const { return n_; }
  int degree() const { return deg_; }
  const std::vector<Rational>& phi() const { return phi_; }
  /// x^k mod Φ_n for 0 <= k <= 2·deg−2.
  const std::vector<Rational>& power_reduction(int k) const { return red_[k]; }
  const FieldElem& q_pow(long long e) const;

 private:
  explicit CycloField(int n);
  int n_;
  int deg_;
  std::vector<Rational> phi_;
  std::vector<std::vector<Rational>> red_;
  std::vector<FieldElem> qpow_;
};

/// An element of Q(ζ_n).
///
/// Stored as the coefficient vector of its reduced representative with
/// trailing zeros trimmed, so the zero element owns no storage and equality is
/// vector equality. Rational constants (such as Eigen's Scalar(0) and
/// Scalar(1)) may carry no field pointer; they combine with any field.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(long long v);  // NOLINT: implicit by design (Eigen literals)
  FieldElem(int v) : FieldElem(static_cast<long long>(v)) {}  // NOLINT
  FieldElem(const Rational& r);                                // NOLINT
  FieldElem(const CycloField& F, std::vector<Rational> coeffs);

  static FieldElem q(int n) { return CycloField::get(n).q_pow(1); }

  const CycloField* field() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  bool is_rational() const { return c_.size() <= 1; }
  /// Full-length coefficient vector (length deg Φ_n, or 1 without a field).
  std::vector<Rational> coeffs() const;
  const std::vector<Rational>& raw() const { return c_; }

  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o) { return *this *= o.inverse(); }
  FieldElem inverse() const;
  /// this += a * b.
  void add_mul(const FieldElem& a, const FieldElem& b);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(const FieldElem& a, const FieldElem& b);
  friend FieldElem operator/(const FieldElem& a, const FieldElem& b) { return a * b.inverse(); }
  friend bool operator==(const FieldElem& a, const FieldElem& b) { return a.c_ == b.c_; }
  friend bool operator!=(const FieldElem& a, const FieldElem& b) { return !(a.c_ == b.c_); }

  /// Text form "1/2 + 3*q^2"; "0" for zero.
  std::string to_string() const;
  std::size_t hash() const;

 private:
  void trim();
  static const CycloField* join(const FieldElem& a, const FieldElem& b);

  const CycloField* F_ = nullptr;
  std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const FieldElem& x);

inline bool is_zero(const FieldElem& x) { return x.is_zero(); }
inline FieldElem inverse(const FieldElem& x) { return x.inverse(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline Rational inverse(const Rational& x) { return x.inverse(); }

/// q^e for any integer e.
FieldElem pow_q(int n, long long e);
/// (i)_q = 1 + q + ... + q^{i−1}, i >= 0.
FieldElem q_int(int n, long long i);
/// α_i(l) = (i)_q (1 − q^{i−l}), 1 <= i < l <= n.
FieldElem alpha(int n, int i, int l);

/// Parse a rational polynomial in q, e.g. "q^2*(1+q)" or "-1/2+q".
FieldElem parse_field_elem(int n, std::string_view text);

/// A point of P^1 = Q(ζ_n) ∪ {∞}.
class ExtScalar {
 public:
  ExtScalar() = default;
  ExtScalar(FieldElem v) : value_(std::move(v)) {}  // NOLINT
  static ExtScalar infinity() {
    ExtScalar e;
    e.inf_ = true;
    return e;
  }
  bool is_infinity() const { return inf_; }
  bool is_finite() const { return !inf_; }
  const FieldElem& value() const;

  friend bool operator==(const ExtScalar& a, const ExtScalar& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.value_ == b.value_);
  }
  friend bool operator!=(const ExtScalar& a, const ExtScalar& b) { return !(a == b); }

  std::string to_string() const { return inf_ ? "inf" : value_.to_string(); }

 private:
  bool inf_ = false;
  FieldElem value_;
};

/// a·η with ∞ absorbing nonzero scalars; 0·∞ is a FieldError.
ExtScalar ext_scale(const FieldElem& a, const ExtScalar& eta);
ExtScalar parse_ext_scalar(int n, std::string_view text);

}  // namespace greenring

template <>
struct std::hash<greenring::FieldElem> {
  std::size_t operator()(const greenring::FieldElem& x) const { return x.hash(); }
};

namespace Eigen {

template <>
struct NumTraits<greenring::FieldElem> : GenericNumTraits<greenring::FieldElem> {
  using Real = greenring::FieldElem;
  using NonInteger = greenring::FieldElem;
  using Literal = greenring::FieldElem;
  using Nested = greenring::FieldElem;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 4,
    MulCost = 8
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

template <>
struct NumTraits<greenring::Rational> : GenericNumTraits<greenring::Rational> {
  using Real = greenring::Rational;
  using NonInteger = greenring::Rational;
  using Literal = greenring::Rational;
  using Nested = greenring::Rational;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 2,
    MulCost = 4
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  static inline int max_digits10() { return 0; }
};

}  // namespace Eigen
