#include "greenring/field.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>

namespace greenring {

namespace {

using Poly = std::vector<Rational>;

void trim_poly(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j].add_mul(a[i], b[j]);
  trim_poly(r);
  return r;
}

// Quotient and remainder of a by b (b nonzero).
void poly_divmod(Poly a, const Poly& b, Poly* quo, Poly* rem) {
  trim_poly(a);
  Poly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Rational());
  Rational lead_inv = b.back().inverse();
  while (!a.empty() && a.size() >= b.size()) {
    std::size_t shift = a.size() - b.size();
    Rational t = a.back() * lead_inv;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= t * b[j];
    q[shift] = t;
    a.pop_back();
    trim_poly(a);
  }
  trim_poly(q);
  if (quo) *quo = std::move(q);
  if (rem) *rem = std::move(a);
}

Poly poly_sub(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim_poly(a);
  return a;
}

}  // namespace

std::vector<Rational> cyclotomic_poly(int n) {
  if (n < 3) throw std::invalid_argument("cyclotomic_poly: n must be at least 3");
  // x^n - 1 divided by Φ_d for every proper divisor d.
  Poly p(n + 1);
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly phi_d;
    if (d == 1) phi_d = {Rational(-1), Rational(1)};
    else if (d == 2) phi_d = {Rational(1), Rational(1)};
    else phi_d = cyclotomic_poly(d);
    Poly q, r;
    poly_divmod(p, phi_d, &q, &r);
    if (!r.empty()) throw std::logic_error("cyclotomic_poly: inexact division");
    p = std::move(q);
  }
  return p;
}

const CycloField& CycloField::get(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<CycloField>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto* F = new CycloField(n);
  cache.emplace(n, std::unique_ptr<CycloField>(F));
  return *F;
}

CycloField::CycloField(int n) : n_(n), phi_(cyclotomic_poly(n)) {
  deg_ = int(phi_.size()) - 1;
  int top = std::max(2 * deg_ - 2, deg_);
  red_.resize(top + 1);
  for (int k = 0; k <= top; ++k) {
    Poly v(deg_);
    if (k < deg_) {
      v[k] = Rational(1);
    } else {
      // x * (x^{k-1} mod Φ), then fold the x^deg term.
      const Poly& prev = red_[k - 1];
      Rational lead = prev[deg_ - 1];
      for (int j = deg_ - 1; j >= 1; --j) v[j] = prev[j - 1];
      for (int j = 0; j < deg_; ++j) v[j] -= lead * phi_[j];
    }
    red_[k] = std::move(v);
  }
  qpow_.reserve(n);
  qpow_.emplace_back(Rational(1));
  Poly x(deg_);
  x[1] = Rational(1);
  FieldElem q(*this, x);
  for (int e = 1; e < n; ++e) qpow_.push_back(qpow_.back() * q);
  for (auto& e : qpow_) {
    // make sure every power carries the field pointer
    if (!e.field()) e = FieldElem(*this, e.coeffs());
  }
}

const FieldElem& CycloField::q_pow(long long e) const {
  long long m = e % n_;
  if (m < 0) m += n_;
  return qpow_[std::size_t(m)];
}

FieldElem::FieldElem(long long v) {
  if (v != 0) c_.emplace_back(v);
}

FieldElem::FieldElem(const Rational& r) {
  if (!r.is_zero()) c_.push_back(r);
}

FieldElem::FieldElem(const CycloField& F, std::vector<Rational> coeffs) : F_(&F) {
  trim_poly(coeffs);
  if (int(coeffs.size()) > F.degree()) {
    Poly r;
    poly_divmod(std::move(coeffs), F.phi(), nullptr, &r);
    coeffs = std::move(r);
  }
  c_ = std::move(coeffs);
}

std::vector<Rational> FieldElem::coeffs() const {
  std::vector<Rational> r = c_;
  r.resize(F_ ? F_->degree() : std::max<std::size_t>(1, c_.size()));
  return r;
}

void FieldElem::trim() { trim_poly(c_); }

const CycloField* FieldElem::join(const FieldElem& a, const FieldElem& b) {
  if (a.F_ && b.F_ && a.F_ != b.F_) throw FieldError("FieldElem: mixing different cyclotomic fields");
  return a.F_ ? a.F_ : b.F_;
}

FieldElem FieldElem::operator-() const {
  FieldElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

FieldElem& FieldElem::operator+=(const FieldElem& o) {
  F_ = join(*this, o);
  if (o.c_.empty()) return *this;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

FieldElem& FieldElem::operator-=(const FieldElem& o) {
  F_ = join(*this, o);
  if (o.c_.empty()) return *this;
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

FieldElem operator*(const FieldElem& a, const FieldElem& b) {
  FieldElem r;
  r.F_ = FieldElem::join(a, b);
  if (a.c_.empty() || b.c_.empty()) return r;
  if (a.c_.size() == 1 || b.c_.size() == 1) {
    const FieldElem& s = a.c_.size() == 1 ? a : b;
    const FieldElem& v = a.c_.size() == 1 ? b : a;
    r.c_ = v.c_;
    if (!s.c_[0].is_one())
      for (auto& x : r.c_) x *= s.c_[0];
    return r;
  }
  const CycloField& F = *r.F_;
  int d = F.degree();
  std::vector<Rational> p(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) p[i + j].add_mul(a.c_[i], b.c_[j]);
  if (int(p.size()) > d) {
    for (int k = d; k < int(p.size()); ++k) {
      if (p[k].is_zero()) continue;
      const auto& red = F.power_reduction(k);
      for (int j = 0; j < d; ++j)
        if (!red[j].is_zero()) p[j].add_mul(p[k], red[j]);
    }
    p.resize(d);
  }
  r.c_ = std::move(p);
  r.trim();
  return r;
}

FieldElem& FieldElem::operator*=(const FieldElem& o) {
  *this = *this * o;
  return *this;
}

void FieldElem::add_mul(const FieldElem& a, const FieldElem& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  if (a.c_.size() == 1 && b.c_.size() == 1) {
    F_ = join(*this, a.F_ ? a : b);
    if (a.F_ && b.F_ && a.F_ != b.F_) join(a, b);
    if (c_.empty()) c_.emplace_back();
    c_[0].add_mul(a.c_[0], b.c_[0]);
    trim();
    return;
  }
  *this += a * b;
}

FieldElem FieldElem::inverse() const {
  if (c_.empty()) throw FieldError("FieldElem: inverse of zero");
  if (c_.size() == 1) {
    FieldElem r;
    r.F_ = F_;
    r.c_.push_back(c_[0].inverse());
    return r;
  }
  // Extended Euclid: find u with u·a ≡ 1 mod Φ.
  const CycloField& F = *F_;
  Poly r0 = F.phi(), r1 = c_;
  Poly s0, s1 = {Rational(1)};
  while (!r1.empty()) {
    Poly q, r;
    poly_divmod(r0, r1, &q, &r);
    Poly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  // r0 is a nonzero constant since Φ is irreducible.
  if (r0.size() != 1) throw std::logic_error("FieldElem::inverse: gcd is not constant");
  Rational c = r0[0].inverse();
  for (auto& x : s0) x *= c;
  return FieldElem(F, std::move(s0));
}

std::string FieldElem::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Rational& x = c_[k];
    if (x.is_zero()) continue;
    bool neg = x.sign() < 0;
    Rational ax = neg ? -x : x;
    std::string mono;
    if (k == 1) mono = "q";
    else if (k > 1) mono = "q^" + std::to_string(k);
    std::string term;
    if (mono.empty()) term = ax.to_string();
    else if (ax.is_one()) term = mono;
    else term = ax.to_string() + "*" + mono;
    if (first) out = neg ? "-" + term : term;
    else out += (neg ? " - " : " + ") + term;
    first = false;
  }
  return out;
}

std::size_t FieldElem::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ULL;
  for (const auto& x : c_) h = h * 1000003u ^ std::hash<std::string>{}(x.to_string());
  return h;
}

std::ostream& operator<<(std::ostream& os, const FieldElem& x) { return os << x.to_string(); }

FieldElem pow_q(int n, long long e) { return CycloField::get(n).q_pow(e); }

FieldElem q_int(int n, long long i) {
  if (i < 0) throw std::invalid_argument("q_int: negative index");
  const CycloField& F = CycloField::get(n);
  FieldElem s(F, {});
  for (long long j = 0; j < i; ++j) s += F.q_pow(j);
  return s;
}

FieldElem alpha(int n, int i, int l) {
  if (!(1 <= i && i < l && l <= n))
    throw std::invalid_argument("alpha: need 1 <= i < l <= n, got i=" + std::to_string(i) +
                                " l=" + std::to_string(l));
  return q_int(n, i) * (FieldElem(1) - pow_q(n, i - l));
}

const FieldElem& ExtScalar::value() const {
  if (inf_) throw FieldError("ExtScalar: value of infinity");
  return value_;
}

ExtScalar ext_scale(const FieldElem& a, const ExtScalar& eta) {
  if (eta.is_infinity()) {
    if (a.is_zero()) throw FieldError("ext_scale: 0 times infinity is undefined");
    return eta;
  }
  return ExtScalar(a * eta.value());
}

namespace {

class ScalarParser {
 public:
  ScalarParser(int n, std::string_view s) : F_(CycloField::get(n)), s_(s) {}

  FieldElem parse() {
    FieldElem v = expr();
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    return v;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  FieldElem expr() {
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    FieldElem v = term();
    if (neg) v = -v;
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }
  FieldElem term() {
    FieldElem v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        std::size_t at = pos_;
        FieldElem d = factor();
        if (d.is_zero()) throw ParseError("division by zero", at);
        v /= d;
      } else {
        return v;
      }
    }
  }
  FieldElem factor() {
    FieldElem base = primary();
    if (!eat('^')) return base;
    skip();
    bool neg = false;
    if (eat('-')) neg = true;
    skip();
    long long e = integer();
    if (neg) e = -e;
    if (e < 0) {
      if (base.is_zero()) throw ParseError("zero to a negative power", pos_);
      base = base.inverse();
      e = -e;
    }
    FieldElem r(F_, {Rational(1)});
    for (long long i = 0; i < e; ++i) r *= base;
    return r;
  }
  long long integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected integer", start);
    if (pos_ - start > 17) throw ParseError("integer too large", start);
    return std::stoll(std::string(s_.substr(start, pos_ - start)));
  }
  FieldElem primary() {
    skip();
    if (pos_ >= s_.size()) throw ParseError("unexpected end of scalar", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      FieldElem v = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return v;
    }
    if (c == 'q') {
      ++pos_;
      return F_.q_pow(1);
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(std::string(s_.substr(start, pos_ - start)));
      return FieldElem(F_, {Rational(mpq_class(z))});
    }
    throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
  }

  const CycloField& F_;
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

FieldElem parse_field_elem(int n, std::string_view text) { return ScalarParser(n, text).parse(); }

ExtScalar parse_ext_scalar(int n, std::string_view text) {
  std::size_t a = 0, b = text.size();
  while (a < b && std::isspace(static_cast<unsigned char>(text[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(text[b - 1]))) --b;
  if (text.substr(a, b - a) == "inf") return ExtScalar::infinity();
  return ExtScalar(parse_field_elem(n, text));
}

}  // namespace greenring
