#include "greenring/linalg.hpp"

namespace greenring {

void PolyF::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

PolyF PolyF::monic() const {
  if (c_.empty()) return *this;
  FieldElem inv = lead().inverse();
  std::vector<FieldElem> c = c_;
  for (auto& x : c) x *= inv;
  return PolyF(std::move(c));
}

PolyF PolyF::derivative() const {
  std::vector<FieldElem> c;
  for (std::size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * FieldElem(static_cast<long long>(i)));
  return PolyF(std::move(c));
}

PolyF operator+(const PolyF& a, const PolyF& b) {
  std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return PolyF(std::move(c));
}

PolyF operator-(const PolyF& a, const PolyF& b) {
  std::vector<FieldElem> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return PolyF(std::move(c));
}

PolyF operator*(const PolyF& a, const PolyF& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<FieldElem> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j].add_mul(a.c_[i], b.c_[j]);
  return PolyF(std::move(c));
}

void PolyF::divmod(const PolyF& a, const PolyF& b, PolyF* q, PolyF* r) {
  if (b.is_zero()) throw FieldError("PolyF: division by zero polynomial");
  std::vector<FieldElem> rem = a.c_;
  std::vector<FieldElem> quo;
  if (rem.size() >= b.c_.size()) quo.resize(rem.size() - b.c_.size() + 1);
  FieldElem inv = b.lead().inverse();
  while (!rem.empty() && rem.size() >= b.c_.size()) {
    std::size_t shift = rem.size() - b.c_.size();
    FieldElem t = rem.back() * inv;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[shift + j] -= t * b.c_[j];
    quo[shift] = t;
    rem.pop_back();
    while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
  }
  if (q) *q = PolyF(std::move(quo));
  if (r) *r = PolyF(std::move(rem));
}

PolyF operator/(const PolyF& a, const PolyF& b) {
  PolyF q;
  PolyF::divmod(a, b, &q, nullptr);
  return q;
}

PolyF operator%(const PolyF& a, const PolyF& b) {
  PolyF r;
  PolyF::divmod(a, b, nullptr, &r);
  return r;
}

FieldElem PolyF::eval(const FieldElem& x) const {
  FieldElem acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string PolyF::to_string() const {
  if (c_.empty()) return "0";
  std::string s;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c_[i].to_string() + ")";
    if (i > 0) s += "*x^" + std::to_string(i);
  }
  return s;
}

PolyF gcd(const PolyF& a, const PolyF& b) {
  PolyF x = a, y = b;
  while (!y.is_zero()) {
    PolyF r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

PolyF lcm(const PolyF& a, const PolyF& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return (a * (b / gcd(a, b))).monic();
}

PolyF squarefree_part(const PolyF& p) {
  if (p.degree() <= 0) return p.monic();
  return (p / gcd(p, p.derivative())).monic();
}

MatrixF eval_matrix(const PolyF& p, const MatrixF& M) {
  const Index d = M.rows();
  MatrixF acc = MatrixF::Zero(d, d);
  for (int i = p.degree(); i >= 0; --i) {
    acc = mul<FieldElem>(acc, M);
    if (!p[i].is_zero())
      for (Index k = 0; k < d; ++k) acc(k, k) += p[i];
  }
  return acc;
}

namespace {

// Incrementally reduced family of vectors, each tracked as a combination of
// the inputs that produced it.
struct Echelon {
  std::vector<VectorF> rows;
  std::vector<Index> piv;
  std::vector<std::vector<FieldElem>> comb;

  // Reduces v against the family; returns the residual and its combination.
  void reduce(VectorF& v, std::vector<FieldElem>& c) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (v(piv[i]).is_zero()) continue;
      FieldElem f = v(piv[i]);
      for (Index k = 0; k < v.size(); ++k)
        if (!rows[i](k).is_zero()) v(k) -= f * rows[i](k);
      if (c.size() < comb[i].size()) c.resize(comb[i].size());
      for (std::size_t k = 0; k < comb[i].size(); ++k)
        if (!comb[i][k].is_zero()) c[k] -= f * comb[i][k];
    }
  }
  // v must be a nonzero residual.
  void add(VectorF v, std::vector<FieldElem> c) {
    Index p = 0;
    while (v(p).is_zero()) ++p;
    FieldElem inv = v(p).inverse();
    for (Index k = 0; k < v.size(); ++k)
      if (!v(k).is_zero()) v(k) *= inv;
    for (auto& x : c) x *= inv;
    rows.push_back(std::move(v));
    piv.push_back(p);
    comb.push_back(std::move(c));
  }
};

bool all_zero(const VectorF& v) {
  for (Index k = 0; k < v.size(); ++k)
    if (!v(k).is_zero()) return false;
  return true;
}

}  // namespace

PolyF min_poly_vector(const MatrixF& M, const VectorF& v) {
  Echelon e;
  VectorF cur = v;
  for (std::size_t k = 0;; ++k) {
    VectorF r = cur;
    std::vector<FieldElem> c(k + 1);
    c[k] = FieldElem(1);
    e.reduce(r, c);
    if (all_zero(r)) {
      c.resize(k + 1);
      return PolyF(std::move(c)).monic();
    }
    e.add(std::move(r), std::move(c));
    cur = mul<FieldElem>(M, cur);
  }
}

PolyF min_poly(const MatrixF& M) {
  const Index d = M.rows();
  PolyF acc({FieldElem(1)});
  Echelon span;  // union of Krylov spaces seen so far
  for (Index i = 0; i < d; ++i) {
    VectorF e = VectorF::Zero(d);
    e(i) = FieldElem(1);
    VectorF probe = e;
    std::vector<FieldElem> dummy;
    span.reduce(probe, dummy);
    if (all_zero(probe)) continue;
    acc = lcm(acc, min_poly_vector(M, e));
    VectorF cur = e;
    for (int k = 0; k < acc.degree() + 1; ++k) {
      VectorF r = cur;
      std::vector<FieldElem> c;
      span.reduce(r, c);
      if (all_zero(r)) break;
      span.add(std::move(r), {});
      cur = mul<FieldElem>(M, cur);
    }
  }
  return acc;
}

}  // namespace greenring
