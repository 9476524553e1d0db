#include <doctest.h>

#include <random>

#include "greenring/algebra.hpp"

using namespace greenring;

namespace {

AlgebraElem gen(int n, char g) { return AlgebraElem::generator(n, g); }

AlgebraElem random_elem(int n, std::mt19937& rng, int terms) {
  std::uniform_int_distribution<int> e(0, n - 1), c(-3, 3);
  AlgebraElem x(n);
  for (int t = 0; t < terms; ++t)
    x.add_term({e(rng), e(rng), e(rng), e(rng)}, FieldElem(c(rng)) * pow_q(n, e(rng)));
  return x;
}

AlgebraElem power(const AlgebraElem& x, int k) {
  AlgebraElem r = AlgebraElem::one(x.n());
  for (int i = 0; i < k; ++i) r = multiply(r, x);
  return r;
}

}  // namespace

TEST_CASE("defining relations hold under multiply") {
  for (int n : {3, 4, 5}) {
    FieldElem q = FieldElem::q(n);
    auto a = gen(n, 'a'), b = gen(n, 'b'), c = gen(n, 'c'), d = gen(n, 'd');
    auto one = AlgebraElem::one(n);
    CHECK(multiply(b, a) == q * multiply(a, b));
    CHECK(multiply(d, b) == q * multiply(b, d));
    CHECK(multiply(c, a) == q * multiply(a, c));
    CHECK(multiply(d, c) == q * multiply(c, d));
    CHECK(multiply(b, c) == multiply(c, b));
    CHECK(power(a, n).is_zero());
    CHECK(power(b, n) == one);
    CHECK(power(c, n) == one);
    CHECK(power(d, n).is_zero());
    CHECK(multiply(d, a) - q * multiply(a, d) == one - multiply(b, c));
  }
}

TEST_CASE("multiply examples") {
  const int n = 3;
  FieldElem q = FieldElem::q(n);
  CHECK(multiply(gen(n, 'b'), gen(n, 'a')) == AlgebraElem::monomial(n, {1, 1, 0, 0}, q));
  AlgebraElem expect = AlgebraElem::monomial(n, {1, 0, 0, 1}, q) + AlgebraElem::one(n) -
                       AlgebraElem::monomial(n, {0, 1, 1, 0});
  CHECK(multiply(gen(n, 'd'), gen(n, 'a')) == expect);
  CHECK(multiply(AlgebraElem::monomial(n, {2, 0, 0, 0}), gen(n, 'a')).is_zero());
}

TEST_CASE("associativity on random monomial triples") {
  std::mt19937 rng(1);
  for (int n : {3, 4}) {
    for (int t = 0; t < 60; ++t) {
      auto x = random_elem(n, rng, 1), y = random_elem(n, rng, 1), z = random_elem(n, rng, 1);
      CHECK(multiply(multiply(x, y), z) == multiply(x, multiply(y, z)));
    }
  }
}

TEST_CASE("idempotent-basis product agrees with PBW rewriting") {
  std::mt19937 rng(2);
  for (int n : {3, 4}) {
    const HopfContext& ctx = HopfContext::get(n);
    for (int t = 0; t < 20; ++t) {
      auto x = random_elem(n, rng, 3), y = random_elem(n, rng, 3);
      SparseVec p = ctx.idem_multiply(ctx.pbw_to_idem(x), ctx.pbw_to_idem(y));
      CHECK(ctx.idem_to_pbw(p) == multiply(x, y));
      CHECK(ctx.idem_to_pbw(ctx.pbw_to_idem(x)) == x);
    }
  }
}

TEST_CASE("left multiplication matrices") {
  const int n = 3;
  auto I = left_mult_matrix(AlgebraElem::one(n));
  CHECK(I == identity<FieldElem>(81));
  auto Lb = left_mult_matrix(gen(n, 'b'));
  MatrixF P = Lb;
  for (int i = 1; i < 3; ++i) P = mul<FieldElem>(P, Lb);
  CHECK(P == identity<FieldElem>(81));
  CHECK(Lb != identity<FieldElem>(81));
  // each column of Lb has exactly one nonzero entry
  for (Index c = 0; c < Lb.cols(); ++c) {
    int nz = 0;
    for (Index r = 0; r < Lb.rows(); ++r) nz += !Lb(r, c).is_zero();
    CHECK(nz == 1);
  }
  auto La = left_mult_matrix(gen(n, 'a'));
  FieldElem tr;
  for (Index i = 0; i < La.rows(); ++i) tr += La(i, i);
  CHECK(tr.is_zero());
}

TEST_CASE("antipode on grouplikes") {
  for (int n : {3, 4}) {
    const HopfContext& ctx = HopfContext::get(n);
    CHECK(multiply(ctx.antipode('b'), gen(n, 'b')) == AlgebraElem::one(n));
    CHECK(multiply(ctx.antipode('c'), gen(n, 'c')) == AlgebraElem::one(n));
    // S(a) = -a b^{-1}: S(a)·b = -a
    CHECK(multiply(ctx.antipode('a'), gen(n, 'b')) == FieldElem(-1) * gen(n, 'a'));
    CHECK(multiply(ctx.antipode('d'), gen(n, 'c')) == FieldElem(-1) * gen(n, 'd'));
  }
}

TEST_CASE("radical at n=3") {
  const HopfContext& ctx = HopfContext::get(3);
  const auto& J = radical_basis(ctx);
  CHECK(J.size() == 39);
  // Independent route: rank of the PBW Gram matrix τ(xy), τ from left_mult traces.
  const int N = 81;
  std::vector<FieldElem> tau(N);
  for (int x = 0; x < N; ++x) {
    AlgebraElem m = AlgebraElem::monomial(3, ctx.unindex(x));
    for (int y = 0; y < N; ++y) tau[x] += multiply(m, AlgebraElem::monomial(3, ctx.unindex(y))).coeff(ctx.unindex(y));
  }
  MatrixF G(N, N);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      FieldElem t;
      auto p = multiply(AlgebraElem::monomial(3, ctx.unindex(x)), AlgebraElem::monomial(3, ctx.unindex(y)));
      for (const auto& [m, c] : p.terms()) t.add_mul(c, tau[ctx.index(m)]);
      G(x, y) = t;
    }
  CHECK(N - rank<FieldElem>(G) == 39);
  // each radical element annihilates the Gram form
  for (std::size_t r = 0; r < J.size(); r += 7) {
    for (int y = 0; y < N; y += 5) {
      FieldElem t;
      auto p = multiply(J[r], AlgebraElem::monomial(3, ctx.unindex(y)));
      for (const auto& [m, c] : p.terms()) t.add_mul(c, tau[ctx.index(m)]);
      CHECK(t.is_zero());
    }
  }
  // nilpotency of a few radical elements, and 1 is not in span(J)
  for (std::size_t r = 0; r < J.size(); r += 9) {
    MatrixF L = left_mult_matrix(J[r]);
    MatrixF L3 = mul<FieldElem>(mul<FieldElem>(L, L), L);
    CHECK(is_zero_matrix<FieldElem>(L3));
  }
  MatrixF S(N, Index(J.size()) + 1);
  for (std::size_t r = 0; r < J.size(); ++r)
    for (const auto& [m, c] : J[r].terms()) S(ctx.index(m), Index(r)) = c;
  S(ctx.index({0, 0, 0, 0}), Index(J.size())) = FieldElem(1);
  CHECK(rank<FieldElem>(S) == Index(J.size()) + 1);
  // triple products of PBW radical elements vanish (sampled)
  for (std::size_t x = 0; x < J.size(); x += 5)
    for (std::size_t y = 1; y < J.size(); y += 6)
      for (std::size_t z = 2; z < J.size(); z += 7) CHECK(multiply(multiply(J[x], J[y]), J[z]).is_zero());
}

TEST_CASE("radical structure n=3,4") {
  for (int n : {3, 4}) {
    RadicalReport r = check_radical(HopfContext::get(n));
    CHECK(r.dim_algebra == n * n * n * n);
    CHECK(r.dim_algebra - r.dim_radical == r.expected_quotient_dim);
    CHECK(r.cube_vanishes);
    CHECK(r.dim_radical_sq > 0);
  }
}
