#include <doctest.h>

#include <random>

#include "greenring/linalg.hpp"

using namespace greenring;

namespace {

MatrixF random_matrix(int n, Index r, Index c, std::mt19937& rng, int zero_pct = 40) {
  std::uniform_int_distribution<int> d(-3, 3), pct(0, 99), e(0, n - 1);
  MatrixF M(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      M(i, j) = pct(rng) < zero_pct ? FieldElem() : FieldElem(d(rng)) * pow_q(n, e(rng)) + FieldElem(d(rng));
  return M;
}

}  // namespace

TEST_CASE("rref basics") {
  auto I = identity<FieldElem>(3);
  auto e = rref<FieldElem>(I);
  CHECK(e.rank == 3);
  CHECK(e.R == I);
  MatrixF Z = MatrixF::Zero(2, 5);
  CHECK(rref<FieldElem>(Z).rank == 0);
  FieldElem q = FieldElem::q(3);
  MatrixF M(2, 2);
  M << FieldElem(1), q, q * q, FieldElem(1);
  CHECK(rank<FieldElem>(M) == 1);
  CHECK(kernel_basis<FieldElem>(M).cols() == 1);
  CHECK(kernel_basis<FieldElem>(I).cols() == 0);
  CHECK(kernel_basis<FieldElem>(MatrixF(MatrixF::Zero(4, 4))).cols() == 4);
}

TEST_CASE("rank, kernel and solve on random instances") {
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    int n = 3 + t % 3;
    Index r = 2 + t % 5, c = 3 + (t * 7) % 5;
    MatrixF M = random_matrix(n, r, c, rng);
    if (t % 4 == 0) M.row(0) = M.row(r - 1);  // force some dependence
    CHECK(rank<FieldElem>(M) == rank<FieldElem>(MatrixF(M.transpose())));
    MatrixF K = kernel_basis<FieldElem>(M);
    CHECK(K.cols() + rank<FieldElem>(M) == c);
    CHECK(is_zero_matrix<FieldElem>(mul<FieldElem>(M, K)));
    VectorF x = random_matrix(n, c, 1, rng).col(0);
    VectorF b = mul<FieldElem>(M, x);
    auto s = solve<FieldElem>(M, b);
    REQUIRE(s.has_value());
    CHECK(mul<FieldElem>(M, *s) == b);
  }
  MatrixF M = MatrixF::Zero(2, 2);
  M(0, 0) = FieldElem(1);
  VectorF b(2);
  b << FieldElem(0), FieldElem(1);
  CHECK(!solve<FieldElem>(M, b).has_value());
}

TEST_CASE("generalized kernel") {
  MatrixF J = MatrixF::Zero(3, 3);
  J(0, 1) = FieldElem(1);
  J(1, 2) = FieldElem(1);
  CHECK(generalized_kernel<FieldElem>(J).cols() == 3);
  CHECK(generalized_kernel<FieldElem>(identity<FieldElem>(3)).cols() == 0);
  MatrixF D = MatrixF::Zero(2, 2);
  D(1, 1) = FieldElem(1);
  MatrixF K = generalized_kernel<FieldElem>(D);
  REQUIRE(K.cols() == 1);
  CHECK(K(0, 0) == FieldElem(1));
  CHECK(K(1, 0).is_zero());

  std::mt19937 rng(5);
  for (int t = 0; t < 10; ++t) {
    MatrixF M = random_matrix(3, 5, 5, rng, 70);
    auto [ker, img] = fitting_split<FieldElem>(M);
    CHECK(ker.cols() + img.cols() == 5);
    MatrixF both(5, 5);
    both << ker, img;
    CHECK(rank<FieldElem>(both) == 5);
  }
}

TEST_CASE("minimal polynomial") {
  PolyF x_minus_1 = PolyF::x_minus(FieldElem(1));
  CHECK(min_poly(identity<FieldElem>(4)) == x_minus_1);
  CHECK(min_poly(MatrixF(MatrixF::Zero(3, 3))) == PolyF::x_minus(FieldElem(0)));
  MatrixF J = MatrixF::Zero(2, 2);
  J(0, 1) = FieldElem(1);
  CHECK(min_poly(J) == PolyF({FieldElem(0), FieldElem(0), FieldElem(1)}));
  std::mt19937 rng(9);
  for (int t = 0; t < 10; ++t) {
    MatrixF M = random_matrix(4, 4, 4, rng, 50);
    PolyF p = min_poly(M);
    CHECK(is_zero_matrix<FieldElem>(eval_matrix(p, M)));
    CHECK(p.degree() <= 4);
  }
  // block diagonal with repeated eigenvalue: degree drops below dimension
  MatrixF B = identity<FieldElem>(3);
  B(0, 1) = FieldElem(1);
  CHECK(min_poly(B).degree() == 2);
  CHECK(squarefree_part(min_poly(B)) == x_minus_1);
}
