#include <doctest.h>

#include "greenring/repmod.hpp"

using namespace greenring;

namespace {

FieldElem qp(int n, int e) { return pow_q(n, e); }

// Intertwiners from the full linear system over all four generators, with no
// use of weights: an independent check of hom_space.
Index hom_dim_dense(const Representation& M, const Representation& N) {
  const Index dm = M.dim(), dn = N.dim(), nv = dm * dn;
  MatrixF S = MatrixF::Zero(4 * nv, nv);
  for (int g = 0; g < 4; ++g)
    for (Index i = 0; i < dn; ++i)
      for (Index j = 0; j < dm; ++j) {
        Index row = g * nv + i * dm + j;
        for (Index k = 0; k < dm; ++k) S(row, i * dm + k) += M.gen(g)(k, j);
        for (Index k = 0; k < dn; ++k) S(row, k * dm + j) -= N.gen(g)(i, k);
      }
  return nv - rank<FieldElem>(S);
}

Representation layer(const Representation& M, int depth) {
  Representation cur = M;
  for (int t = 0; t < depth; ++t) cur = submodule(cur, radical(cur));
  return cur;
}

SimpleMultiset single(int l, int r, int m = 1) { return {{{l, r}, m}}; }

}  // namespace

TEST_CASE("constructors satisfy the relations") {
  for (int n : {3, 4}) {
    for (int r = 0; r < n; ++r) {
      for (int l = 1; l <= n; ++l) {
        CHECK_MESSAGE(satisfies_relations(simple(n, l, r)), "simple ", n, " ", l, " ", r);
        CHECK_MESSAGE(satisfies_relations(projective(n, l, r)), "projective ", n, " ", l, " ", r);
      }
      for (int l = 1; l < n; ++l)
        for (int s = 1; s <= 2; ++s) {
          CHECK(satisfies_relations(band(n, s, l, r, ExtScalar::infinity())));
          CHECK(satisfies_relations(band(n, s, l, r, ExtScalar(FieldElem(0)))));
          CHECK(satisfies_relations(band(n, s, l, r, ExtScalar(qp(n, 1) + FieldElem(2)))));
        }
    }
  }
}

TEST_CASE("simple modules") {
  Representation T = simple(3, 1, 0);
  CHECK(T.dim() == 1);
  CHECK(T.A(0, 0).is_zero());
  CHECK(T.B(0, 0).is_one());
  CHECK(T.C(0, 0).is_one());
  CHECK(T.D(0, 0).is_zero());

  Representation V = simple(3, 2, 0);
  CHECK(V.B(0, 0) == qp(3, 0));
  CHECK(V.B(1, 1) == qp(3, 1));
  CHECK(V.C(0, 0) == qp(3, -1));
  CHECK(V.C(1, 1) == qp(3, 0));

  Representation W = simple(4, 3, 1);
  CHECK(relation_failure(W) == std::nullopt);
  W.D(0, 1) += FieldElem(1);
  CHECK(relation_failure(W).has_value());
}

TEST_CASE("projective modules") {
  const int n = 3;
  for (int r = 0; r < n; ++r) {
    Representation P = projective(n, n, r), V = simple(n, n, r);
    CHECK(P.A == V.A);
    CHECK(P.D == V.D);
  }
  Representation P = projective(n, 1, 0);
  CHECK(P.dim() == 6);
  CHECK(loewy_length(P) == 3);
  CHECK(top(P) == single(1, 0));
  CHECK(top(layer(P, 1)) == single(2, 1, 2));
  CHECK(semisimple_labels(layer(P, 2)) == single(1, 0));

  for (int l = 1; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      Representation Q = projective(n, l, r);
      CHECK(top(Q) == single(l, r));
      CHECK(socle_labels(Q) == single(l, r));
    }
  Representation Q = projective(n, 2, 1);
  CHECK(is_isomorphic(submodule(Q, socle(Q)), simple(n, 2, 1)));
}

TEST_CASE("band modules") {
  const int n = 3;
  Representation M = band(n, 2, 1, 0, ExtScalar(FieldElem(1)));
  // d v_{1,2} = v_{3,1} + q v_{3,2}
  CHECK(M.D(2, 3) == FieldElem(1));
  CHECK(M.D(5, 3) == qp(n, 1));

  Representation M1 = band(n, 1, 2, 0, ExtScalar(FieldElem(5)));
  CHECK(M1.D(2, 0) == FieldElem(5) * qp(n, 2));

  Representation I = band(n, 1, 1, 0, ExtScalar::infinity());
  for (Index i = 0; i < 3; ++i) CHECK(I.A(i, 1).is_zero());  // a v_{n−l} = 0
  for (Index i = 0; i < 3; ++i) CHECK(I.A(i, 2).is_zero());  // a v_n = 0

  for (int s = 1; s <= 3; ++s) {
    Representation B = band(n, s, 1, 2, ExtScalar(qp(n, 2)));
    auto t = top(B), so = socle_labels(B);
    int tt = 0, ss = 0;
    for (auto& [k, v] : t) tt += v;
    for (auto& [k, v] : so) ss += v;
    CHECK(tt == s);
    CHECK(ss == s);
  }

  // first s−1 columns span a submodule isomorphic to the smaller band
  for (const ExtScalar& eta : {ExtScalar(FieldElem(2)), ExtScalar::infinity()}) {
    Representation B3 = band(n, 3, 2, 1, eta);
    MatrixF U = MatrixF::Zero(9, 6);
    for (Index k = 0; k < 6; ++k) U(k, k) = FieldElem(1);
    CHECK(is_isomorphic(submodule(B3, U), band(n, 2, 2, 1, eta)));
    CHECK(is_isomorphic(quotient(B3, U), band(n, 1, 2, 1, eta)));
  }
}

TEST_CASE("hom spaces") {
  const int n = 3;
  for (int l = 1; l <= n; ++l)
    for (int r = 0; r < n; ++r)
      for (int l2 = 1; l2 <= n; ++l2)
        for (int r2 = 0; r2 < n; ++r2)
          CHECK(hom_space(simple(n, l, r), simple(n, l2, r2)).size() == ((l == l2 && r == r2) ? 1u : 0u));
  for (int l = 1; l <= 2; ++l) CHECK(hom_space(projective(n, l, 0), simple(n, l, 0)).size() == 1);
  CHECK(hom_space(band(n, 1, 1, 0, ExtScalar(FieldElem(0))), band(n, 1, 1, 0, ExtScalar(FieldElem(1)))).empty());

  std::vector<Representation> mods = {projective(n, 1, 0), projective(n, 2, 2), band(n, 2, 1, 0, ExtScalar(FieldElem(1))),
                                      band(n, 1, 2, 1, ExtScalar::infinity()), simple(n, 1, 0), string_module(n, 1, 1, 0)};
  for (const auto& M : mods)
    for (const auto& N : mods) {
      auto H = hom_space(M, N);
      CHECK(Index(H.size()) == hom_dim_dense(M, N));
      for (const auto& T : H)
        for (int g = 0; g < 4; ++g) CHECK(mul<FieldElem>(T, M.gen(g)) == mul<FieldElem>(N.gen(g), T));
    }
}

TEST_CASE("non-weight bases are handled") {
  const int n = 3;
  Representation M = band(n, 2, 1, 1, ExtScalar(FieldElem(3)));
  MatrixF P = identity<FieldElem>(M.dim());
  for (Index i = 0; i + 1 < M.dim(); ++i) P(i, i + 1) = FieldElem(int(i % 3) - 1);
  P(M.dim() - 1, 0) = FieldElem(2);
  auto Pinv = inverse_matrix<FieldElem>(P);
  REQUIRE(Pinv.has_value());
  Representation N{n, {}, {}, {}, {}};
  for (int g = 0; g < 4; ++g) N.gen(g) = mul<FieldElem>(*Pinv, mul<FieldElem>(M.gen(g), P));
  CHECK_FALSE(is_weight_basis(N));
  CHECK(satisfies_relations(N));
  CHECK(is_isomorphic(M, N));
  CHECK(top(N) == top(M));
  auto wd = weight_decomposition(N);
  Index total = 0;
  for (auto& [r, E] : wd) total += E.cols();
  CHECK(total == N.dim());
}

TEST_CASE("tensor products") {
  const int n = 3;
  Representation X = band(n, 2, 1, 0, ExtScalar(FieldElem(1)));
  Representation T = tensor(simple(n, 1, 0), X);
  for (int g = 0; g < 4; ++g) CHECK(T.gen(g) == X.gen(g));
  CHECK(tensor(simple(n, 2, 0), projective(n, 2, 0)).dim() == 12);
  CHECK(satisfies_relations(tensor(simple(n, 2, 0), simple(n, 2, 1))));
  CHECK(satisfies_relations(tensor(projective(n, 1, 0), band(n, 1, 2, 1, ExtScalar::infinity()))));
  CHECK(satisfies_relations(tensor(simple(4, 3, 1), simple(4, 2, 3))));
}

TEST_CASE("duals") {
  for (int n : {3, 4}) {
    FieldElem ql = FieldElem(1);
    for (int l = 1; l <= n; ++l)
      for (int r = 0; r < n; ++r) {
        CHECK(satisfies_relations(dual(simple(n, l, r))));
        CHECK(is_isomorphic(dual(simple(n, l, r)), simple(n, l, 1 - l - r)));
      }
    for (int l = 1; l < n; ++l) {
      FieldElem eta = FieldElem(2) + qp(n, 1);
      Representation M = band(n, 2, l, 1, ExtScalar(eta));
      CHECK(is_isomorphic(dual(M), band(n, 2, n - l, 0, ExtScalar(-eta * qp(n, l)))));
      CHECK(is_isomorphic(dual(band(n, 1, l, 2, ExtScalar::infinity())), band(n, 1, n - l, -1, ExtScalar::infinity())));
      CHECK(is_isomorphic(dual(dual(M)), M));
    }
  }
  CHECK(is_isomorphic(dual(simple(3, 1, 0)), simple(3, 1, 0)));
}

TEST_CASE("syzygies and strings") {
  const int n = 3;
  for (int l = 1; l < n; ++l)
    for (int r = 0; r < n; ++r) {
      CHECK(syzygy(simple(n, l, r)).dim() == 2 * n - l);
      CHECK(cosyzygy(simple(n, l, r)).dim() == 2 * n - l);
      CHECK(socle_labels(string_module(n, 1, l, r)) == single(l, r));
      CHECK(socle_labels(string_module(n, -1, l, r)) == single(n - l, r + l < n ? r + l : r + l - n, 2));
    }
  CHECK(syzygy(projective(n, 1, 0)).dim() == 0);
  CHECK(syzygy(simple(n, n, 1)).dim() == 0);
  CHECK(is_isomorphic(cosyzygy(syzygy(simple(n, 2, 0))), simple(n, 2, 0)));

  CHECK(string_module(n, 1, 1, 0).dim() == 5);
  CHECK(string_module(n, -2, 2, 1).dim() == 8);
  Representation S0 = string_module(n, 0, 2, 1), V = simple(n, 2, 1);
  CHECK(S0.A == V.A);
  CHECK(S0.D == V.D);
  for (int m = -3; m <= 3; ++m) {
    int am = m < 0 ? -m : m;
    Representation S = string_module(n, m, 1, 2);
    CHECK(S.dim() == am * n + (am % 2 == 0 ? 1 : n - 1));
    CHECK(satisfies_relations(S));
  }
  CHECK(string_module(4, 2, 3, 1).dim() == 11);

  for (int l = 1; l < n; ++l) {
    FieldElem eta = FieldElem(1) - qp(n, 2);
    Representation M = band(n, 2, l, 1, ExtScalar(eta));
    CHECK(is_isomorphic(syzygy(M), band(n, 2, n - l, 1 + l, ExtScalar(-eta * qp(n, l)))));
    CHECK(is_isomorphic(cosyzygy(M), band(n, 2, n - l, 1 + l, ExtScalar(-eta * qp(n, l)))));
    CHECK(is_isomorphic(syzygy(band(n, 1, l, 0, ExtScalar::infinity())), band(n, 1, n - l, l, ExtScalar::infinity())));
  }
}

TEST_CASE("json round trip") {
  Representation M = band(4, 2, 1, 3, ExtScalar(pow_q(4, 1) + FieldElem(Rational(1, 2))));
  std::string label;
  Representation N = from_json(to_json(M, "M_2(1,3,q+1/2)"), &label);
  CHECK(label == "M_2(1,3,q+1/2)");
  CHECK(N.n == 4);
  for (int g = 0; g < 4; ++g) CHECK(N.gen(g) == M.gen(g));
  CHECK_THROWS(from_json("{\"n\":3,\"dim\":1,\"A\":[[\"1\",\"2\"]],\"B\":[],\"C\":[],\"D\":[]}"));
}
