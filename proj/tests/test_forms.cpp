#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "singidx/forms.hpp"
#include "testutil.hpp"

using namespace singidx;
using testutil::Rng;

namespace {

KForm random_one_form(const CtxPtr& ctx, Rng& rng) {
  std::vector<Polynomial> coeffs;
  for (std::size_t v = 0; v < ctx->nvars(); ++v)
    coeffs.push_back(testutil::random_poly(ctx, rng, 2, 2));
  return KForm::one_form(ctx, coeffs);
}

// recursive cofactor determinant, independent of minors()
Polynomial det(const std::vector<std::vector<Polynomial>>& M, const CtxPtr& ctx) {
  const std::size_t n = M.size();
  if (n == 0) return Polynomial::constant(ctx, Rational(1));
  if (n == 1) return M[0][0];
  Polynomial acc = Polynomial::zero(ctx);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(M[r][c]);
      sub.push_back(std::move(row));
    }
    Polynomial cof = M[0][j] * det(sub, ctx);
    acc = (j % 2 == 0) ? acc + cof : acc - cof;
  }
  return acc;
}

}  // namespace

TEST_CASE("index tuple enumeration") {
  auto t = index_tuples(4, 2);
  CHECK(t.size() == 6);
  CHECK(t.front() == IndexTuple{0, 1});
  CHECK(t.back() == IndexTuple{2, 3});
  CHECK(index_tuples(3, 0) == std::vector<IndexTuple>{{}});
  CHECK(index_tuples(2, 3).empty());
  CHECK(binom(5, 2) == 10);
}

TEST_CASE("wedge is alternating and graded commutative") {
  auto ctx = testutil::local_ctx({"x", "y", "z"});
  Polynomial one = Polynomial::constant(ctx, Rational(1));
  KForm dx = KForm::basis(ctx, {0}, one);
  KForm dy = KForm::basis(ctx, {1}, one);
  CHECK(wedge(dx, dx).is_zero());
  CHECK(wedge(dx, dy).coeff({0, 1}) == one);
  CHECK(wedge(dy, dx).coeff({0, 1}) == -one);
  // graded commutativity for two 1-forms: a∧b = -b∧a
  Rng rng(3);
  for (int it = 0; it < 20; ++it) {
    KForm a = random_one_form(ctx, rng);
    KForm b = random_one_form(ctx, rng);
    CHECK((wedge(a, b) + wedge(b, a)).is_zero());
  }
}

TEST_CASE("wedge is associative and bilinear") {
  auto ctx = testutil::local_ctx({"x", "y", "z", "w"});
  Rng rng(5);
  for (int it = 0; it < 15; ++it) {
    KForm a = random_one_form(ctx, rng);
    KForm b = random_one_form(ctx, rng);
    KForm c = random_one_form(ctx, rng);
    KForm lhs = wedge(wedge(a, b), c);
    KForm rhs = wedge(a, wedge(b, c));
    CHECK((lhs + rhs.scale(Polynomial::constant(ctx, Rational(-1)))).is_zero());
    Polynomial p = testutil::random_poly(ctx, rng, 2, 1);
    KForm left = wedge(a.scale(p) + b, c);
    KForm right = wedge(a, c).scale(p) + wedge(b, c);
    CHECK((left + right.scale(Polynomial::constant(ctx, Rational(-1)))).is_zero());
  }
}

TEST_CASE("wedge past the top degree overflows to zero") {
  auto ctx = testutil::local_ctx({"x", "y"});
  Polynomial one = Polynomial::constant(ctx, Rational(1));
  KForm dxy = KForm::basis(ctx, {0, 1}, one);
  bool overflow = false;
  KForm w = wedge(dxy, KForm::basis(ctx, {0}, one), &overflow);
  CHECK(w.is_zero());
  CHECK(overflow);
}

TEST_CASE("exterior derivative components are the partials") {
  auto ctx = testutil::local_ctx({"x", "y"});
  Polynomial f = parse_poly("x^2*y + y^3", ctx);
  KForm df = exterior_derivative(f);
  CHECK(df.coeff({0}) == f.derivative(0));
  CHECK(df.coeff({1}) == f.derivative(1));
  // d(fg) = f dg + g df
  Rng rng(9);
  for (int it = 0; it < 20; ++it) {
    Polynomial a = testutil::random_poly(ctx, rng, 3, 2);
    Polynomial b = testutil::random_poly(ctx, rng, 3, 2);
    KForm lhs = exterior_derivative(a * b);
    KForm rhs = exterior_derivative(a).scale(b) + exterior_derivative(b).scale(a);
    CHECK((lhs + rhs.scale(Polynomial::constant(ctx, Rational(-1)))).is_zero());
  }
  // d(df) = df ∧ df = 0 for 1-forms squared
  CHECK(wedge(df, df).is_zero());
}

TEST_CASE("minors agree with cofactor expansion") {
  auto ctx = testutil::local_ctx({"x", "y", "z"});
  Rng rng(17);
  for (int it = 0; it < 10; ++it) {
    std::vector<std::vector<Polynomial>> M(3, std::vector<Polynomial>(3));
    for (auto& row : M)
      for (auto& e : row) e = testutil::random_poly(ctx, rng, 2, 1);
    auto m3 = minors(M, 3);
    REQUIRE(m3.size() == 1);
    CHECK(m3[0] == det(M, ctx));
    // 2x2 minors, lexicographic by (row pair, column pair)
    auto m2 = minors(M, 2);
    REQUIRE(m2.size() == 9);
    CHECK(m2[0] == M[0][0] * M[1][1] - M[0][1] * M[1][0]);
    CHECK(m2.back() == M[1][1] * M[2][2] - M[1][2] * M[2][1]);
  }
  CHECK_THROWS(minors({{parse_poly("x", ctx)}}, 2));
}

TEST_CASE("germ validation") {
  auto ctx = testutil::local_ctx({"x", "y", "z"});
  auto X = GermSpec::make(ctx, {parse_poly("x^2 + y^2 + z^2", ctx)}, 2);
  CHECK(X.is_ici);
  CHECK(X.embedding_dim() == 3);
  auto cols = X.differential_columns();
  REQUIRE(cols.size() == 1);
  CHECK(cols[0][0] == parse_poly("2*x", ctx));
  // generators must vanish at the origin
  CHECK_THROWS(GermSpec::make(ctx, {parse_poly("1 + x", ctx)}, 2));
  CHECK_THROWS(GermSpec::make(ctx, {}, 4));
  // two generators on a surface germ in C^3 is not a complete intersection count
  auto Y = GermSpec::make(ctx, {parse_poly("x*y", ctx), parse_poly("x*z", ctx)}, 2);
  CHECK(!Y.is_ici);
}

TEST_CASE("collection validation") {
  auto ctx = testutil::local_ctx({"x", "y", "z"});
  Polynomial one = Polynomial::constant(ctx, Rational(1));
  Polynomial zero = Polynomial::zero(ctx);
  KForm dz = KForm::one_form(ctx, {zero, zero, one});
  CHECK_NOTHROW(CollectionSpec::make({2}, {{dz}}, 2));
  CHECK_NOTHROW(CollectionSpec::make({1, 1}, {{dz, dz}, {dz, dz}}, 2));
  // partition must sum to the germ dimension
  CHECK_THROWS(CollectionSpec::make({1}, {{dz, dz}}, 2));
  // block i needs n - k_i + 1 forms
  CHECK_THROWS(CollectionSpec::make({2}, {{dz, dz}}, 2));
  CHECK_THROWS(CollectionSpec::make({2}, {{KForm::basis(ctx, {0, 1}, one)}}, 2));
}

TEST_CASE("presentation of differential forms on a hypersurface") {
  auto ctx = testutil::local_ctx({"x", "y", "z"});
  auto X = GermSpec::make(ctx, {parse_poly("x^2 + y^2 + z^2", ctx)}, 2);
  FPModule om2 = omega_presentation(X, 2);
  CHECK(om2.rank == 3);
  // g e_I for the 3 basis 2-forms plus dg ∧ dz_K for the 3 basis 1-forms
  CHECK(om2.relations.size() == 6);
  FPModule om0 = omega_presentation(X, 0);
  CHECK(om0.rank == 1);
  CHECK(om0.relations.size() == 1);
  // dg ∧ dz_{0} has no dz_0 ∧ dz_0 component: relation columns are honest 2-forms
  for (const auto& col : om2.relations) CHECK(col.size() == 3);
}
