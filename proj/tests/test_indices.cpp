#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "singidx/indices.hpp"
#include "testutil.hpp"

using namespace singidx;

namespace {

struct Setup {
  CtxPtr ctx3 = testutil::local_ctx({"x", "y", "z"});
  CtxPtr ctx4 = testutil::local_ctx({"x", "y", "z", "w"});
  CtxPtr ctx2 = testutil::local_ctx({"x", "y"});

  GermSpec surface(const std::string& f) const {
    return GermSpec::make(ctx3, {parse_poly(f, ctx3)}, 2);
  }
  KForm form3(const std::vector<std::string>& coeffs) const {
    std::vector<Polynomial> ps;
    for (const auto& c : coeffs) ps.push_back(parse_poly(c, ctx3));
    return KForm::one_form(ctx3, ps);
  }
};

void check_all_routes(const GermSpec& X, const CollectionSpec& c, std::int64_t expected) {
  CHECK(gsv_index_minors(X, c).value == expected);
  CHECK(gsv_index_forms(X, c).value == expected);
  CHECK(hom_index(X, c).value == expected);
}

}  // namespace

TEST_CASE("nodal surface with a coordinate form") {
  Setup s;
  GermSpec X = s.surface("x^2 + y^2 + z^2");
  CollectionSpec c = CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2);
  check_all_routes(X, c, 2);
  CollectionSpec c2 = CollectionSpec::make({2}, {{s.form3({"1", "0", "1"})}}, 2);
  check_all_routes(X, c2, 2);
}

TEST_CASE("cuspidal surfaces") {
  Setup s;
  GermSpec A2 = s.surface("x^3 + y^2 + z^2");
  check_all_routes(A2, CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2), 4);
  check_all_routes(A2, CollectionSpec::make({2}, {{s.form3({"1", "0", "1"})}}, 2), 3);
  GermSpec A3 = s.surface("x^4 + y^2 + z^2");
  check_all_routes(A3, CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2), 6);
  check_all_routes(A3, CollectionSpec::make({2}, {{s.form3({"1", "0", "1"})}}, 2), 4);
}

TEST_CASE("codimension two complete intersection in four variables") {
  Setup s;
  GermSpec X = GermSpec::make(
      s.ctx4,
      {parse_poly("x^2 + y^2 + z^2 + w^2", s.ctx4), parse_poly("x^2 + 2*y^2 + 3*z^2 + 4*w^2", s.ctx4)},
      2);
  Polynomial one = Polynomial::constant(s.ctx4, Rational(1));
  Polynomial zero = Polynomial::zero(s.ctx4);
  KForm dw = KForm::one_form(s.ctx4, {zero, zero, zero, one});
  check_all_routes(X, CollectionSpec::make({2}, {{dw}}, 2), 12);
}

TEST_CASE("two-block collection on the smooth plane") {
  Setup s;
  GermSpec X = GermSpec::make(s.ctx2, {}, 2);
  Polynomial one = Polynomial::constant(s.ctx2, Rational(1));
  Polynomial zero = Polynomial::zero(s.ctx2);
  Polynomial x = parse_poly("x", s.ctx2), y = parse_poly("y", s.ctx2);
  CollectionSpec c = CollectionSpec::make(
      {1, 1},
      {{KForm::one_form(s.ctx2, {one, zero}), KForm::one_form(s.ctx2, {zero, x})},
       {KForm::one_form(s.ctx2, {zero, one}), KForm::one_form(s.ctx2, {y, zero})}},
      2);
  check_all_routes(X, c, 1);
}

TEST_CASE("non-isolated special point is rejected") {
  Setup s;
  GermSpec X = s.surface("x^2 + y^2 + z^2");
  // ω = df vanishes on all of X
  CollectionSpec c = CollectionSpec::make({2}, {{s.form3({"2*x", "2*y", "2*z"})}}, 2);
  CHECK_THROWS_AS(gsv_index_minors(X, c), NonIsolated);
  CHECK_THROWS_AS(gsv_index_forms(X, c), NonIsolated);
  CHECK_THROWS_AS(hom_index(X, c), NonIsolated);
  try {
    gsv_index_minors(X, c);
  } catch (const NonIsolated& e) {
    CHECK(e.block == 0);
  }
}

TEST_CASE("gsv routes require a complete intersection") {
  Setup s;
  GermSpec Y = GermSpec::make(s.ctx3, {parse_poly("x*y", s.ctx3), parse_poly("x*z", s.ctx3)}, 2);
  CollectionSpec c = CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2);
  CHECK_THROWS_AS(gsv_index_minors(Y, c), NotICIS);
  CHECK_THROWS_AS(gsv_index_forms(Y, c), NotICIS);
}

TEST_CASE("torsion module dimensions are symmetric") {
  Setup s;
  auto [a0, a1] = torsion_dims(s.surface("x^2 + y^2 + z^2"));
  CHECK(a0 == 1);
  CHECK(a1 == 1);
  auto [b0, b1] = torsion_dims(s.surface("x^3 + y^2 + z^2"));
  CHECK(b0 == 2);
  CHECK(b1 == 2);
  auto [c0, c1] = torsion_dims(GermSpec::make(s.ctx2, {}, 2));
  CHECK(c0 == 0);
  CHECK(c1 == 0);
  GermSpec Q = GermSpec::make(
      s.ctx4,
      {parse_poly("x^2 + y^2 + z^2 + w^2", s.ctx4), parse_poly("x^2 + 2*y^2 + 3*z^2 + 4*w^2", s.ctx4)},
      2);
  auto [q0, q1] = torsion_dims(Q);
  CHECK(q0 == q1);
}

TEST_CASE("generic collection invariant") {
  Setup s;
  InvariantReport a1 = singularity_invariant(s.surface("x^2 + y^2 + z^2"), {2}, 4, 7);
  CHECK(a1.invariant == 2);
  InvariantReport a2 = singularity_invariant(s.surface("x^3 + y^2 + z^2"), {2}, 4, 7);
  CHECK(a2.invariant == 3);
  // seed independence
  CHECK(singularity_invariant(s.surface("x^3 + y^2 + z^2"), {2}, 4, 99).invariant == 3);
  // smooth germ: generic constant forms never degenerate
  CHECK(singularity_invariant(GermSpec::make(s.ctx2, {}, 2), {1, 1}, 3, 1).invariant == 0);
}

TEST_CASE("conservation of number under deformation") {
  Setup s;
  GermSpec X = s.surface("x^2 + y^2 + z^2");
  CollectionSpec c = CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2);
  CollectionSpec pert = CollectionSpec::make({2}, {{s.form3({"1", "0", "0"})}}, 2);
  ConservationReport r = conservation_probe(X, c, pert, Rational(1, 2));
  CHECK(r.local_index == 2);
  CHECK(r.global_count == 2);
  CHECK(r.difference == 0);

  // smooth plane, cusp differential deformed by dx
  GermSpec P = GermSpec::make(s.ctx2, {}, 2);
  KForm df = exterior_derivative(parse_poly("x^3 + y^2", s.ctx2));
  Polynomial one = Polynomial::constant(s.ctx2, Rational(1));
  Polynomial zero = Polynomial::zero(s.ctx2);
  CollectionSpec cc = CollectionSpec::make({2}, {{df}}, 2);
  CollectionSpec pp = CollectionSpec::make({2}, {{KForm::one_form(s.ctx2, {one, zero})}}, 2);
  ConservationReport r2 = conservation_probe(P, cc, pp, Rational(1));
  CHECK(r2.local_index == 2);
  CHECK(r2.global_count == 2);
  CHECK(r2.difference == 0);
}

TEST_CASE("homological route reports the cohomology profile") {
  Setup s;
  GermSpec X = s.surface("x^2 + y^2 + z^2");
  CollectionSpec c = CollectionSpec::make({2}, {{s.form3({"0", "0", "1"})}}, 2);
  IndexReport r = hom_index(X, c);
  REQUIRE(r.cohomology_profile.has_value());
  CHECK(*r.cohomology_profile == std::vector<std::int64_t>{2, 0, 0});
  CHECK(r.method == "homological");
}
