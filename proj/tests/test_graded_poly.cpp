#include "gdet/graded_poly.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gdet;

namespace {

ZGradedPoly x(const GroupPtr& g, size_t idx) {
  return ZGradedPoly::variable(g, idx, Int(1));
}

ZGradedPoly random_poly(const GroupPtr& g, std::mt19937_64& rng, int terms) {
  ZGradedPoly p(g);
  for (int t = 0; t < terms; ++t) {
    ExpVec e(g->size(), 0);
    for (int k = 0; k < 2; ++k) e[rng() % g->size()] += 1;
    p.add_term(e, Int(static_cast<int>(rng() % 7) - 3));
  }
  return p;
}

std::map<size_t, Int> random_assignment(const GroupPtr& g, std::mt19937_64& rng) {
  std::map<size_t, Int> a;
  for (size_t i = 0; i < g->size(); ++i)
    a[i] = Int(static_cast<int>(rng() % 9) - 4);
  return a;
}

}  // namespace

TEST_CASE("polynomial arithmetic and grading in C2") {
  auto g = make_group({2});
  auto f = x(g, 0) + x(g, 1);
  auto sq = f * f;
  REQUIRE(sq.term_count() == 3);
  REQUIRE(sq.terms().at(ExpVec{2, 0}) == 1);
  REQUIRE(sq.terms().at(ExpVec{1, 1}) == 2);
  REQUIRE(sq.terms().at(ExpVec{0, 2}) == 1);
  // x_0^2 and x_1^2 land on the identity, x_0 x_1 on the involution.
  REQUIRE(Monomial{ExpVec{2, 0}}.grade(*g) == 0);
  REQUIRE(Monomial{ExpVec{0, 2}}.grade(*g) == 0);
  REQUIRE(Monomial{ExpVec{1, 1}}.grade(*g) == 1);

  REQUIRE((f * ZGradedPoly(g)).is_zero());
}

TEST_CASE("product grades multiply in C4") {
  auto g = make_group({4});
  auto f = (x(g, 0) + x(g, 2)) * (x(g, 1) + x(g, 3));
  REQUIRE(f.term_count() == 4);
  auto grades = f.support_grades();
  REQUIRE(grades == std::vector<size_t>{1, 3});
}

TEST_CASE("graded components partition the polynomial") {
  auto g = make_group({4});
  auto y0 = x(g, 0) + x(g, 2);
  auto y1 = x(g, 1) + x(g, 3);
  auto theta = y0 * y0 - y1 * y1;

  auto z0 = theta.graded_component(0);
  auto z2 = theta.graded_component(2);
  auto z1 = theta.graded_component(1);

  auto expect_z0 = x(g, 0) * x(g, 0) + x(g, 2) * x(g, 2) -
                   ZGradedPoly::constant(g, Int(2)) * x(g, 1) * x(g, 3);
  auto expect_z2 = ZGradedPoly::constant(g, Int(2)) * x(g, 0) * x(g, 2) -
                   x(g, 1) * x(g, 1) - x(g, 3) * x(g, 3);
  REQUIRE((z0 - expect_z0).is_zero());
  REQUIRE((z2 - expect_z2).is_zero());
  REQUIRE(z1.is_zero());
  REQUIRE((theta - z0 - z2).is_zero());

  // Components are idempotent projections with disjoint supports.
  REQUIRE((z0.graded_component(0) - z0).is_zero());
  REQUIRE(z0.graded_component(2).is_zero());
}

TEST_CASE("substitution is an exact ring map") {
  auto g = make_group({4});
  auto y0 = x(g, 0) + x(g, 2);
  auto y1 = x(g, 1) + x(g, 3);
  auto z0 = (y0 * y0 - y1 * y1).graded_component(0);

  std::map<size_t, Int> a{{0, 1}, {1, 0}, {2, 0}, {3, 0}};
  REQUIRE(substitute(z0, a) == 1);
  std::map<size_t, Int> b{{0, 2}, {1, 1}, {2, 1}, {3, 1}};
  REQUIRE(substitute(z0, b) == 3);
  REQUIRE(substitute(ZGradedPoly(g), b) == 0);

  std::map<size_t, Int> partial{{0, 1}};
  REQUIRE_THROWS_AS(substitute(z0, partial), std::invalid_argument);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    auto f1 = random_poly(g, rng, 4);
    auto f2 = random_poly(g, rng, 4);
    auto asn = random_assignment(g, rng);
    REQUIRE(substitute(f1 * f2, asn) == substitute(f1, asn) * substitute(f2, asn));
    REQUIRE(substitute(f1 + f2, asn) == substitute(f1, asn) + substitute(f2, asn));
  }
}

TEST_CASE("grade is a homomorphism on random monomials") {
  auto g = make_group({8, 2});
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    ExpVec e1(g->size(), 0), e2(g->size(), 0);
    for (int k = 0; k < 3; ++k) {
      e1[rng() % g->size()] += 1;
      e2[rng() % g->size()] += 1;
    }
    ExpVec prod(g->size(), 0);
    for (size_t i = 0; i < prod.size(); ++i)
      prod[i] = static_cast<uint16_t>(e1[i] + e2[i]);
    REQUIRE(Monomial{prod}.grade(*g) ==
            g->op(Monomial{e1}.grade(*g), Monomial{e2}.grade(*g)));
  }
}

TEST_CASE("group mismatch is rejected") {
  auto a = make_group({4});
  auto b = make_group({2, 2});
  REQUIRE_THROWS_AS(x(a, 0) + x(b, 0), std::invalid_argument);
}

TEST_CASE("rendering uses grlex order") {
  auto g = make_group({4});
  auto y0 = x(g, 0) + x(g, 2);
  auto y1 = x(g, 1) + x(g, 3);
  auto z0 = (y0 * y0 - y1 * y1).graded_component(0);
  REQUIRE(z0.str() == "x_2^2 - 2*x_1*x_3 + x_0^2");
  REQUIRE(ZGradedPoly(g).str() == "0");

  // Cyclotomic coefficients render with parenthesized ring elements.
  auto ring = CycloRing::get(4);
  auto p = CycloGradedPoly::variable(g, 1, Cyclo::root_of_unity(ring, 1));
  REQUIRE(p.str() == "(z)*x_1");
}
