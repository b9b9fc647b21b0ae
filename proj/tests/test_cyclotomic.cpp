#include "gdet/cyclotomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace gdet;

namespace {

// Test-only oracle: multiply coefficient vectors cyclically (mod x^N - 1),
// independent of the library's reduction path.
std::vector<Int> cyclic_mul(const std::vector<Int>& a, const std::vector<Int>& b,
                            int n) {
  std::vector<Int> c(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) c[static_cast<size_t>((i + j) % n)] += a[i] * b[j];
  return c;
}

Cyclo random_value(const CycloRingPtr& ring, std::mt19937_64& rng) {
  std::vector<Int> c(static_cast<size_t>(ring->degree()));
  for (auto& v : c) v = static_cast<int>(rng() % 21) - 10;
  return Cyclo::from_poly(ring, std::move(c));
}

}  // namespace

TEST_CASE("cyclotomic polynomials of small index") {
  REQUIRE(cyclotomic_polynomial(1) == ZPoly{-1, 1});
  REQUIRE(cyclotomic_polynomial(2) == ZPoly{1, 1});
  REQUIRE(cyclotomic_polynomial(4) == ZPoly{1, 0, 1});
  REQUIRE(cyclotomic_polynomial(8) == ZPoly{1, 0, 0, 0, 1});
  REQUIRE(cyclotomic_polynomial(3) == ZPoly{1, 1, 1});
  REQUIRE(cyclotomic_polynomial(12) == ZPoly{1, 0, -1, 0, 1});
  REQUIRE_THROWS_AS(cyclotomic_polynomial(0), std::invalid_argument);
}

TEST_CASE("product of cyclotomic polynomials over divisors is x^N - 1") {
  for (int n : {1, 2, 3, 4, 6, 8, 12, 16, 24}) {
    ZPoly prod{1};
    for (int d = 1; d <= n; ++d)
      if (n % d == 0) prod = zpoly_mul(prod, cyclotomic_polynomial(d));
    ZPoly expect(static_cast<size_t>(n) + 1, 0);
    expect[0] = -1;
    expect[static_cast<size_t>(n)] = 1;
    REQUIRE(prod == expect);
  }
}

TEST_CASE("roots of unity reduce canonically") {
  auto ring8 = CycloRing::get(8);
  REQUIRE(ring8->degree() == 4);

  auto one = Cyclo::root_of_unity(ring8, 0);
  REQUIRE(one.as_integer() == Int(1));

  auto ring4 = CycloRing::get(4);
  REQUIRE(Cyclo::root_of_unity(ring4, 2).as_integer() == Int(-1));

  // zeta_8^5 = -zeta_8 because zeta^4 = -1.
  auto z5 = Cyclo::root_of_unity(ring8, 5);
  REQUIRE(z5.coeffs() == std::vector<Int>{0, -1, 0, 0});
  REQUIRE(z5 == -Cyclo::root_of_unity(ring8, 1));

  // Negative exponents wrap.
  REQUIRE(Cyclo::root_of_unity(ring8, -3) == Cyclo::root_of_unity(ring8, 5));
  REQUIRE(Cyclo::root_of_unity(ring8, 8).as_integer() == Int(1));
}

TEST_CASE("ring products agree with a cyclic-convolution oracle") {
  auto ring = CycloRing::get(8);
  auto term = [&](long long k) {
    return Cyclo::integer(ring, 1) + Cyclo::root_of_unity(ring, k);
  };
  Cyclo lib = term(1) * term(3) * term(5) * term(7);

  // Oracle: expand in Z[x]/(x^8-1), then fold with zeta^4 = -1.
  std::vector<Int> acc(8, 0);
  acc[0] = 1;
  for (int k : {1, 3, 5, 7}) {
    std::vector<Int> f(8, 0);
    f[0] = 1;
    f[static_cast<size_t>(k)] += 1;
    acc = cyclic_mul(acc, f, 8);
  }
  std::vector<Int> folded(4);
  for (int i = 0; i < 4; ++i) folded[i] = acc[i] - acc[i + 4];
  REQUIRE(lib.coeffs() == folded);
  REQUIRE(lib.as_integer() == Int(2));

  REQUIRE((Cyclo::root_of_unity(ring, 1) * Cyclo::root_of_unity(ring, 7))
              .as_integer() == Int(1));
}

TEST_CASE("conjugation") {
  auto ring4 = CycloRing::get(4);
  REQUIRE(Cyclo::root_of_unity(ring4, 1).conjugate() ==
          -Cyclo::root_of_unity(ring4, 1));

  auto ring8 = CycloRing::get(8);
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Cyclo a = random_value(ring8, rng);
    Cyclo b = random_value(ring8, rng);
    REQUIRE((a * b).conjugate() == a.conjugate() * b.conjugate());
    REQUIRE(a.conjugate().conjugate() == a);
    // Norm has no imaginary part: equal to its own conjugate.
    Cyclo norm = a * a.conjugate();
    REQUIRE(norm == norm.conjugate());
  }
}

TEST_CASE("ring axioms on random triples") {
  for (int n : {4, 8, 12, 16}) {
    auto ring = CycloRing::get(n);
    std::mt19937_64 rng(static_cast<uint64_t>(n));
    for (int trial = 0; trial < 30; ++trial) {
      Cyclo a = random_value(ring, rng);
      Cyclo b = random_value(ring, rng);
      Cyclo c = random_value(ring, rng);
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == Cyclo::zero(ring));
    }
  }
}

TEST_CASE("as_integer distinguishes rational integers") {
  auto ring = CycloRing::get(8);
  REQUIRE(Cyclo::integer(ring, 1).as_integer() == Int(1));
  REQUIRE(!Cyclo::root_of_unity(ring, 1).as_integer().has_value());
  REQUIRE(Cyclo::integer(ring, -42).as_integer() == Int(-42));
}

TEST_CASE("embedded lower-order roots satisfy their minimal polynomial") {
  for (int n : {8, 12, 16}) {
    auto ring = CycloRing::get(n);
    for (int m = 1; m <= n; ++m) {
      if (n % m != 0) continue;
      Cyclo zm = Cyclo::root_of_unity(ring, n / m);
      ZPoly phi = cyclotomic_polynomial(m);
      Cyclo acc = Cyclo::zero(ring);
      for (size_t i = phi.size(); i-- > 0;)
        acc = acc * zm + Cyclo::integer(ring, phi[i]);
      REQUIRE(acc.is_zero());
    }
  }
}

TEST_CASE("ring mismatch is rejected") {
  auto a = Cyclo::integer(CycloRing::get(4), 1);
  auto b = Cyclo::integer(CycloRing::get(8), 1);
  REQUIRE_THROWS_AS(a + b, std::invalid_argument);
  REQUIRE_THROWS_AS(a * b, std::invalid_argument);
}

TEST_CASE("text rendering round-trips") {
  auto ring = CycloRing::get(8);
  REQUIRE(Cyclo::zero(ring).str() == "0");
  REQUIRE(Cyclo::root_of_unity(ring, 5).str() == "-z");
  Cyclo v = Cyclo::integer(ring, 3) - Cyclo::root_of_unity(ring, 2) * Int(2) +
            Cyclo::root_of_unity(ring, 3) * Int(7);
  REQUIRE(v.str() == "3 - 2*z^2 + 7*z^3");
  REQUIRE(Cyclo::parse(ring, v.str()) == v);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    Cyclo a = random_value(ring, rng);
    REQUIRE(Cyclo::parse(ring, a.str()) == a);
  }
}
