#include <doctest.h>

#include <random>
#include <stdexcept>

#include "dessins/exact.hpp"

using namespace dessins;

namespace {

ExactPolynomial random_poly(int max_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(0, max_degree);
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 4);
  int d = deg(rng);
  std::vector<ExactScalar> coeffs(d + 1);
  for (auto& c : coeffs) c = ExactScalar(Rational(num(rng), den(rng)));
  return ExactPolynomial(std::move(coeffs));
}

}  // namespace

TEST_CASE("pochhammer") {
  Rational kfact = 1;
  for (int k = 1; k <= 6; ++k) {
    kfact *= k;
    CHECK(pochhammer(1, k) == kfact);
  }
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(3, 6), 2) == Rational(3, 4));
  CHECK(pochhammer(Rational(5), 0) == 1);
  CHECK_THROWS_AS(pochhammer(Rational(1), -1), std::invalid_argument);
}

TEST_CASE("scalar field closure") {
  ExactScalar w = ExactScalar::sqrt_minus3();
  CHECK(w * w == ExactScalar(-3));
  ExactScalar x(Rational(2, 3), Rational(-1, 5));
  ExactScalar y(Rational(7), Rational(1, 2));
  CHECK((x / y) * y == x);
  CHECK((x + y) - y == x);
  CHECK_THROWS_AS(x / ExactScalar(0), std::invalid_argument);
}

TEST_CASE("polynomial arithmetic round-trips") {
  std::mt19937_64 rng(555);
  for (int trial = 0; trial < 30; ++trial) {
    auto F = random_poly(6, rng);
    auto G = random_poly(6, rng);
    CHECK((F + G) - G == F);
    CHECK(F.compose(ExactPolynomial::z()) == F);
    auto x = ExactScalar(Rational(3, 7));
    CHECK((F * G).evaluate(x) == F.evaluate(x) * G.evaluate(x));
    CHECK(F.compose(G).evaluate(x) == F.evaluate(G.evaluate(x)));
  }
}

TEST_CASE("derivative") {
  for (int r = 1; r <= 6; ++r) {
    auto d = ExactPolynomial::monomial(1, r).derivative();
    CHECK(d == ExactPolynomial::monomial(r, r - 1));
  }
  CHECK(ExactPolynomial::constant(5).derivative().is_zero());
}

TEST_CASE("division") {
  ExactPolynomial z2m1({-1, 0, 1});
  ExactPolynomial zm1({-1, 1});
  auto [q, r] = z2m1.divmod(zm1);
  CHECK(q == ExactPolynomial({1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(z2m1.divmod(ExactPolynomial()), std::invalid_argument);
  CHECK_THROWS_AS(ExactPolynomial({1, 1, 1}).divexact(zm1), std::logic_error);

  std::mt19937_64 rng(808);
  for (int trial = 0; trial < 20; ++trial) {
    auto A = random_poly(7, rng);
    auto B = random_poly(4, rng);
    if (B.is_zero()) continue;
    auto [quot, rem] = A.divmod(B);
    CHECK(quot * B + rem == A);
    CHECK(rem.degree() < B.degree());
  }
}

TEST_CASE("gcd") {
  ExactPolynomial zm1({-1, 1});
  ExactPolynomial zp2({2, 1});
  ExactPolynomial zp3({3, 1});
  auto F = zm1 * zm1 * zp2;
  auto G = zm1 * zp3;
  CHECK(poly_gcd(F, G) == zm1);
  CHECK(poly_gcd(F, F) == F.monic());
  CHECK(poly_gcd(zp2, zp3).degree() == 0);
  CHECK(poly_gcd(F, ExactPolynomial()) == F.monic());

  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    auto A = random_poly(5, rng);
    auto B = random_poly(5, rng);
    auto C = random_poly(3, rng);
    if (A.is_zero() || B.is_zero() || C.degree() < 1) continue;
    auto g = poly_gcd(A * C, B * C);
    CHECK((A * C).divmod(g).second.is_zero());
    CHECK((B * C).divmod(g).second.is_zero());
    CHECK(g.degree() >= C.degree());
  }
}

TEST_CASE("square-free decomposition") {
  ExactPolynomial zm1({-1, 1});
  ExactPolynomial z2p1({1, 0, 1});
  ExactPolynomial zp5({5, 1});
  auto F = zm1.pow(3) * z2p1.pow(2) * zp5 * ExactScalar(Rational(7, 3));
  auto decomposition = square_free_decomposition(F);
  REQUIRE(decomposition.size() == 3);
  CHECK(decomposition[0].first == zp5);
  CHECK(decomposition[0].second == 1);
  CHECK(decomposition[1].first == z2p1);
  CHECK(decomposition[1].second == 2);
  CHECK(decomposition[2].first == zm1);
  CHECK(decomposition[2].second == 3);

  ExactPolynomial rebuilt = ExactPolynomial::constant(F.leading());
  for (const auto& [factor, multiplicity] : decomposition)
    rebuilt = rebuilt * factor.pow(multiplicity);
  CHECK(rebuilt == F);
}

TEST_CASE("square-free decomposition over Q(sqrt(-3))") {
  ExactPolynomial z_minus_w({-ExactScalar::sqrt_minus3(), 1});
  ExactPolynomial zp1({1, 1});
  auto F = z_minus_w.pow(2) * zp1;
  auto decomposition = square_free_decomposition(F);
  REQUIRE(decomposition.size() == 2);
  CHECK(decomposition[0].first == zp1);
  CHECK(decomposition[1].first == z_minus_w);
  CHECK(decomposition[1].second == 2);
  CHECK(F.field() == Field::QSqrtMinus3);
}

TEST_CASE("field promotion") {
  ExactPolynomial rational({1, 2});
  ExactPolynomial irrational({ExactScalar::sqrt_minus3(), ExactScalar(1)});
  CHECK(rational.field() == Field::Q);
  CHECK((rational * irrational).field() == Field::QSqrtMinus3);
  CHECK((rational + irrational).field() == Field::QSqrtMinus3);
  CHECK_THROWS_AS(ExactPolynomial({ExactScalar::sqrt_minus3()}, Field::Q),
                  std::invalid_argument);
}

TEST_CASE("to_string") {
  ExactPolynomial p({ExactScalar(1), ExactScalar(Rational(-3, 4)), ExactScalar(0),
                     ExactScalar(Rational(0), Rational(2))});
  CHECK(p.to_string() == "2*w*z^3 + -3/4*z + 1");
  CHECK(ExactPolynomial().to_string() == "0");
}
