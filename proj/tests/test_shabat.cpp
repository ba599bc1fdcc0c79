#include <doctest.h>

#include <stdexcept>

#include "dessins/exact.hpp"
#include "dessins/passport.hpp"
#include "dessins/shabat.hpp"

using namespace dessins;

TEST_CASE("passport text format") {
  Passport p({3, 3, 3, 1, 1, 1, 1, 1}, {2, 2, 2, 2, 2, 2, 2});
  CHECK(p.to_string() == "[3^3,1^5;2^7]");
  CHECK(Passport::parse("[3^3,1^5;2^7]") == p);
  CHECK(Passport::parse("[8;1^8]").to_string() == "[8;1^8]");
  CHECK(Passport::parse("[2,1;2,1]").black == std::vector<int>{2, 1});
  CHECK_THROWS_AS(Passport::parse("[3;1^2]"), std::invalid_argument);
  CHECK_THROWS_AS(Passport::parse("3,1;2"), std::invalid_argument);
}

TEST_CASE("stars") {
  for (int r = 1; r <= 8; ++r) {
    auto F = star_shabat(r);
    CHECK(is_shabat(F));
    std::vector<int> white(r, 1);
    CHECK(passport_of(F) == Passport({r}, white));
  }
}

TEST_CASE("chebyshev paths") {
  auto F3 = chebyshev_path(3);
  CHECK(F3 == ExactPolynomial({ExactScalar(Rational(1, 2)), ExactScalar(Rational(-3, 2)),
                               ExactScalar(0), ExactScalar(2)}));
  // critical points +-1/2 land on {0, 1}
  CHECK(F3.evaluate(ExactScalar(Rational(1, 2))) == ExactScalar(0));
  CHECK(F3.evaluate(ExactScalar(Rational(-1, 2))) == ExactScalar(1));
  CHECK(F3.derivative().evaluate(ExactScalar(Rational(1, 2))) == ExactScalar(0));

  CHECK(chebyshev_path(1) == ExactPolynomial({ExactScalar(Rational(1, 2)),
                                              ExactScalar(Rational(1, 2))}));
  CHECK(chebyshev_path(2) == ExactPolynomial::monomial(1, 2));

  for (int n = 1; n <= 12; ++n) {
    auto F = chebyshev_path(n);
    CHECK(F.degree() == n);
    CHECK(is_shabat(F));
    auto p = passport_of(F);
    if (n % 2 == 1) {
      int r = (n - 1) / 2;
      std::vector<int> parts(r, 2);
      parts.push_back(1);
      CHECK(p == Passport(parts, parts));
    } else {
      int r = n / 2;
      std::vector<int> black(r, 2);
      std::vector<int> white(r - 1, 2);
      white.push_back(1);
      white.push_back(1);
      CHECK(p == Passport(black, white));
    }
  }
}

TEST_CASE("adrianov diameter-four polynomials") {
  // (r,s,t) = (2,2,1): (1-z)(1+z/2)^2 = 1 - (3/4)z^2 - (1/4)z^3
  auto F = adrianov_shabat(2, 2, 1);
  CHECK(F == ExactPolynomial({ExactScalar(1), ExactScalar(0),
                              ExactScalar(Rational(-3, 4)),
                              ExactScalar(Rational(-1, 4))}));
  CHECK(is_shabat(F));
  CHECK(passport_of(F) == Passport({2, 1}, {2, 1}));

  // degenerate r = 1: empty sum is 1, leaving (1-z)^t
  CHECK(adrianov_shabat(1, 4, 3) == ExactPolynomial({1, -1}).pow(3));

  // (3,3,1) is -(1/729)(z-1)(9+3z+2z^2)^3
  auto G = adrianov_shabat(3, 3, 1);
  auto rhs = (ExactPolynomial({1, -1}) * ExactPolynomial({9, 3, 2}).pow(3)) *
             ExactScalar(Rational(1, 729));
  CHECK(G == rhs);

  // Figure with s=6, r=5, t=3: passport [6^4,3; 5,1^22]
  auto H = adrianov_shabat(5, 6, 3);
  CHECK(H.degree() == 6 * 4 + 3);
  CHECK(is_shabat(H));
  CHECK(passport_of(H).to_string() == "[6^4,3;5,1^22]");
}

TEST_CASE("double star equals the s=1 specialization") {
  CHECK(srt_poly(1, 1) == ExactPolynomial({1, -1}));
  for (int r = 1; r <= 8; ++r)
    for (int t = 1; t <= 8; ++t)
      CHECK(srt_poly(r, t) == adrianov_shabat(r, 1, t));
  CHECK(passport_of(srt_poly(3, 2)).to_string() == "[2,1^2;3,1]");
}

TEST_CASE("cleaned double star") {
  auto beta = beta_poly();
  CHECK(is_shabat(beta));
  CHECK(beta.evaluate(ExactScalar(Rational(1, 2))) == ExactScalar(1));
  CHECK(passport_of(beta) == Passport({1, 1}, {2}));

  auto F = cleaned_double_star(5, 3);
  CHECK(F.degree() == 14);
  CHECK(is_shabat(F));
  CHECK(passport_of(F).to_string() == "[5,3,1^6;2^7]");

  CHECK_THROWS_AS(cleaned_double_star(1, 3), std::invalid_argument);

  // Closed product form: 4 z^r (1-z)^t (sum C(t-1+j,t-1) z^j)
  //                      (sum C(r-1+j,r-1) C(r+t-1,r+j) (-1)^j z^j).
  for (int r = 2; r <= 6; ++r) {
    for (int t = 2; t <= 6; ++t) {
      std::vector<ExactScalar> left(r), right(t);
      for (int j = 0; j < r; ++j)
        left[j] = ExactScalar(Rational(binomial(t - 1 + j, t - 1)));
      for (int j = 0; j < t; ++j)
        right[j] = ExactScalar(Rational(binomial(r - 1 + j, r - 1) *
                                        binomial(r + t - 1, r + j) *
                                        (j % 2 ? -1 : 1)));
      auto closed = ExactPolynomial::monomial(4, r) *
                    ExactPolynomial({1, -1}).pow(t) *
                    ExactPolynomial(std::move(left)) *
                    ExactPolynomial(std::move(right));
      CHECK(cleaned_double_star(r, t) == closed);
    }
  }
}

TEST_CASE("three-star tripod") {
  auto T = threestar_tripod();
  CHECK(T.field() == Field::QSqrtMinus3);
  CHECK(T.evaluate(ExactScalar(0)) == ExactScalar(0));
  CHECK(T.evaluate(ExactScalar(1)) == ExactScalar(0));
  // third root (1 - w)/2
  CHECK(T.evaluate(ExactScalar(Rational(1, 2), Rational(-1, 2))) == ExactScalar(0));

  auto Tp = T.derivative();
  auto dTp = square_free_decomposition(Tp);
  REQUIRE(dTp.size() == 1);
  CHECK(dTp[0].second == 2);
  CHECK(dTp[0].first.degree() == 1);

  auto dTm1 = square_free_decomposition(T - ExactPolynomial::constant(1));
  REQUIRE(dTm1.size() == 1);
  CHECK(dTm1[0].second == 3);

  CHECK(is_shabat(T));
  CHECK(passport_of(T) == Passport({1, 1, 1}, {3}));
}

TEST_CASE("three-star composites") {
  auto F = threestar_composite(2);
  CHECK(F.degree() == 9);
  CHECK(is_shabat(F));
  CHECK(passport_of(F).to_string() == "[2^2,1^5;3^3]");

  auto G = threestar_composite(4);
  CHECK(G.degree() == 21);
  CHECK(is_shabat(G));
  CHECK(passport_of(G).to_string() == "[4^2,1^13;3^7]");
}

TEST_CASE("the sporadic degree-14 polynomial") {
  auto F = sporadic_337();
  CHECK(F.degree() == 14);
  CHECK(F.evaluate(ExactScalar(1)) == ExactScalar(0));

  // black vertex of degree three at z = 0
  auto decomposition = square_free_decomposition(F);
  bool found_triple_z = false;
  for (const auto& [factor, multiplicity] : decomposition)
    if (multiplicity == 3 && factor.evaluate(ExactScalar(0)) == ExactScalar(0))
      found_triple_z = true;
  CHECK(found_triple_z);

  CHECK(is_shabat(F));
  CHECK(passport_of(F).to_string() == "[3^3,1^5;2^7]");

  // The displayed coefficients equal beta . f for f = adrianov(3,3,1).
  CHECK(beta_poly().compose(adrianov_shabat(3, 3, 1)) == F);
}

TEST_CASE("is_shabat rejects non-Shabat input") {
  ExactPolynomial z3mz({0, -1, 0, 1});
  CHECK_FALSE(is_shabat(z3mz));
  CHECK_THROWS_AS(passport_of(z3mz), std::invalid_argument);
  CHECK_THROWS_AS(is_shabat(ExactPolynomial::constant(2)), std::invalid_argument);
}

TEST_CASE("multiplicity defect equals the Shabat criterion") {
  auto defect = [](const ExactPolynomial& F) {
    int sum = 0;
    for (const auto& [factor, m] : square_free_decomposition(F))
      sum += (m - 1) * factor.degree();
    for (const auto& [factor, m] :
         square_free_decomposition(F - ExactPolynomial::constant(1)))
      sum += (m - 1) * factor.degree();
    return sum;
  };
  auto shabat_examples = {star_shabat(5), chebyshev_path(6), cleaned_double_star(3, 4)};
  for (const auto& F : shabat_examples) CHECK(defect(F) == F.degree() - 1);
  ExactPolynomial z3mz({0, -1, 0, 1});
  CHECK(defect(z3mz) != z3mz.degree() - 1);
}

TEST_CASE("cleaning doubles the degree and maps the passport") {
  for (const auto& G : {srt_poly(3, 2), adrianov_shabat(3, 3, 1), star_shabat(4)}) {
    // G(0), G(1) in {0,1} holds for these families.
    auto composed = beta_poly().compose(G);
    CHECK(composed.degree() == 2 * G.degree());
    auto pg = passport_of(G);
    std::vector<int> black = pg.black;
    black.insert(black.end(), pg.white.begin(), pg.white.end());
    CHECK(passport_of(composed) ==
          Passport(black, std::vector<int>(G.degree(), 2)));
  }
}

TEST_CASE("discrepancy detectors run and report") {
  auto hyp = compare_cleaned_double_star_forms(2, 2, 8);
  CHECK(hyp.sample_rows.size() == 8);
  CHECK(!hyp.summary.empty());

  auto exponent53 = check_cleaned_double_star_exponent(5, 3);
  CHECK(exponent53.statement_matches);
  CHECK_FALSE(exponent53.proof_text_sums_to_n);

  auto exponent33 = check_cleaned_double_star_exponent(3, 3);
  CHECK(exponent33.statement_matches);
  CHECK(exponent33.proof_text_sums_to_n);
}
