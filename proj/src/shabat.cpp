#include "dessins/shabat.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dessins {

Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer result = 1;
  for (int i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

ExactPolynomial star_shabat(int r) {
  if (r < 1) throw std::invalid_argument("star_shabat requires r >= 1");
  return ExactPolynomial::monomial(1, r);
}

ExactPolynomial beta_poly() {
  // 4z(1-z) = 4z - 4z^2
  return ExactPolynomial({0, 4, -4});
}

ExactPolynomial chebyshev_path(int n) {
  if (n < 1) throw std::invalid_argument("chebyshev_path requires n >= 1");
  ExactPolynomial prev = ExactPolynomial::constant(1);
  ExactPolynomial cur = ExactPolynomial::z();
  const ExactPolynomial twice_z = ExactPolynomial::monomial(2, 1);
  for (int k = 1; k < n; ++k) {
    ExactPolynomial next = twice_z * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return (cur + ExactPolynomial::constant(1)) * ExactScalar(Rational(1, 2));
}

ExactPolynomial adrianov_shabat(int r, int s, int t) {
  if (r < 1 || s < 1 || t < 1)
    throw std::invalid_argument("adrianov_shabat requires r,s,t >= 1");
  std::vector<ExactScalar> inner(r);
  Rational kfact = 1;
  for (int k = 0; k < r; ++k) {
    if (k > 0) kfact *= k;
    inner[k] = ExactScalar(pochhammer(Rational(t, s), k) / kfact);
  }
  ExactPolynomial sum(std::move(inner));
  ExactPolynomial one_minus_z({1, -1});
  return one_minus_z.pow(t) * sum.pow(s);
}

ExactPolynomial srt_poly(int r, int t) {
  if (r < 1 || t < 1) throw std::invalid_argument("srt_poly requires r,t >= 1");
  std::vector<ExactScalar> inner(r);
  for (int j = 0; j < r; ++j)
    inner[j] = ExactScalar(Rational(binomial(t - 1 + j, t - 1)));
  ExactPolynomial one_minus_z({1, -1});
  return one_minus_z.pow(t) * ExactPolynomial(std::move(inner));
}

ExactPolynomial cleaned_double_star(int r, int t) {
  if (r < 2 || t < 2)
    throw std::invalid_argument("cleaned_double_star requires r,t > 1");
  return beta_poly().compose(srt_poly(r, t));
}

ExactPolynomial threestar_tripod() {
  // -(3/2) sqrt(3) (i + sqrt(3) - 2iz) (z-1) z, with i*sqrt(3) encoded as w:
  //   3w z^3 - (9/2)(w + 1) z^2 + ((3/2)w + 9/2) z
  std::vector<ExactScalar> coeffs(4);
  coeffs[0] = ExactScalar(0);
  coeffs[1] = ExactScalar(Rational(9, 2), Rational(3, 2));
  coeffs[2] = ExactScalar(Rational(-9, 2), Rational(-9, 2));
  coeffs[3] = ExactScalar(Rational(0), Rational(3));
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial threestar_composite(int r) {
  if (r < 2) throw std::invalid_argument("threestar_composite requires r >= 2");
  return threestar_tripod().compose(srt_poly(r, r));
}

ExactPolynomial sporadic_337() {
  ExactPolynomial z = ExactPolynomial::z();
  ExactPolynomial z_minus_1({-1, 1});
  ExactPolynomial quad({9, 3, 2});
  ExactPolynomial quart({378, 189, 126, 28, 8});
  ExactPolynomial product = z_minus_1 * z.pow(3) * quad.pow(3) * quart;
  return product * ExactScalar(Rational(-4, 531441));
}

bool is_shabat(const ExactPolynomial& F) {
  if (F.degree() < 1)
    throw std::invalid_argument("is_shabat requires a nonconstant polynomial");
  ExactPolynomial Fp = F.derivative();
  int d0 = poly_gcd(F, Fp).degree();
  int d1 = poly_gcd(F - ExactPolynomial::constant(1), Fp).degree();
  return d0 + d1 == F.degree() - 1;
}

namespace {

std::vector<int> multiplicity_partition(const ExactPolynomial& F) {
  std::vector<int> parts;
  int covered = 0;
  for (const auto& [factor, multiplicity] : square_free_decomposition(F)) {
    for (int i = 0; i < factor.degree(); ++i) parts.push_back(multiplicity);
    covered += factor.degree() * multiplicity;
  }
  if (covered != F.degree())
    throw std::logic_error("square-free decomposition does not cover the degree");
  return parts;
}

}  // namespace

Passport passport_of(const ExactPolynomial& F) {
  if (!is_shabat(F))
    throw std::invalid_argument("passport_of requires a Shabat polynomial");
  return Passport(multiplicity_partition(F),
                  multiplicity_partition(F - ExactPolynomial::constant(1)));
}

// ---------------------------------------------------------------------------
// Discrepancy detectors
// ---------------------------------------------------------------------------

namespace {

ExactPolynomial truncate(const ExactPolynomial& p, int order) {
  std::vector<ExactScalar> coeffs;
  for (int i = 0; i <= std::min(order, p.degree()); ++i) coeffs.push_back(p.coeff(i));
  return ExactPolynomial(std::move(coeffs));
}

// 2F1(a, b; c; z) as a power series truncated at the given order.
ExactPolynomial hypergeometric_series(const Rational& a, const Rational& b,
                                      const Rational& c, int order) {
  std::vector<ExactScalar> coeffs(order + 1);
  Rational nfact = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) nfact *= n;
    Rational denom = pochhammer(c, n) * nfact;
    coeffs[n] = ExactScalar(pochhammer(a, n) * pochhammer(b, n) / denom);
  }
  return ExactPolynomial(std::move(coeffs));
}

double scalar_to_double(const ExactScalar& s) {
  return s.rat().convert_to<double>();
}

}  // namespace

HypergeometricComparison compare_cleaned_double_star_forms(int r, int t,
                                                           int samples) {
  HypergeometricComparison report;
  report.r = r;
  report.t = t;
  const int order = 2 * (r + t - 1) + 10;
  report.truncation_order = order;

  ExactPolynomial product_form = cleaned_double_star(r, t);

  // Statement form: 4 z^r C(r+t-1,r) 2F1(t-1, r; r+1; z)
  //   * (1 - (1-z)^t z^r C(r+t-1, t-1) 2F1(1, r+t; r+1; z)),
  // expanded as a power series and truncated.
  ExactPolynomial h1 = hypergeometric_series(t - 1, r, r + 1, order);
  ExactPolynomial h2 = hypergeometric_series(1, r + t, r + 1, order);
  ExactPolynomial zr = ExactPolynomial::monomial(1, r);
  ExactPolynomial one_minus_z({1, -1});
  ExactPolynomial left =
      truncate(zr * h1, order) * ExactScalar(Rational(4) * Rational(binomial(r + t - 1, r)));
  ExactPolynomial right =
      ExactPolynomial::constant(1) -
      truncate(truncate(one_minus_z.pow(t) * zr, order) * h2, order) *
          ExactScalar(Rational(binomial(r + t - 1, t - 1)));
  ExactPolynomial statement_form = truncate(truncate(left, order) * right, order);

  report.first_mismatch_power = -1;
  for (int k = 0; k <= order; ++k) {
    if (statement_form.coeff(k) != product_form.coeff(k)) {
      report.first_mismatch_power = k;
      break;
    }
  }
  report.forms_agree = report.first_mismatch_power == -1;

  for (int i = 1; i <= samples; ++i) {
    Rational z(i, 3 * samples + 1);  // rational points inside (0, 1/3]
    ExactScalar pv = product_form.evaluate(ExactScalar(z));
    ExactScalar sv = statement_form.evaluate(ExactScalar(z));
    std::ostringstream row;
    row << "z=" << z << " product=" << pv.to_string()
        << " statement(truncated)~" << scalar_to_double(sv)
        << (pv == sv ? " equal" : " DIFFER");
    report.sample_rows.push_back(row.str());
  }

  std::ostringstream summary;
  summary << "cleaned double star r=" << r << " t=" << t << ": ";
  if (report.forms_agree) {
    summary << "statement and product forms agree through z^" << order;
  } else {
    summary << "statement form (truncated at z^" << order
            << ") first differs from the product form at z^"
            << report.first_mismatch_power
            << "; the product form is the one every other check validates";
  }
  report.summary = summary.str();
  return report;
}

PassportExponentCheck check_cleaned_double_star_exponent(int r, int t) {
  PassportExponentCheck report;
  report.r = r;
  report.t = t;
  const int n = 2 * (r + t - 1);

  std::vector<int> black{r, t};
  for (int i = 0; i < r + t - 2; ++i) black.push_back(1);
  report.statement_passport =
      Passport(black, std::vector<int>(r + t - 1, 2)).to_string();

  const int proof_white_sum = 2 * (2 * r - 1);
  report.proof_text_sums_to_n = proof_white_sum == n;
  {
    std::ostringstream text;
    text << '[' << r << ',' << t << ",1^" << (r + t - 2) << ";2^" << (2 * r - 1) << ']';
    report.proof_text_passport = text.str();
  }

  Passport computed = passport_of(cleaned_double_star(r, t));
  report.computed_passport = computed.to_string();
  report.statement_matches = computed.to_string() == report.statement_passport;

  std::ostringstream summary;
  summary << "cleaned double star r=" << r << " t=" << t << ": computed passport "
          << report.computed_passport << "; statement form 2^{r+t-1} "
          << (report.statement_matches ? "matches" : "DOES NOT match")
          << "; proof-text form 2^{2r-1} "
          << (report.proof_text_sums_to_n ? "also sums to n (r=t)"
                                          : "does not sum to the edge count");
  report.summary = summary.str();
  return report;
}

}  // namespace dessins
