#ifndef DESSINS_SHABAT_HPP
#define DESSINS_SHABAT_HPP

#include <string>
#include <vector>

#include "dessins/exact.hpp"
#include "dessins/passport.hpp"

namespace dessins {

Integer binomial(int n, int k);

// --- Family constructors -----------------------------------------------

/// z^r (the r-star).  r >= 1.
ExactPolynomial star_shabat(int r);

/// 4z(1-z): the 2-edge path used for cleaning.
ExactPolynomial beta_poly();

/// (1 + T_n(z)) / 2 realized through the Chebyshev recurrence
/// T_0 = 1, T_1 = z, T_{k+1} = 2z T_k - T_{k-1}.  Degree-n path.  n >= 1.
ExactPolynomial chebyshev_path(int n);

/// (1-z)^t (sum_{k<r} (t/s)_k z^k / k!)^s: the diameter-four family with
/// passport [s^{r-1},t; r,1^{(r-1)(s-1)+(t-1)}].  r,s,t >= 1.
ExactPolynomial adrianov_shabat(int r, int s, int t);

/// The double star S_{r,t} = (1-z)^t sum_{j<r} C(t-1+j, t-1) z^j; identical
/// to adrianov_shabat(r, 1, t).
ExactPolynomial srt_poly(int r, int t);

/// beta . S_{r,t}: passport [r,t,1^{r+t-2};2^{r+t-1}].  Requires r,t > 1.
ExactPolynomial cleaned_double_star(int r, int t);

/// The degree-3 polynomial whose dessin is a 3-star with a white center and
/// black leaves at 0 and 1; coefficients in Q(sqrt(-3)) with w = i*sqrt(3).
ExactPolynomial threestar_tripod();

/// tripod . S_{r,r}: passport [r^2,1^{4r-3};3^{2r-1}].  Requires r >= 2.
ExactPolynomial threestar_composite(int r);

/// The degree-14 polynomial for the passport [3^3,1^5;2^7], as displayed:
/// -(4/531441)(z-1) z^3 (2z^2+3z+9)^3 (8z^4+28z^3+126z^2+189z+378).
ExactPolynomial sporadic_337();

// --- Shabat property ----------------------------------------------------

/// Exact criterion: deg gcd(F,F') + deg gcd(F-1,F') = deg F - 1, i.e. every
/// critical point is a repeated root of F or of F-1.  Requires deg F >= 1.
bool is_shabat(const ExactPolynomial& F);

/// Black partition = root multiplicities of F, white = of F-1, both read off
/// the square-free decomposition.  Requires is_shabat(F).
Passport passport_of(const ExactPolynomial& F);

// --- Discrepancy detectors (reported, never auto-corrected) -------------

/// Compares the proposition-statement hypergeometric display for the cleaned
/// double star against the product form, as truncated power series and at
/// rational sample points.
struct HypergeometricComparison {
  int r = 0;
  int t = 0;
  int truncation_order = 0;
  int first_mismatch_power = -1;  // -1: series agree up to the truncation
  bool forms_agree = false;
  std::vector<std::string> sample_rows;
  std::string summary;
};
HypergeometricComparison compare_cleaned_double_star_forms(int r, int t,
                                                           int samples = 20);

/// Checks the two white-partition exponents that appear for the cleaned
/// double star (2^{r+t-1} in the statement, 2^{2r-1} in the proof text)
/// against the actual polynomial.
struct PassportExponentCheck {
  int r = 0;
  int t = 0;
  std::string statement_passport;
  std::string proof_text_passport;
  bool proof_text_sums_to_n = false;
  std::string computed_passport;
  bool statement_matches = false;
  std::string summary;
};
PassportExponentCheck check_cleaned_double_star_exponent(int r, int t);

}  // namespace dessins

#endif
