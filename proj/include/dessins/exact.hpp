#ifndef DESSINS_EXACT_HPP
#define DESSINS_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <utility>
#include <vector>

namespace dessins {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// (a)_k = a (a+1) ... (a+k-1); (a)_0 = 1.  Throws on negative k.
Rational pochhammer(const Rational& a, int k);

/// Which coefficient field a polynomial lives in.  Operations promote Q into
/// Q(sqrt(-3)) when the operands disagree.
enum class Field { Q, QSqrtMinus3 };

/// An element a + b*w of Q(sqrt(-3)), where w^2 = -3.  The numerical
/// embedding fixes w = i*sqrt(3).
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(int value) : a_(value) {}                       // NOLINT(implicit)
  ExactScalar(Rational a) : a_(std::move(a)) {}               // NOLINT(implicit)
  ExactScalar(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static ExactScalar sqrt_minus3() { return ExactScalar(Rational(0), Rational(1)); }

  const Rational& rat() const { return a_; }
  const Rational& irr() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }

  ExactScalar operator-() const { return ExactScalar(-a_, -b_); }
  ExactScalar operator+(const ExactScalar& rhs) const {
    return ExactScalar(a_ + rhs.a_, b_ + rhs.b_);
  }
  ExactScalar operator-(const ExactScalar& rhs) const {
    return ExactScalar(a_ - rhs.a_, b_ - rhs.b_);
  }
  ExactScalar operator*(const ExactScalar& rhs) const {
    // (a + bw)(c + dw) = ac - 3bd + (ad + bc) w
    return ExactScalar(a_ * rhs.a_ - 3 * b_ * rhs.b_, a_ * rhs.b_ + b_ * rhs.a_);
  }
  ExactScalar operator/(const ExactScalar& rhs) const;

  bool operator==(const ExactScalar& rhs) const { return a_ == rhs.a_ && b_ == rhs.b_; }
  bool operator!=(const ExactScalar& rhs) const { return !(*this == rhs); }

  std::string to_string() const;

 private:
  Rational a_;
  Rational b_;
};

/// Dense univariate polynomial with exact coefficients, stored in ascending
/// degree with a nonzero leading coefficient.  The zero polynomial has an
/// empty coefficient list and degree -1.  No rounding anywhere.
class ExactPolynomial {
 public:
  ExactPolynomial() = default;
  explicit ExactPolynomial(std::vector<ExactScalar> coeffs);
  ExactPolynomial(std::vector<ExactScalar> coeffs, Field field);

  static ExactPolynomial zero(Field field = Field::Q);
  static ExactPolynomial constant(const ExactScalar& value);
  static ExactPolynomial monomial(const ExactScalar& coeff, int power);
  /// The variable z.
  static ExactPolynomial z();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Field field() const { return field_; }
  ExactScalar coeff(int power) const;
  const std::vector<ExactScalar>& coeffs() const { return coeffs_; }
  ExactScalar leading() const;

  ExactPolynomial operator-() const;
  ExactPolynomial operator+(const ExactPolynomial& rhs) const;
  ExactPolynomial operator-(const ExactPolynomial& rhs) const;
  ExactPolynomial operator*(const ExactPolynomial& rhs) const;
  ExactPolynomial operator*(const ExactScalar& scalar) const;
  ExactPolynomial pow(int exponent) const;

  bool operator==(const ExactPolynomial& rhs) const { return coeffs_ == rhs.coeffs_; }
  bool operator!=(const ExactPolynomial& rhs) const { return coeffs_ != rhs.coeffs_; }

  ExactPolynomial derivative() const;
  ExactScalar evaluate(const ExactScalar& x) const;
  /// (f . g)(z) = f(g(z)).
  ExactPolynomial compose(const ExactPolynomial& inner) const;

  /// Quotient and remainder; throws on division by the zero polynomial.
  std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& divisor) const;
  /// Exact division; throws if the remainder is nonzero.
  ExactPolynomial divexact(const ExactPolynomial& divisor) const;
  ExactPolynomial monic() const;

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<ExactScalar> coeffs_;
  Field field_ = Field::Q;
};

/// Monic gcd via a primitive-remainder Euclidean sequence (content is
/// stripped after every step to keep coefficient growth polynomial).
ExactPolynomial poly_gcd(const ExactPolynomial& a, const ExactPolynomial& b);

/// Yun decomposition: F = lc * prod f_i^{m_i} with the f_i monic,
/// square-free and pairwise coprime.  Only factors of positive degree are
/// returned, ordered by increasing multiplicity.
std::vector<std::pair<ExactPolynomial, int>> square_free_decomposition(
    const ExactPolynomial& F);

}  // namespace dessins

#endif
