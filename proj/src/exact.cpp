#include "dessins/exact.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dessins {

Rational pochhammer(const Rational& a, int k) {
  if (k < 0) throw std::invalid_argument("pochhammer requires k >= 0");
  Rational result = 1;
  Rational term = a;
  for (int i = 0; i < k; ++i) {
    result *= term;
    term += 1;
  }
  return result;
}

ExactScalar ExactScalar::operator/(const ExactScalar& rhs) const {
  if (rhs.is_zero()) throw std::invalid_argument("division by zero scalar");
  // 1/(c + dw) = (c - dw) / (c^2 + 3 d^2)
  Rational norm = rhs.a_ * rhs.a_ + 3 * rhs.b_ * rhs.b_;
  ExactScalar conj(rhs.a_, -rhs.b_);
  ExactScalar numerator = (*this) * conj;
  return ExactScalar(numerator.a_ / norm, numerator.b_ / norm);
}

namespace {

std::string rational_to_string(const Rational& q) {
  std::ostringstream out;
  out << q;
  return out.str();
}

}  // namespace

std::string ExactScalar::to_string() const {
  if (b_ == 0) return rational_to_string(a_);
  std::ostringstream out;
  if (a_ != 0) out << rational_to_string(a_) << (b_ > 0 ? "+" : "");
  if (b_ == 1) {
    out << "w";
  } else if (b_ == -1) {
    out << "-w";
  } else {
    out << rational_to_string(b_) << "*w";
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// ExactPolynomial
// ---------------------------------------------------------------------------

ExactPolynomial::ExactPolynomial(std::vector<ExactScalar> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
  field_ = Field::Q;
  for (const auto& c : coeffs_)
    if (!c.is_rational()) field_ = Field::QSqrtMinus3;
}

ExactPolynomial::ExactPolynomial(std::vector<ExactScalar> coeffs, Field field)
    : coeffs_(std::move(coeffs)), field_(field) {
  trim();
  if (field_ == Field::Q)
    for (const auto& c : coeffs_)
      if (!c.is_rational())
        throw std::invalid_argument("irrational coefficient in a Q polynomial");
}

void ExactPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

ExactPolynomial ExactPolynomial::zero(Field field) {
  return ExactPolynomial(std::vector<ExactScalar>{}, field);
}

ExactPolynomial ExactPolynomial::constant(const ExactScalar& value) {
  return ExactPolynomial({value});
}

ExactPolynomial ExactPolynomial::monomial(const ExactScalar& coeff, int power) {
  if (power < 0) throw std::invalid_argument("negative monomial power");
  std::vector<ExactScalar> coeffs(power + 1);
  coeffs[power] = coeff;
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial ExactPolynomial::z() { return monomial(1, 1); }

ExactScalar ExactPolynomial::coeff(int power) const {
  if (power < 0 || power > degree()) return ExactScalar();
  return coeffs_[power];
}

ExactScalar ExactPolynomial::leading() const {
  if (is_zero()) throw std::invalid_argument("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

ExactPolynomial ExactPolynomial::operator-() const {
  std::vector<ExactScalar> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(-c);
  return ExactPolynomial(std::move(coeffs), field_);
}

ExactPolynomial ExactPolynomial::operator+(const ExactPolynomial& rhs) const {
  std::vector<ExactScalar> coeffs(std::max(coeffs_.size(), rhs.coeffs_.size()));
  for (size_t i = 0; i < coeffs.size(); ++i) {
    ExactScalar sum;
    if (i < coeffs_.size()) sum = sum + coeffs_[i];
    if (i < rhs.coeffs_.size()) sum = sum + rhs.coeffs_[i];
    coeffs[i] = sum;
  }
  return ExactPolynomial(std::move(coeffs), std::max(field_, rhs.field_));
}

ExactPolynomial ExactPolynomial::operator-(const ExactPolynomial& rhs) const {
  return (*this) + (-rhs);
}

ExactPolynomial ExactPolynomial::operator*(const ExactPolynomial& rhs) const {
  if (is_zero() || rhs.is_zero())
    return ExactPolynomial::zero(std::max(field_, rhs.field_));
  std::vector<ExactScalar> coeffs(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j)
      coeffs[i + j] = coeffs[i + j] + coeffs_[i] * rhs.coeffs_[j];
  return ExactPolynomial(std::move(coeffs), std::max(field_, rhs.field_));
}

ExactPolynomial ExactPolynomial::operator*(const ExactScalar& scalar) const {
  std::vector<ExactScalar> coeffs;
  coeffs.reserve(coeffs_.size());
  for (const auto& c : coeffs_) coeffs.push_back(c * scalar);
  Field field = field_;
  if (!scalar.is_rational()) field = Field::QSqrtMinus3;
  return ExactPolynomial(std::move(coeffs), field);
}

ExactPolynomial ExactPolynomial::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  ExactPolynomial result = constant(1);
  result.field_ = field_;
  for (int i = 0; i < exponent; ++i) result = result * (*this);
  return result;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (degree() < 1) return zero(field_);
  std::vector<ExactScalar> coeffs(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    coeffs[i - 1] = coeffs_[i] * ExactScalar(static_cast<int>(i));
  return ExactPolynomial(std::move(coeffs), field_);
}

ExactScalar ExactPolynomial::evaluate(const ExactScalar& x) const {
  ExactScalar acc;
  for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
  return acc;
}

ExactPolynomial ExactPolynomial::compose(const ExactPolynomial& inner) const {
  ExactPolynomial acc = zero(std::max(field_, inner.field_));
  for (size_t i = coeffs_.size(); i-- > 0;)
    acc = acc * inner + constant(coeffs_[i]);
  return acc;
}

std::pair<ExactPolynomial, ExactPolynomial> ExactPolynomial::divmod(
    const ExactPolynomial& divisor) const {
  if (divisor.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Field field = std::max(field_, divisor.field_);
  ExactPolynomial remainder = *this;
  std::vector<ExactScalar> quotient;
  if (degree() >= divisor.degree())
    quotient.resize(degree() - divisor.degree() + 1);
  const ExactScalar lead = divisor.leading();
  while (!remainder.is_zero() && remainder.degree() >= divisor.degree()) {
    int shift = remainder.degree() - divisor.degree();
    ExactScalar factor = remainder.leading() / lead;
    quotient[shift] = factor;
    remainder = remainder - divisor * monomial(factor, shift);
  }
  return {ExactPolynomial(std::move(quotient), field),
          ExactPolynomial(remainder.coeffs_, field)};
}

ExactPolynomial ExactPolynomial::divexact(const ExactPolynomial& divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero()) throw std::logic_error("non-exact polynomial division");
  return q;
}

ExactPolynomial ExactPolynomial::monic() const {
  if (is_zero()) return *this;
  return (*this) * (ExactScalar(1) / leading());
}

std::string ExactPolynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const ExactScalar& c = coeffs_[i];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool needs_parens = !c.is_rational() && c.rat() != 0;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << (needs_parens ? "(" + cs + ")" : cs);
      continue;
    }
    if (c == ExactScalar(1)) {
    } else if (c == ExactScalar(-1)) {
      out << "-";
    } else {
      out << (needs_parens ? "(" + cs + ")" : cs) << "*";
    }
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// gcd and square-free decomposition
// ---------------------------------------------------------------------------

namespace {

Integer integer_gcd(const Integer& a, const Integer& b) {
  return boost::multiprecision::gcd(a, b);
}

Integer integer_lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return a / integer_gcd(a, b) * b;
}

// Scale so that all rational coordinates become integers with overall
// content 1; removes the coefficient blow-up of the Euclidean remainders.
ExactPolynomial primitive_part(const ExactPolynomial& p) {
  if (p.is_zero()) return p;
  Integer denom_lcm = 1;
  for (const auto& c : p.coeffs()) {
    denom_lcm = integer_lcm(denom_lcm, boost::multiprecision::denominator(c.rat()));
    denom_lcm = integer_lcm(denom_lcm, boost::multiprecision::denominator(c.irr()));
  }
  Integer content = 0;
  std::vector<ExactScalar> scaled;
  scaled.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Rational a = c.rat() * denom_lcm;
    Rational b = c.irr() * denom_lcm;
    content = integer_gcd(content, boost::multiprecision::numerator(a));
    content = integer_gcd(content, boost::multiprecision::numerator(b));
    scaled.emplace_back(a, b);
  }
  if (content == 0) content = 1;
  std::vector<ExactScalar> result;
  result.reserve(scaled.size());
  for (const auto& c : scaled)
    result.emplace_back(c.rat() / Rational(content), c.irr() / Rational(content));
  return ExactPolynomial(std::move(result), p.field());
}

}  // namespace

ExactPolynomial poly_gcd(const ExactPolynomial& a, const ExactPolynomial& b) {
  ExactPolynomial A = primitive_part(a);
  ExactPolynomial B = primitive_part(b);
  if (A.degree() < B.degree()) std::swap(A, B);
  while (!B.is_zero()) {
    auto [q, r] = A.divmod(B);
    (void)q;
    A = std::move(B);
    B = primitive_part(r);
  }
  return A.monic();
}

std::vector<std::pair<ExactPolynomial, int>> square_free_decomposition(
    const ExactPolynomial& F) {
  std::vector<std::pair<ExactPolynomial, int>> result;
  if (F.degree() < 1) return result;

  ExactPolynomial f = F.monic();
  ExactPolynomial fp = f.derivative();
  ExactPolynomial g = poly_gcd(f, fp);
  ExactPolynomial w = f.divexact(g);
  ExactPolynomial y = fp.divexact(g);
  ExactPolynomial z = y - w.derivative();
  int multiplicity = 1;
  while (w.degree() > 0) {
    ExactPolynomial factor = poly_gcd(w, z);
    if (factor.degree() > 0) result.emplace_back(factor, multiplicity);
    w = w.divexact(factor);
    y = z.divexact(factor);
    z = y - w.derivative();
    ++multiplicity;
  }
  return result;
}

}  // namespace dessins
