#pragma once

#include <map>
#include <string>

namespace multipark {

// Exact integer Laurent polynomial in q; exponents may be negative.
class LaurentPolynomial {
 public:
  using Terms = std::map<int, long long>;

  LaurentPolynomial() = default;  // zero
  static LaurentPolynomial constant(long long c);
  static LaurentPolynomial monomial(long long coeff, int exp);

  bool is_zero() const { return terms_.empty(); }
  long long coeff(int exp) const;
  int min_exp() const;  // 0 for the zero polynomial
  int max_exp() const;
  const Terms& terms() const { return terms_; }

  void add_term(int exp, long long coeff);

  LaurentPolynomial& operator+=(const LaurentPolynomial& o);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b);
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);

  LaurentPolynomial shifted(int k) const;             // multiply by q^k
  LaurentPolynomial reciprocal_substitution() const;  // q -> 1/q
  long long eval_one() const;                         // value at q = 1

  // Frozen text format, e.g. "q^-1 + 2", "q^4 + 2*q^3", "q + 2".
  // Plain polynomials print in descending exponent order; once a negative
  // exponent is present the whole polynomial prints ascending instead.
  std::string to_string() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;  // exponent -> nonzero coefficient
};

}  // namespace multipark
