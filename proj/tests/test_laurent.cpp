#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "multipark/json_io.hpp"
#include "multipark/laurent.hpp"

using namespace multipark;

TEST_CASE("arithmetic is exact and zero terms vanish") {
  LaurentPolynomial p = LaurentPolynomial::monomial(1, -1) + LaurentPolynomial::constant(2);
  CHECK(p.coeff(-1) == 1);
  CHECK(p.coeff(0) == 2);
  CHECK(p.eval_one() == 3);

  LaurentPolynomial q = p;
  q.add_term(-1, -1);
  CHECK(q.coeff(-1) == 0);
  CHECK(q.terms().size() == 1);

  LaurentPolynomial prod = p * p;  // (q^-1 + 2)^2 = q^-2 + 4q^-1 + 4
  CHECK(prod.coeff(-2) == 1);
  CHECK(prod.coeff(-1) == 4);
  CHECK(prod.coeff(0) == 4);
}

TEST_CASE("shift and reciprocal substitution") {
  LaurentPolynomial p = LaurentPolynomial::monomial(1, -1) + LaurentPolynomial::constant(2);
  LaurentPolynomial shifted = p.shifted(3);  // q^2 + 2q^3
  CHECK(shifted.coeff(2) == 1);
  CHECK(shifted.coeff(3) == 2);
  LaurentPolynomial recip = p.reciprocal_substitution();  // q + 2
  CHECK(recip.coeff(1) == 1);
  CHECK(recip.coeff(0) == 2);
  CHECK(recip.reciprocal_substitution() == p);
}

TEST_CASE("frozen text format") {
  LaurentPolynomial P = LaurentPolynomial::monomial(1, -1) + LaurentPolynomial::constant(2);
  CHECK(P.to_string() == "q^-1 + 2");

  LaurentPolynomial Pbar = LaurentPolynomial::monomial(1, 4) + LaurentPolynomial::monomial(2, 3);
  CHECK(Pbar.to_string() == "q^4 + 2*q^3");

  LaurentPolynomial I = LaurentPolynomial::monomial(1, 1) + LaurentPolynomial::constant(2);
  CHECK(I.to_string() == "q + 2");

  CHECK(LaurentPolynomial().to_string() == "0");
  CHECK(LaurentPolynomial::constant(1).to_string() == "1");
  CHECK(LaurentPolynomial::monomial(1, -1).to_string() == "q^-1");
  CHECK(LaurentPolynomial::monomial(3, 2).to_string() == "3*q^2");

  // mixed signs print ascending, pure polynomials descending
  LaurentPolynomial mixed;
  mixed.add_term(-2, 1);
  mixed.add_term(0, 5);
  mixed.add_term(2, 3);
  CHECK(mixed.to_string() == "q^-2 + 5 + 3*q^2");
}

TEST_CASE("json round trip") {
  LaurentPolynomial p;
  p.add_term(-1, 1);
  p.add_term(0, 2);
  p.add_term(7, -3);
  CHECK(poly_from_json_text(poly_to_json_text(p)) == p);
  CHECK(poly_to_json_text(LaurentPolynomial()) == "{}");
}
