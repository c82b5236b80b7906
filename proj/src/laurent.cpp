#include "multipark/laurent.hpp"

namespace multipark {

LaurentPolynomial LaurentPolynomial::constant(long long c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(long long coeff, int exp) {
  LaurentPolynomial p;
  p.add_term(exp, coeff);
  return p;
}

long long LaurentPolynomial::coeff(int exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPolynomial::min_exp() const { return terms_.empty() ? 0 : terms_.begin()->first; }

int LaurentPolynomial::max_exp() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

void LaurentPolynomial::add_term(int exp, long long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exp, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) {
  a += b;
  return a;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(ea + eb, ca * cb);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
  return out;
}

LaurentPolynomial LaurentPolynomial::reciprocal_substitution() const {
  LaurentPolynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
  return out;
}

long long LaurentPolynomial::eval_one() const {
  long long s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

namespace {

std::string render_term(int exp, long long coeff) {
  if (exp == 0) return std::to_string(coeff);
  std::string q = exp == 1 ? "q" : "q^" + std::to_string(exp);
  if (coeff == 1) return q;
  return std::to_string(coeff) + "*" + q;
}

}  // namespace

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  auto append = [&](int exp, long long coeff) {
    if (!out.empty()) out += " + ";
    out += render_term(exp, coeff);
  };
  if (min_exp() < 0) {
    for (auto it = terms_.begin(); it != terms_.end(); ++it) append(it->first, it->second);
  } else {
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) append(it->first, it->second);
  }
  return out;
}

}  // namespace multipark
