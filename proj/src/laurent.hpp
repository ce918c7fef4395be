#pragma once

#include <gmpxx.h>

#include <map>
#include <string>

namespace qtqft {

using BigInt = mpz_class;

// Sparse Laurent polynomial in the formal degree variable q with exact
// arbitrary-precision integer coefficients. Zero coefficients are never
// stored, so equality of the term maps is equality of values.
class LaurentInt {
 public:
  LaurentInt() = default;
  static LaurentInt monomial(BigInt coeff, int exponent = 0);
  static LaurentInt one() { return monomial(1, 0); }

  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::map<int, BigInt>& terms() const& { return terms_; }
  void terms() && = delete;  // iterating a temporary's map would dangle

  BigInt coeff(int exponent) const;
  int min_exponent() const;  // throws on zero polynomial
  int max_exponent() const;

  void add_term(int exponent, const BigInt& coeff);

  LaurentInt& operator+=(const LaurentInt& other);
  LaurentInt& operator-=(const LaurentInt& other);
  LaurentInt& operator*=(const LaurentInt& other);
  friend LaurentInt operator+(LaurentInt a, const LaurentInt& b) { return a += b; }
  friend LaurentInt operator-(LaurentInt a, const LaurentInt& b) { return a -= b; }
  friend LaurentInt operator*(const LaurentInt& a, const LaurentInt& b);

  LaurentInt shifted(int dexponent) const;  // multiply by q^dexponent
  LaurentInt negated() const;

  BigInt at_one() const;  // q = 1 specialization (sum of coefficients)
  double at_one_double() const { return at_one().get_d(); }

  bool operator==(const LaurentInt& other) const { return terms_ == other.terms_; }
  bool operator!=(const LaurentInt& other) const { return !(*this == other); }

  // Human-readable form, e.g. "1", "q", "2*q^-1 + 3".
  std::string to_string() const;

 private:
  std::map<int, BigInt> terms_;
};

}  // namespace qtqft
