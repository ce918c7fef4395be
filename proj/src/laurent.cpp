#include "laurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qtqft {

LaurentInt LaurentInt::monomial(BigInt coeff, int exponent) {
  LaurentInt out;
  if (coeff != 0) out.terms_.emplace(exponent, std::move(coeff));
  return out;
}

BigInt LaurentInt::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? BigInt(0) : it->second;
}

int LaurentInt::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentInt::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentInt::add_term(int exponent, const BigInt& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentInt& LaurentInt::operator+=(const LaurentInt& other) {
  for (const auto& [exp, c] : other.terms_) add_term(exp, c);
  return *this;
}

LaurentInt& LaurentInt::operator-=(const LaurentInt& other) {
  for (const auto& [exp, c] : other.terms_) add_term(exp, BigInt(-c));
  return *this;
}

LaurentInt operator*(const LaurentInt& a, const LaurentInt& b) {
  LaurentInt out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea + eb, ca * cb);
    }
  }
  return out;
}

LaurentInt& LaurentInt::operator*=(const LaurentInt& other) {
  *this = *this * other;
  return *this;
}

LaurentInt LaurentInt::shifted(int dexponent) const {
  LaurentInt out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp + dexponent, c);
  return out;
}

LaurentInt LaurentInt::negated() const {
  LaurentInt out;
  for (const auto& [exp, c] : terms_) out.terms_.emplace(exp, BigInt(-c));
  return out;
}

BigInt LaurentInt::at_one() const {
  BigInt total = 0;
  for (const auto& [exp, c] : terms_) total += c;
  return total;
}

std::string LaurentInt::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool unit = (mag == 1);
    if (exp == 0) {
      out << mag.get_str();
    } else {
      if (!unit) out << mag.get_str() << '*';
      out << 'q';
      if (exp != 1) out << '^' << exp;
    }
  }
  return out.str();
}

}  // namespace qtqft
