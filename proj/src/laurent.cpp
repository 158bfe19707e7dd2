#include "tqsim/laurent.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace tqsim {

LaurentPoly LaurentPoly::monomial(std::int64_t coeff, int exponent) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

std::int64_t LaurentPoly::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(int exponent, std::int64_t coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = coeffs_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) coeffs_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& rhs) const {
  LaurentPoly out = *this;
  for (const auto& [e, c] : rhs.coeffs_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& rhs) const {
  LaurentPoly out;
  for (const auto& [e1, c1] : coeffs_)
    for (const auto& [e2, c2] : rhs.coeffs_) out.add_term(e1 + e2, c1 * c2);
  return out;
}

std::complex<double> LaurentPoly::eval(std::complex<double> a) const {
  std::complex<double> sum(0.0, 0.0);
  for (const auto& [e, c] : coeffs_)
    sum += static_cast<double>(c) * std::pow(a, e);
  return sum;
}

std::string LaurentPoly::exponent_list() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs_) {
    if (!first) os << ' ';
    os << e << ':' << c;
    first = false;
  }
  if (first) os << "0:0";
  return os.str();
}

namespace {

void append_term(std::ostringstream& os, bool first, std::int64_t c,
                 const std::string& var_part) {
  if (first) {
    if (c < 0) os << '-';
  } else {
    os << (c < 0 ? " - " : " + ");
  }
  const std::int64_t mag = std::abs(c);
  if (mag != 1 || var_part.empty()) os << mag;
  os << var_part;
}

std::string power_string(const std::string& var, int num, int den) {
  // num/den reduced; den in {1,2,4}.
  if (num == 0) return "";
  std::ostringstream os;
  os << var << '^';
  if (den == 1)
    os << num;
  else
    os << num << '/' << den;
  return os.str();
}

}  // namespace

std::string LaurentPoly::to_string_A() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    append_term(os, first, it->second, power_string("A", it->first, 1));
    first = false;
  }
  return os.str();
}

std::string LaurentPoly::to_string_t() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // t = A^-4: descending A exponent is ascending t exponent; print highest
  // t power first.
  for (const auto& [e, c] : coeffs_) {
    int num = -e;  // power of t in quarters
    int den = 4;
    int g = std::gcd(std::abs(num), den);
    if (g > 0) {
      num /= g;
      den /= g;
    }
    append_term(os, first, c, power_string("t", num, den));
    first = false;
  }
  return os.str();
}

}  // namespace tqsim
