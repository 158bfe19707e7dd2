#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <string>

namespace tqsim {

// Integer-coefficient Laurent polynomial in the bracket variable A. Exact
// arithmetic only; zero coefficients are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(std::int64_t coeff, int exponent);
  static LaurentPoly constant(std::int64_t c) { return monomial(c, 0); }

  bool is_zero() const { return coeffs_.empty(); }
  std::int64_t coeff(int exponent) const;
  const std::map<int, std::int64_t>& terms() const { return coeffs_; }

  void add_term(int exponent, std::int64_t coeff);

  LaurentPoly operator+(const LaurentPoly& rhs) const;
  LaurentPoly operator-(const LaurentPoly& rhs) const;
  LaurentPoly operator*(const LaurentPoly& rhs) const;
  bool operator==(const LaurentPoly& rhs) const { return coeffs_ == rhs.coeffs_; }

  std::complex<double> eval(std::complex<double> a) const;

  // "exponent:coefficient" pairs, ascending exponent, space separated.
  std::string exponent_list() const;
  // Rendered in A, e.g. "-A^4 - A^-4".
  std::string to_string_A() const;
  // Rendered in t via t = A^-4, e.g. "-t^5/2 - t^1/2". Exponents that are
  // not multiples of 4 print as quarters/halves.
  std::string to_string_t() const;

 private:
  std::map<int, std::int64_t> coeffs_;
};

}  // namespace tqsim
